#pragma once

// Command-line front end: locus, poly, verify, harmonics and suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csp/errors.hpp"
#include "csp/harmonics.hpp"
#include "csp/loci.hpp"
#include "csp/sieving.hpp"
#include "csp/suite.hpp"

namespace csp::cli {

enum ExitCode : int { Ok = 0, CheckFailed = 1, UsageError = 2, BudgetExceeded = 3 };

enum class Format { Json, Csv, Latex, Pretty };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "latex") return Format::Latex;
  if (s == "pretty") return Format::Pretty;
  throw DomainError("unknown output format '" + s + "' (expected json, csv, latex or pretty)");
}

struct RunConfig {
  std::string family;
  int n = 0;
  int k = 0;
  std::vector<int> mu;
  int a = 0;
  std::string format = "pretty";
  std::string out_path;
  bool list = false;

  bool hilbert = false;
  bool frobenius = false;
  bool check_presentation = false;
  std::string recipe;
  std::string oracle;
  HarmonicsBudget budget;

  int criterion = 0;
  SuiteOptions suite;
};

inline std::string latex_poly(const SparsePoly& p) {
  std::string s = std::regex_replace(p.to_string(), std::regex(R"(\^(\d+))"), "^{$1}");
  std::erase(s, '*');
  return s;
}

inline std::string latex_escape(std::string s) {
  return std::regex_replace(s, std::regex(R"(([_{}#%&$]))"), "\\$1");
}

namespace detail {

inline LocusSpec locus_from(const RunConfig& c) {
  const LocusFamily f = parse_locus_family(c.family);
  switch (f) {
    case LocusFamily::X: return LocusSpec::x(c.n, c.k);
    case LocusFamily::Y: return LocusSpec::y(c.n, c.k);
    case LocusFamily::Z: return LocusSpec::z(c.n, c.k);
    case LocusFamily::Springer: return LocusSpec::springer(c.n);
    case LocusFamily::Tanisaki: {
      if (c.mu.empty()) throw DomainError("the tanisaki locus requires --mu");
      WeakComposition mu(c.mu);
      const int a = c.a == 0 ? mu.length() : c.a;
      validate_tanisaki(mu, a);
      return LocusSpec::tanisaki(std::move(mu), a);
    }
  }
  throw InternalError("locus_from: unknown family");
}

inline SievingParams params_from(const RunConfig& c) {
  if (!c.mu.empty()) return SievingParams::tanisaki(WeakComposition(c.mu), c.a);
  return SievingParams::nk(c.n, c.k);
}

inline nlohmann::json params_json(const LocusSpec& s) {
  nlohmann::json p;
  p["n"] = s.n;
  p["k"] = s.k;
  if (s.family == LocusFamily::Tanisaki) {
    p["mu"] = s.mu.parts();
    p["a"] = s.a;
  }
  return p;
}

/// The closed-form orbit family whose sieving polynomial the oracle should reproduce.
inline std::optional<Family> orbit_family_for(LocusFamily l, Subgroup g) {
  for (const auto& info : family_table())
    if (info.locus == l && info.group == g) return info.family;
  return std::nullopt;
}

inline std::string words_table(const Locus& l, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Csv:
      os << "word\n";
      for (const auto& w : l.elements()) os << w.to_string() << "\n";
      break;
    case Format::Latex:
      os << "\\begin{tabular}{l}\n\\hline\nword \\\\\n\\hline\n";
      for (const auto& w : l.elements()) os << w.to_string() << " \\\\\n";
      os << "\\hline\n\\end{tabular}\n";
      break;
    default:
      for (const auto& w : l.elements()) os << "  " << w.to_string() << "\n";
  }
  return os.str();
}

inline nlohmann::json schur_json(const SchurVector& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [shape, c] : v.coeffs()) j[shape.to_string()] = c.to_string();
  return j;
}

inline std::string schur_csv(const SchurVector& v) {
  std::string s = "shape,coefficient\n";
  for (const auto& [shape, c] : v.coeffs()) s += "\"" + shape.to_string() + "\",\"" + c.to_string() + "\"\n";
  return s;
}

inline std::string schur_latex(const SchurVector& v) {
  std::string s = "\\begin{tabular}{ll}\n\\hline\n$\\lambda$ & coefficient \\\\\n\\hline\n";
  for (const auto& [shape, c] : v.coeffs()) s += shape.to_string() + " & $" + latex_poly(c) + "$ \\\\\n";
  return s + "\\hline\n\\end{tabular}\n";
}

inline int cmd_locus(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Format fmt = parse_format(c.format);
  const Locus l = enumerate_locus(locus_from(c));
  if (l.warning()) err << "warning: " << *l.warning() << "\n";
  switch (fmt) {
    case Format::Json: {
      nlohmann::json j;
      j["family"] = to_string(l.spec().family);
      j["params"] = params_json(l.spec());
      j["size"] = l.size();
      j["warning"] = l.warning() ? nlohmann::json(*l.warning()) : nlohmann::json(nullptr);
      if (c.list) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : l.elements()) words.push_back(w.to_string());
        j["elements"] = std::move(words);
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
    case Format::Latex:
      if (c.list)
        out << words_table(l, fmt);
      else
        out << (fmt == Format::Csv ? "locus,size\n\"" + l.spec().to_string() + "\"," + std::to_string(l.size()) + "\n"
                                   : latex_escape(l.spec().to_string()) + ": $" + std::to_string(l.size()) + "$\n");
      break;
    case Format::Pretty:
      out << l.spec().to_string() << ": " << l.size() << " points\n";
      if (c.list) out << words_table(l, fmt);
      break;
  }
  return Ok;
}

inline int cmd_poly(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Format fmt = parse_format(c.format);
  const Family f = parse_family(c.family);
  const SparsePoly p = sieving_polynomial(f, params_from(c));
  switch (fmt) {
    case Format::Json: {
      const auto inst_params = normalize(f, params_from(c));
      nlohmann::json j;
      j["family"] = to_string(f);
      j["params"] = {{"n", inst_params.n}, {"k", inst_params.k}};
      if (!c.mu.empty()) {
        j["params"]["mu"] = inst_params.mu.parts();
        j["params"]["a"] = inst_params.a;
      }
      j["polynomial"] = p.to_string();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "q_exponent,t_exponent,coefficient\n";
      for (const auto& [e, coeff] : p.terms()) out << e.q << "," << e.t << "," << coeff.get_str() << "\n";
      break;
    case Format::Latex: out << "$" << latex_poly(p) << "$\n"; break;
    case Format::Pretty: out << p.to_string() << "\n"; break;
  }
  return Ok;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Format fmt = parse_format(c.format);
  const Family f = parse_family(c.family);
  const Report rep = verify(f, params_from(c));
  switch (fmt) {
    case Format::Json: out << rep.to_json().dump(2) << "\n"; break;
    case Format::Csv: out << rep.to_csv(); break;
    case Format::Latex: out << rep.to_latex(); break;
    case Format::Pretty: out << rep.to_pretty(); break;
  }
  return rep.all_ok ? Ok : CheckFailed;
}

inline int cmd_harmonics(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Format fmt = parse_format(c.format);
  const int modes = c.hilbert + c.frobenius + c.check_presentation + !c.oracle.empty();
  if (modes != 1)
    throw DomainError("harmonics needs exactly one of --hilbert, --frobenius, --check-presentation, --oracle");
  const LocusSpec spec = locus_from(c);
  const Locus l = enumerate_locus(spec);
  if (l.warning()) err << "warning: " << *l.warning() << "\n";

  nlohmann::json j;
  j["locus"] = spec.to_string();
  std::string pretty;
  std::string csv;
  std::string latex;
  bool ok = true;

  if (c.hilbert) {
    if (l.empty()) throw DomainError("harmonics: the locus is empty");
    const auto result = run_harmonics(l, c.budget);
    const SparsePoly h = result.quotient.hilbert();
    j["hilbert"] = h.to_string();
    j["dimension"] = l.size();
    pretty = "Hilb(q) = " + h.to_string() + "\n";
    csv = "degree,dimension\n";
    for (const auto& [e, coeff] : h.terms()) csv += std::to_string(e.q) + "," + coeff.get_str() + "\n";
    latex = "$" + latex_poly(h) + "$\n";
  } else if (c.frobenius) {
    const SchurVector v = graded_frobenius(l, c.budget);
    const SchurVector stated = stated_frobenius(spec);
    ok = v == stated;
    j["frobenius"] = schur_json(v);
    j["matches_stated"] = ok;
    pretty = "grFrob = " + v.to_string() + "\n" + (ok ? "matches the stated expansion\n" : "DIFFERS from the stated expansion: " + stated.to_string() + "\n");
    csv = schur_csv(v);
    latex = schur_latex(v);
  } else if (c.check_presentation) {
    const PresentationRecipe recipe = c.recipe.empty() ? default_recipe(spec.family) : parse_recipe(c.recipe);
    ok = verify_presentation(l, recipe, c.budget);
    j["recipe"] = to_string(recipe);
    j["presentation_holds"] = ok;
    pretty = "presentation (" + to_string(recipe) + "): " + (ok ? "holds" : "FAILS") + "\n";
    csv = "recipe,holds\n" + to_string(recipe) + "," + (ok ? "true" : "false") + "\n";
    latex = latex_escape(to_string(recipe)) + ": " + (ok ? "holds" : "fails") + "\n";
  } else {
    const Subgroup g = parse_subgroup(c.oracle);
    const SparsePoly p = oracle_csp_poly(l, g, c.budget);
    j["group"] = to_string(g);
    j["oracle"] = p.to_string();
    pretty = "Hilb((C[x]/T(X))^" + to_string(g) + "; q) = " + p.to_string() + "\n";
    if (const auto fam = orbit_family_for(spec.family, g)) {
      const SievingParams params = spec.family == LocusFamily::Tanisaki ? SievingParams::tanisaki(spec.mu, spec.a)
                                                                        : SievingParams::nk(spec.n, spec.k);
      const SparsePoly closed = sieving_polynomial(*fam, params);
      ok = closed == p;
      j["closed_form_family"] = to_string(*fam);
      j["closed_form"] = closed.to_string();
      j["matches_closed_form"] = ok;
      pretty += to_string(*fam) + " closed form: " + closed.to_string() + (ok ? " (match)\n" : " (MISMATCH)\n");
    }
    csv = "degree,dimension\n";
    for (const auto& [e, coeff] : p.terms()) csv += std::to_string(e.q) + "," + coeff.get_str() + "\n";
    latex = "$" + latex_poly(p) + "$\n";
  }

  switch (fmt) {
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Csv: out << csv; break;
    case Format::Latex: out << latex; break;
    case Format::Pretty: out << pretty; break;
  }
  return ok ? Ok : CheckFailed;
}

inline int cmd_suite(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Format fmt = parse_format(c.format);
  std::vector<CriterionResult> results;
  for (const auto& def : criteria()) {
    if (c.criterion != 0 && def.id != c.criterion) continue;
    results.push_back(run_criterion(def, c.suite));
    if (fmt == Format::Pretty) out << results.back().summary() << std::endl;
  }
  if (results.empty()) throw DomainError("unknown criterion " + std::to_string(c.criterion));
  bool all = true;
  for (const auto& r : results) all = all && r.passed();
  switch (fmt) {
    case Format::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : results)
        rows.push_back({{"criterion", r.id},
                        {"title", r.title},
                        {"passed", r.passed()},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"limit_seconds", r.limit_seconds}});
      out << nlohmann::json{{"criteria", rows}, {"all_passed", all}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "criterion,title,passed,checks,failures\n";
      for (const auto& r : results)
        out << r.id << ",\"" << r.title << "\"," << (r.passed() ? "true" : "false") << "," << r.checks << ","
            << r.failures.size() << "\n";
      break;
    case Format::Latex:
      out << "\\begin{tabular}{rlrc}\n\\hline\ncriterion & title & checks & passed \\\\\n\\hline\n";
      for (const auto& r : results)
        out << r.id << " & " << latex_escape(r.title) << " & " << r.checks << " & "
            << (r.passed() ? "\\checkmark" : "$\\times$") << " \\\\\n";
      out << "\\hline\n\\end{tabular}\n";
      break;
    case Format::Pretty:
      for (const auto& r : results)
        for (const auto& f : r.failures) out << "  criterion " << r.id << " failed: " << f << "\n";
      out << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
      break;
  }
  return all ? Ok : CheckFailed;
}

}  // namespace detail

/// Parses args (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Cyclic and bicyclic sieving verifier with orbit harmonics"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool family_required) {
    auto* fam = sub->add_option("--family", cfg.family, "family id");
    if (family_required) fam->required();
    sub->add_option("--n", cfg.n, "word length");
    sub->add_option("--k", cfg.k, "alphabet size");
    sub->add_option("--mu", cfg.mu, "Tanisaki content, comma separated, order preserved")->delimiter(',');
    sub->add_option("--a", cfg.a, "cyclic symmetry order of mu (defaults to its length)");
    sub->add_option("--output", cfg.format, "json, csv, latex or pretty")
        ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
    sub->add_option("--out-file", cfg.out_path, "write to this file instead of standard output");
  };

  auto* locus = app.add_subcommand("locus", "enumerate a point locus");
  add_common(locus, true);
  locus->add_flag("--list", cfg.list, "print the elements");

  auto* poly = app.add_subcommand("poly", "print a closed-form sieving polynomial");
  add_common(poly, true);

  auto* ver = app.add_subcommand("verify", "check a CSP or biCSP by fixed-point counting");
  add_common(ver, true);

  auto* harm = app.add_subcommand("harmonics", "run the orbit-harmonics pipeline on a locus");
  add_common(harm, false);
  harm->add_option("--locus", cfg.family, "X, Y, Z, tanisaki or springer");
  harm->add_flag("--hilbert", cfg.hilbert, "Hilbert series of C[x]/T(X)");
  harm->add_flag("--frobenius", cfg.frobenius, "graded Frobenius image, compared with the stated expansion");
  harm->add_flag("--check-presentation", cfg.check_presentation, "check the stated generators of T(X)");
  harm->add_option("--recipe", cfg.recipe, "powers, complete-homogeneous or hrs");
  harm->add_option("--oracle", cfg.oracle, "Sn, Cn or Hr: invariant Hilbert series");
  harm->add_option("--max-n", cfg.budget.max_n, "budget: largest n");
  harm->add_option("--max-points", cfg.budget.max_points, "budget: largest locus");
  harm->add_option("--max-pairs", cfg.budget.max_pairs, "budget: S-pair limit");

  auto* suite = app.add_subcommand("suite", "run the acceptance matrix");
  suite->add_option("--max-n", cfg.suite.max_n, "cap on n");
  suite->add_option("--max-k", cfg.suite.max_k, "cap on k");
  suite->add_option("--criterion", cfg.criterion, "run a single criterion (1-9)");
  suite->add_option("--output", cfg.format, "json, csv, latex or pretty")
      ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  suite->add_option("--out-file", cfg.out_path, "write to this file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }

  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return UsageError;
    }
  }
  std::ostream& sink = cfg.out_path.empty() ? out : file;

  try {
    if (*locus) return detail::cmd_locus(cfg, sink, err);
    if (*poly) return detail::cmd_poly(cfg, sink, err);
    if (*ver) return detail::cmd_verify(cfg, sink, err);
    if (*harm) {
      if (cfg.family.empty()) throw DomainError("harmonics requires --locus");
      return detail::cmd_harmonics(cfg, sink, err);
    }
    return detail::cmd_suite(cfg, sink, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return BudgetExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return CheckFailed;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace csp::cli
