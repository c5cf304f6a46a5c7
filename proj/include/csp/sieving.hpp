#pragma once

// Closed-form sieving polynomials, the CSP / biCSP verification engines and
// the orbit-harmonics oracle.

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "csp/cyclotomic.hpp"
#include "csp/errors.hpp"
#include "csp/harmonics.hpp"
#include "csp/kostka_foulkes.hpp"
#include "csp/loci.hpp"
#include "csp/sparse_poly.hpp"
#include "csp/symfunc.hpp"
#include "csp/tableau.hpp"

namespace csp {

enum class Family {
  WordBicspX,
  WordBicspY,
  WordBicspZ,
  WCompCsp,
  SubsetCsp,
  CompCsp,
  NecklaceX,
  NecklaceY,
  NecklaceZ,
  GraphX,
  GraphY,
  GraphZ,
  TanisakiBicsp,
  TanisakiTrivial,
  TanisakiNecklace,
  TanisakiGraph,
  SpringerBicsp,
};

struct FamilyInfo {
  Family family;
  const char* id;
  bool bicyclic;
  LocusFamily locus;
  std::optional<Subgroup> group;  // orbit families only
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table{
      {Family::WordBicspX, "word-bicsp-X", true, LocusFamily::X, std::nullopt},
      {Family::WordBicspY, "word-bicsp-Y", true, LocusFamily::Y, std::nullopt},
      {Family::WordBicspZ, "word-bicsp-Z", true, LocusFamily::Z, std::nullopt},
      {Family::WCompCsp, "wcomp-csp", false, LocusFamily::X, Subgroup::Sn},
      {Family::SubsetCsp, "subset-csp", false, LocusFamily::Y, Subgroup::Sn},
      {Family::CompCsp, "comp-csp", false, LocusFamily::Z, Subgroup::Sn},
      {Family::NecklaceX, "necklace-X", false, LocusFamily::X, Subgroup::Cn},
      {Family::NecklaceY, "necklace-Y", false, LocusFamily::Y, Subgroup::Cn},
      {Family::NecklaceZ, "necklace-Z", false, LocusFamily::Z, Subgroup::Cn},
      {Family::GraphX, "graph-X", false, LocusFamily::X, Subgroup::Hr},
      {Family::GraphY, "graph-Y", false, LocusFamily::Y, Subgroup::Hr},
      {Family::GraphZ, "graph-Z", false, LocusFamily::Z, Subgroup::Hr},
      {Family::TanisakiBicsp, "tanisaki-bicsp", true, LocusFamily::Tanisaki, std::nullopt},
      {Family::TanisakiTrivial, "tanisaki-trivial", false, LocusFamily::Tanisaki, Subgroup::Sn},
      {Family::TanisakiNecklace, "tanisaki-necklace", false, LocusFamily::Tanisaki, Subgroup::Cn},
      {Family::TanisakiGraph, "tanisaki-graph", false, LocusFamily::Tanisaki, Subgroup::Hr},
      {Family::SpringerBicsp, "springer-bicsp", true, LocusFamily::Springer, std::nullopt},
  };
  return table;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : family_table())
    if (info.family == f) return info;
  throw InternalError("family_info: unregistered family");
}

inline std::string to_string(Family f) { return family_info(f).id; }

/// Accepts the ids above, optionally prefixed with "thm-".
inline Family parse_family(std::string id) {
  if (id.rfind("thm-", 0) == 0) id = id.substr(4);
  for (const auto& info : family_table())
    if (id == info.id) return info.family;
  std::string known;
  for (const auto& info : family_table()) known += (known.empty() ? "" : ", ") + std::string(info.id);
  throw DomainError("unknown family '" + id + "' (known: " + known + ")");
}

struct SievingParams {
  int n = 0;
  int k = 0;
  WeakComposition mu;  // Tanisaki families
  int a = 0;           // Tanisaki families; 0 means a = k

  static SievingParams nk(int n, int k) { return {n, k, {}, 0}; }
  static SievingParams tanisaki(WeakComposition mu, int a) {
    const int n = mu.size(), k = mu.length();
    return {n, k, std::move(mu), a};
  }
};

/// Fills in derived parameters and checks feasibility for the family.
inline SievingParams normalize(Family f, SievingParams p) {
  const auto& info = family_info(f);
  if (info.locus == LocusFamily::Tanisaki) {
    if (p.mu.length() == 0) throw DomainError(std::string(info.id) + " requires a content mu");
    p.n = p.mu.size();
    p.k = p.mu.length();
    if (p.a == 0) p.a = p.k;
    validate_tanisaki(p.mu, p.a);
  } else if (info.locus == LocusFamily::Springer) {
    if (p.n <= 0) throw DomainError("springer-bicsp requires n >= 1");
    p.k = p.n;
  }
  if (p.n <= 0 || p.k <= 0) throw DomainError(std::string(info.id) + " requires n >= 1 and k >= 1");
  if (info.locus == LocusFamily::Y && p.n > p.k)
    throw DomainError(std::string(info.id) + " requires n <= k (Y_{n,k} is empty when k < n)");
  if (info.locus == LocusFamily::Z && p.k > p.n)
    throw DomainError(std::string(info.id) + " requires k <= n (Z_{n,k} is empty when n < k)");
  if (info.group == Subgroup::Hr && p.n % 2 != 0)
    throw DomainError(std::string(info.id) + " requires an even n, got " + std::to_string(p.n));
  return p;
}

inline LocusSpec locus_spec(Family f, const SievingParams& raw) {
  const SievingParams p = normalize(f, raw);
  switch (family_info(f).locus) {
    case LocusFamily::X: return LocusSpec::x(p.n, p.k);
    case LocusFamily::Y: return LocusSpec::y(p.n, p.k);
    case LocusFamily::Z: return LocusSpec::z(p.n, p.k);
    case LocusFamily::Tanisaki: return LocusSpec::tanisaki(p.mu, p.a);
    case LocusFamily::Springer: return LocusSpec::springer(p.n);
  }
  throw InternalError("locus_spec: unknown locus family");
}

namespace detail {

/// sum over SYT(n) of q^maj [n - des - 1 choose n - k]_q weight(shape), weight given as SparsePoly.
template <class Weight>
SparsePoly hrs_sum(int n, int k, Weight&& weight) {
  SparsePoly total;
  for (const auto& lambda : partitions_of(n)) {
    const SparsePoly w = weight(lambda);
    if (w.is_zero()) continue;
    for (const auto& t : generate_syt(lambda)) {
      const auto [maj, des] = maj_des(t);
      total += SparsePoly::q(maj) * q_binomial(n - des - 1, n - k) * w;
    }
  }
  return total;
}

/// sum over mu in the box (l(mu) <= n, mu_1 < k) of q^{|mu|} weight(m(mu)).
template <class Weight>
SparsePoly box_sum(int n, int k, Weight&& weight) {
  SparsePoly total;
  for (const auto& mu : partitions_in_box(n, k - 1)) {
    const SparsePoly w = weight(m_of(mu, n, k));
    total += SparsePoly::q(mu.size()) * w;
  }
  return total;
}

inline long even_kostka_sum(const Partition& content, int n) {
  long s = 0;
  for (const auto& lambda : partitions_of(n))
    if (lambda.is_even()) s += kostka_number(lambda, WeakComposition(content.parts()));
  return s;
}

}  // namespace detail

/// The closed-form polynomial for a family; bivariate families use q for the
/// value action and t for the position action.
inline SparsePoly sieving_polynomial(Family f, const SievingParams& raw) {
  const SievingParams p = normalize(f, raw);
  const int n = p.n, k = p.k;
  switch (f) {
    case Family::WordBicspX:
      return detail::box_sum(n, k, [n](const Partition& m) { return q_multinomial(n, m.parts()).as_t(); });
    case Family::WordBicspY: {
      SparsePoly s;
      for (const auto& lambda : partitions_of(n)) s += fake_degree(lambda) * fake_degree(lambda).as_t();
      return q_binomial(k, n) * s;
    }
    case Family::WordBicspZ:
      return detail::hrs_sum(n, k, [](const Partition& lambda) { return fake_degree(lambda).as_t(); });
    case Family::WCompCsp: return q_binomial(n + k - 1, n);
    case Family::SubsetCsp: return q_binomial(k, n);
    case Family::CompCsp: return q_binomial(n - 1, k - 1);
    case Family::NecklaceX:
      return detail::box_sum(n, k, [n](const Partition& m) {
        return SparsePoly(count_maj_divisible(WeakComposition(m.parts()), n));
      });
    case Family::NecklaceY: {
      SparsePoly s;
      for (const auto& lambda : partitions_of(n)) s += fake_degree(lambda) * mpz_class(count_maj_divisible(lambda, n));
      return q_binomial(k, n) * s;
    }
    case Family::NecklaceZ:
      return detail::hrs_sum(n, k, [n](const Partition& lambda) { return SparsePoly(count_maj_divisible(lambda, n)); });
    case Family::GraphX:
      return detail::box_sum(n, k, [n](const Partition& m) { return SparsePoly(detail::even_kostka_sum(m, n)); });
    case Family::GraphY: {
      SparsePoly s;
      for (const auto& lambda : partitions_of(n))
        if (lambda.is_even()) s += fake_degree(lambda);
      return q_binomial(k, n) * s;
    }
    case Family::GraphZ:
      return detail::hrs_sum(n, k, [](const Partition& lambda) { return SparsePoly(lambda.is_even() ? 1 : 0); });
    case Family::TanisakiBicsp: {
      const Partition mu = p.mu.sorted();
      SparsePoly s;
      for (const auto& lambda : partitions_of(n)) s += kostka_foulkes(lambda, mu) * fake_degree(lambda).as_t();
      return s;
    }
    case Family::TanisakiTrivial: return SparsePoly(1);
    case Family::TanisakiNecklace: {
      const Partition mu = p.mu.sorted();
      SparsePoly s;
      for (const auto& lambda : partitions_of(n))
        s += kostka_foulkes(lambda, mu) * mpz_class(count_maj_divisible(lambda, n));
      return s;
    }
    case Family::TanisakiGraph: {
      const Partition mu = p.mu.sorted();
      SparsePoly s;
      for (const auto& lambda : partitions_of(n))
        if (lambda.is_even()) s += kostka_foulkes(lambda, mu);
      return s;
    }
    case Family::SpringerBicsp: {
      SparsePoly s;
      for (const auto& lambda : partitions_of(n)) s += fake_degree(lambda) * fake_degree(lambda).as_t();
      return s;
    }
  }
  throw InternalError("sieving_polynomial: unknown family");
}

/// The graded Frobenius image of a locus in closed form.
inline SchurVector stated_frobenius(const LocusSpec& spec) {
  const int n = spec.n, k = spec.k;
  SchurVector v(n);
  switch (spec.family) {
    case LocusFamily::X:
      for (const auto& mu : partitions_in_box(n, k - 1)) v += SparsePoly::q(mu.size()) * h_to_schur(m_of(mu, n, k));
      return v;
    case LocusFamily::Y:
      if (n > k) return v;
      for (const auto& lambda : partitions_of(n)) v.add(lambda, q_binomial(k, n) * fake_degree(lambda));
      return v;
    case LocusFamily::Z:
      if (k > n) return v;
      for (const auto& lambda : partitions_of(n))
        for (const auto& t : generate_syt(lambda)) {
          const auto [maj, des] = maj_des(t);
          v.add(lambda, SparsePoly::q(maj) * q_binomial(n - des - 1, n - k));
        }
      return v;
    case LocusFamily::Tanisaki: {
      const Partition mu = spec.mu.sorted();
      for (const auto& lambda : partitions_of(n)) v.add(lambda, kostka_foulkes(lambda, mu));
      return v;
    }
    case LocusFamily::Springer:
      for (const auto& lambda : partitions_of(n)) v.add(lambda, fake_degree(lambda));
      return v;
  }
  throw InternalError("stated_frobenius: unknown locus family");
}

/// A cyclic action together with its order and the variable it is bound to.
struct BoundAction {
  Action action;
  int order;
  std::string variable;
  std::string description;
};

struct SievingInstance {
  std::string family;
  std::vector<std::pair<std::string, nlohmann::json>> params;
  std::variant<Locus, OrbitSet> set;
  std::vector<BoundAction> actions;  // one (CSP) or two (biCSP: q first, then t)
  SparsePoly polynomial;
  std::vector<std::string> notes;

  std::size_t set_size() const {
    return std::visit([](const auto& s) { return s.size(); }, set);
  }

  std::string binding() const {
    std::string s;
    for (const auto& a : actions) {
      if (!s.empty()) s += "; ";
      s += a.variable + " <-> " + a.description + " (order " + std::to_string(a.order) + ")";
    }
    return s;
  }
};

inline long count_fixed_in(const std::variant<Locus, OrbitSet>& set, const Action& a) {
  return std::visit([&](const auto& s) { return count_fixed(s, a); }, set);
}

struct ReportRow {
  int r = 0;
  int s = 0;
  long fixed = 0;
  std::optional<mpz_class> value;  // set when the evaluation is an integer
  std::string value_text;
  bool ok = false;
};

struct Report {
  std::string family;
  std::vector<std::pair<std::string, nlohmann::json>> params;
  std::string binding;
  std::vector<ReportRow> rows;
  bool all_ok = false;
  std::vector<std::string> notes;
  bool bicyclic = false;

  nlohmann::json to_json() const {
    using nlohmann::json;
    json j;
    j["family"] = family;
    json p = json::object();
    for (const auto& [key, val] : params) p[key] = val;
    j["params"] = std::move(p);
    j["binding"] = binding;
    json rs = json::array();
    for (const auto& row : rows) {
      json jr = json::object();
      jr["r"] = row.r;
      jr["s"] = row.s;
      jr["fixed"] = row.fixed;
      if (row.value && row.value->fits_slong_p())
        jr["value"] = row.value->get_si();
      else
        jr["value"] = row.value_text;
      jr["ok"] = row.ok;
      rs.push_back(std::move(jr));
    }
    j["rows"] = std::move(rs);
    j["all_ok"] = all_ok;
    j["notes"] = notes;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "r,s,fixed,value,ok\n";
    for (const auto& row : rows)
      os << row.r << "," << row.s << "," << row.fixed << ",\"" << row.value_text << "\"," << (row.ok ? "true" : "false")
         << "\n";
    return os.str();
  }

  std::string to_latex() const {
    std::ostringstream os;
    os << "\\begin{tabular}{" << (bicyclic ? "rr" : "r") << "rrc}\n\\hline\n";
    os << (bicyclic ? "$r$ & $s$" : "$r$") << " & fixed & value & ok \\\\\n\\hline\n";
    for (const auto& row : rows) {
      os << row.r;
      if (bicyclic) os << " & " << row.s;
      os << " & " << row.fixed << " & $" << row.value_text << "$ & " << (row.ok ? "\\checkmark" : "$\\times$")
         << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
  }

  std::string to_pretty() const {
    std::ostringstream os;
    os << family << " (";
    bool first = true;
    for (const auto& [key, val] : params) {
      os << (first ? "" : ", ") << key << "=" << (val.is_string() ? val.get<std::string>() : val.dump());
      first = false;
    }
    os << ")\n";
    os << "binding: " << binding << "\n";
    for (const auto& note : notes) os << "note: " << note << "\n";
    os << (bicyclic ? "   r    s" : "   r") << "     fixed  value\n";
    for (const auto& row : rows) {
      char buf[64];
      if (bicyclic)
        std::snprintf(buf, sizeof buf, "%4d %4d %9ld  ", row.r, row.s, row.fixed);
      else
        std::snprintf(buf, sizeof buf, "%4d %9ld  ", row.r, row.fixed);
      os << buf << row.value_text << (row.ok ? "" : "   MISMATCH") << "\n";
    }
    os << (all_ok ? "all checks passed" : "CHECK FAILED") << " (" << rows.size() << " cells)\n";
    return os.str();
  }
};

namespace detail {

inline ReportRow make_row(int r, int s, long fixed, const CycloElement& value) {
  ReportRow row;
  row.r = r;
  row.s = s;
  row.fixed = fixed;
  row.value = value.as_integer();
  row.value_text = row.value ? row.value->get_str() : value.to_string();
  row.ok = cyclo_equals_integer(value, fixed);
  return row;
}

inline Report report_shell(const SievingInstance& inst, bool bicyclic) {
  Report rep;
  rep.family = inst.family;
  rep.params = inst.params;
  rep.binding = inst.binding();
  rep.notes = inst.notes;
  rep.notes.push_back("polynomial: " + inst.polynomial.to_string());
  rep.bicyclic = bicyclic;
  return rep;
}

}  // namespace detail

/// Checks |X^{c^r}| = X(omega^r) for every r.
inline Report verify_csp(const SievingInstance& inst) {
  if (inst.actions.size() != 1) throw DomainError("verify_csp: expected exactly one action");
  if (!inst.polynomial.is_univariate()) throw DomainError("verify_csp: the polynomial must be univariate");
  const BoundAction& c = inst.actions.front();
  Report rep = detail::report_shell(inst, false);
  for (int r = 0; r < c.order; ++r) {
    const long fixed = count_fixed_in(inst.set, c.action.power(r));
    rep.rows.push_back(detail::make_row(r, 0, fixed, eval_at_unity(inst.polynomial, c.order, r, 0, c.order, 1)));
  }
  rep.all_ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ReportRow& row) { return row.ok; });
  return rep;
}

/// Checks |X^{(c^r, c'^s)}| = X(omega^r, zeta^s) over the full grid.
inline Report verify_bicsp(const SievingInstance& inst) {
  if (inst.actions.size() != 2) throw DomainError("verify_bicsp: expected exactly two actions");
  const BoundAction& cq = inst.actions[0];
  const BoundAction& ct = inst.actions[1];
  const auto* locus = std::get_if<Locus>(&inst.set);
  if (!locus) throw DomainError("verify_bicsp: bicyclic sieving is checked on loci");
  if (!actions_commute(*locus, cq.action, ct.action)) throw DomainError("verify_bicsp: the two actions do not commute");
  const int order = std::lcm(cq.order, ct.order);
  Report rep = detail::report_shell(inst, true);
  for (int r = 0; r < cq.order; ++r)
    for (int s = 0; s < ct.order; ++s) {
      const Action a = Action::composite({cq.action.power(r), ct.action.power(s)});
      const long fixed = count_fixed(*locus, a);
      rep.rows.push_back(detail::make_row(r, s, fixed, eval_at_unity(inst.polynomial, order, r, s, cq.order, ct.order)));
    }
  rep.all_ok = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ReportRow& row) { return row.ok; });
  return rep;
}

inline SievingInstance make_instance(Family f, const SievingParams& raw) {
  const SievingParams p = normalize(f, raw);
  const auto& info = family_info(f);
  SievingInstance inst{info.id, {}, Locus(LocusSpec{}, {}), {}, sieving_polynomial(f, p), {}};
  const LocusSpec spec = locus_spec(f, p);
  Locus locus = enumerate_locus(spec);
  if (info.locus == LocusFamily::Tanisaki) {
    inst.params = {{"mu", p.mu.to_string()}, {"a", p.a}, {"n", p.n}, {"k", p.k}};
  } else if (info.locus == LocusFamily::Springer) {
    inst.params = {{"n", p.n}};
  } else {
    inst.params = {{"n", p.n}, {"k", p.k}};
  }

  const int step = info.locus == LocusFamily::Tanisaki ? p.a : 1;
  const int value_order = p.k / step;
  BoundAction value{Action::value_shift(step, p.k), value_order, "q",
                    "add " + std::to_string(step) + " to every letter mod " + std::to_string(p.k)};
  if (info.locus == LocusFamily::Springer) value.description = "left multiplication by the long cycle (values +1 mod n)";
  if (info.group) {
    value.description += " on " + to_string(*info.group) + "-orbits";
    inst.set = orbit_set(locus, *info.group);
    inst.actions = {value};
  } else {
    BoundAction position{Action::position_rotation(1), p.n, "t", "rotate positions w1...wn -> w2...wn w1"};
    if (info.locus == LocusFamily::Springer)
      position.description = "right multiplication by the long cycle (rotate positions)";
    inst.set = std::move(locus);
    inst.actions = {value, position};
  }

  switch (f) {
    case Family::WordBicspX:
    case Family::GraphX:
      inst.notes.push_back("partitions mu range over l(mu) <= n and mu_1 <= k - 1");
      break;
    case Family::WordBicspY:
      inst.notes.push_back("Y(q,t) uses f^lambda(q) f^lambda(t)");
      break;
    case Family::NecklaceX:
      inst.notes.push_back("b counts words of content (n - l(mu), m_1(mu), ..., m_{k-1}(mu)) with n | maj");
      break;
    default: break;
  }
  if (info.locus == LocusFamily::Tanisaki)
    inst.notes.push_back("value action adds a = " + std::to_string(p.a) + " to each letter (order k/a = " +
                         std::to_string(value_order) + ")");
  return inst;
}

inline Report verify(const SievingInstance& inst) {
  return inst.actions.size() == 2 ? verify_bicsp(inst) : verify_csp(inst);
}

inline Report verify(Family f, const SievingParams& p) { return verify(make_instance(f, p)); }

/// Hilb((C[x]/T(X))^G; q), derived from the locus alone.
inline SparsePoly oracle_csp_poly(const Locus& l, Subgroup g, const HarmonicsBudget& budget = {}) {
  if (l.empty()) return SparsePoly{};
  return invariant_hilbert(graded_frobenius(l, budget), g);
}

}  // namespace csp
