#pragma once

// The acceptance matrix: one runner per criterion, each returning the number
// of exact checks performed, any failures and the elapsed time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "csp/cyclotomic.hpp"
#include "csp/harmonics.hpp"
#include "csp/kostka_foulkes.hpp"
#include "csp/loci.hpp"
#include "csp/sieving.hpp"
#include "csp/symfunc.hpp"
#include "csp/tableau.hpp"

namespace csp {

/// Optional caps on n and k; zero keeps the default ranges.
struct SuiteOptions {
  int max_n = 0;
  int max_k = 0;

  int n(int dflt) const { return max_n > 0 ? std::min(max_n, dflt) : dflt; }
  int k(int dflt) const { return max_k > 0 ? std::min(max_k, dflt) : dflt; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  double seconds = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool within_limit() const { return seconds <= limit_seconds; }
  bool passed() const { return failures.empty() && checks > 0 && within_limit(); }

  std::string summary() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "criterion %d %-28s %s  %6zu checks  %8.2f s (limit %.0f s)", id,
                  ("[" + title + "]").c_str(), passed() ? "PASS" : "FAIL", checks, seconds, limit_seconds);
    std::string s = buf;
    if (!within_limit()) s += "  over time limit";
    return s;
  }
};

namespace detail {

class Checker {
 public:
  explicit Checker(CriterionResult& out) : out_(out) {}

  void expect(bool ok, const std::string& label) {
    ++out_.checks;
    if (!ok) out_.failures.push_back(label);
  }

  /// Runs a check, recording any exception as a failure of that check.
  void run(const std::string& label, const std::function<bool()>& body) {
    try {
      expect(body(), label);
    } catch (const std::exception& e) {
      ++out_.checks;
      out_.failures.push_back(label + ": " + e.what());
    }
  }

 private:
  CriterionResult& out_;
};

inline std::string nk_label(const std::string& what, int n, int k) {
  return what + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

inline std::vector<int> divisors(int k) {
  std::vector<int> out;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

/// All (mu, a) with n = |mu| <= max_n, len(mu) <= max_k, a | len(mu) and mu_i = mu_{i+a}.
inline std::vector<SievingParams> tanisaki_range(int max_n, int max_k) {
  std::vector<SievingParams> out;
  for (int k = 1; k <= max_k; ++k)
    for (int n = 1; n <= max_n; ++n)
      for (const auto& mu : weak_compositions(n, k))
        for (int a : divisors(k))
          if (mu.has_cyclic_symmetry(a)) out.push_back(SievingParams::tanisaki(mu, a));
  return out;
}

inline std::string tanisaki_label(const std::string& what, const SievingParams& p) {
  return what + " mu=" + p.mu.to_string() + " a=" + std::to_string(p.a);
}

inline void check_family(Checker& c, Family f, const SievingParams& p, const std::string& label) {
  c.run(label, [&] { return verify(f, p).all_ok; });
}

}  // namespace detail

inline void criterion_word_bicsp(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (int n = 1; n <= o.n(4); ++n)
    for (int k = 1; k <= o.k(4); ++k)
      detail::check_family(c, Family::WordBicspX, SievingParams::nk(n, k), detail::nk_label("word-bicsp-X", n, k));
  for (int n = 1; n <= o.n(4); ++n)
    for (int k = n; k <= o.k(6); ++k)
      detail::check_family(c, Family::WordBicspY, SievingParams::nk(n, k), detail::nk_label("word-bicsp-Y", n, k));
  for (int n = 1; n <= o.n(6); ++n)
    for (int k = 1; k <= n; ++k)
      detail::check_family(c, Family::WordBicspZ, SievingParams::nk(n, k), detail::nk_label("word-bicsp-Z", n, k));
}

inline void criterion_orbit_csp(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (int n = 1; n <= o.n(6); ++n)
    for (int k = 1; k <= o.k(6); ++k) {
      detail::check_family(c, Family::WCompCsp, SievingParams::nk(n, k), detail::nk_label("wcomp-csp", n, k));
      if (n <= k)
        detail::check_family(c, Family::SubsetCsp, SievingParams::nk(n, k), detail::nk_label("subset-csp", n, k));
      if (k <= n)
        detail::check_family(c, Family::CompCsp, SievingParams::nk(n, k), detail::nk_label("comp-csp", n, k));
    }
}

inline void criterion_necklace_graph(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (int n = 1; n <= o.n(6); ++n)
    for (int k = 1; k <= o.k(5); ++k) {
      const auto p = SievingParams::nk(n, k);
      detail::check_family(c, Family::NecklaceX, p, detail::nk_label("necklace-X", n, k));
      if (n <= k) detail::check_family(c, Family::NecklaceY, p, detail::nk_label("necklace-Y", n, k));
      if (k <= n) detail::check_family(c, Family::NecklaceZ, p, detail::nk_label("necklace-Z", n, k));
      if (n % 2 != 0) continue;
      detail::check_family(c, Family::GraphX, p, detail::nk_label("graph-X", n, k));
      if (n <= k) detail::check_family(c, Family::GraphY, p, detail::nk_label("graph-Y", n, k));
      if (k <= n) detail::check_family(c, Family::GraphZ, p, detail::nk_label("graph-Z", n, k));
    }
}

inline void criterion_tanisaki(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (const auto& p : detail::tanisaki_range(o.n(6), o.k(4))) {
    detail::check_family(c, Family::TanisakiBicsp, p, detail::tanisaki_label("tanisaki-bicsp", p));
    detail::check_family(c, Family::TanisakiTrivial, p, detail::tanisaki_label("tanisaki-trivial", p));
    detail::check_family(c, Family::TanisakiNecklace, p, detail::tanisaki_label("tanisaki-necklace", p));
    if (p.n % 2 == 0) detail::check_family(c, Family::TanisakiGraph, p, detail::tanisaki_label("tanisaki-graph", p));
  }
}

inline void criterion_springer(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (int n = 1; n <= o.n(5); ++n)
    detail::check_family(c, Family::SpringerBicsp, SievingParams::nk(n, 0), "springer-bicsp n=" + std::to_string(n));
}

inline void criterion_presentations(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  auto check = [&](const LocusSpec& spec) {
    c.run("presentation " + spec.to_string(),
          [&] { return verify_presentation(enumerate_locus(spec), default_recipe(spec.family)); });
  };
  for (int n = 1; n <= o.n(3); ++n)
    for (int k = 1; k <= o.k(3); ++k) check(LocusSpec::x(n, k));
  for (int n = 1; n <= o.n(3); ++n)
    for (int k = n; k <= o.k(5); ++k) check(LocusSpec::y(n, k));
  for (int n = 1; n <= o.n(4); ++n)
    for (int k = 1; k <= std::min(n, o.k(4)); ++k) check(LocusSpec::z(n, k));
}

inline void criterion_frobenius(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  auto check = [&](const LocusSpec& spec) {
    c.run("graded Frobenius " + spec.to_string(),
          [&] { return graded_frobenius(enumerate_locus(spec)) == stated_frobenius(spec); });
  };
  for (int n = 1; n <= o.n(3); ++n)
    for (int k = 1; k <= o.k(3); ++k) check(LocusSpec::x(n, k));
  for (int n = 1; n <= o.n(3); ++n)
    for (int k = n; k <= o.k(5); ++k) check(LocusSpec::y(n, k));
  for (int n = 1; n <= o.n(4); ++n)
    for (int k = 1; k <= std::min(n, o.k(4)); ++k) check(LocusSpec::z(n, k));
  for (int n = 1; n <= o.n(5); ++n)
    for (int k = 1; k <= std::min(n, o.k(5)); ++k)
      for (const auto& mu : weak_compositions(n, k)) {
        const auto& parts = mu.parts();
        if (std::find(parts.begin(), parts.end(), 0) != parts.end()) continue;
        check(LocusSpec::tanisaki(mu, k));
      }
}

inline void criterion_oracle(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  const HarmonicsBudget budget{5, 1500, 200000};
  auto check = [&](Family f, const SievingParams& p, const std::string& label) {
    c.run("oracle " + label, [&] {
      const Locus l = enumerate_locus(locus_spec(f, p));
      return oracle_csp_poly(l, *family_info(f).group, budget) == sieving_polynomial(f, p);
    });
  };
  const int max_n = o.n(4);
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= o.k(6); ++k) {
      const auto p = SievingParams::nk(n, k);
      check(Family::WCompCsp, p, detail::nk_label("wcomp-csp", n, k));
      if (n <= k) check(Family::SubsetCsp, p, detail::nk_label("subset-csp", n, k));
      if (k <= n) check(Family::CompCsp, p, detail::nk_label("comp-csp", n, k));
      if (k > o.k(5)) continue;
      check(Family::NecklaceX, p, detail::nk_label("necklace-X", n, k));
      if (n <= k) check(Family::NecklaceY, p, detail::nk_label("necklace-Y", n, k));
      if (k <= n) check(Family::NecklaceZ, p, detail::nk_label("necklace-Z", n, k));
      if (n % 2 != 0) continue;
      check(Family::GraphX, p, detail::nk_label("graph-X", n, k));
      if (n <= k) check(Family::GraphY, p, detail::nk_label("graph-Y", n, k));
      if (k <= n) check(Family::GraphZ, p, detail::nk_label("graph-Z", n, k));
    }
  for (const auto& p : detail::tanisaki_range(max_n, o.k(4))) {
    check(Family::TanisakiTrivial, p, detail::tanisaki_label("tanisaki-trivial", p));
    check(Family::TanisakiNecklace, p, detail::tanisaki_label("tanisaki-necklace", p));
    if (p.n % 2 == 0) check(Family::TanisakiGraph, p, detail::tanisaki_label("tanisaki-graph", p));
  }
}

inline void criterion_properties(CriterionResult& r, const SuiteOptions& o) {
  detail::Checker c(r);
  for (int n = 1; n <= o.n(7); ++n)
    for (const auto& lambda : partitions_of(n))
      c.run("fake degree " + lambda.to_string(), [&] { return fake_degree(lambda) == fake_degree_by_maj(lambda); });

  for (int n = 1; n <= o.n(5); ++n)
    for (int k = 1; k <= o.k(3); ++k) {
      std::vector<int> w(n, 1);
      bool ok = true;
      while (true) {
        const auto [p, q] = rsk(w);
        ok = ok && p.is_semistandard() && q.is_standard() && p.shape() == q.shape() && maj_des(w) == maj_des(q);
        int i = n - 1;
        while (i >= 0 && w[i] == k) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
      }
      c.expect(ok, detail::nk_label("RSK maj/des preservation", n, k));
    }

  for (int n = 1; n <= o.n(5); ++n) {
    const Partition ones(std::vector<int>(n, 1));
    for (const auto& lambda : partitions_of(n))
      c.run("Kostka-Foulkes at (1^n) " + lambda.to_string(),
            [&] { return kostka_foulkes(lambda, ones) == fake_degree(lambda); });
  }

  for (int order = 1; order <= 30; ++order) {
    c.run("cyclotomic product L=" + std::to_string(order), [&] {
      IntPoly prod{1};
      for (int d = 1; d <= order; ++d)
        if (order % d == 0) prod = detail::int_mul(prod, cyclotomic_polynomial(d));
      IntPoly expected(order + 1, 0);
      expected[0] = -1;
      expected[order] = 1;
      return prod == expected && static_cast<int>(cyclotomic_polynomial(order).size()) - 1 == euler_phi(order);
    });
    c.run("period sums L=" + std::to_string(order), [&] {
      const CycloField& f = CycloField::get(order);
      for (int r = 0; r < order; ++r) {
        auto sum = CycloElement::zero(f);
        for (int j = 0; j < order; ++j) sum += CycloElement::root_power(f, static_cast<long>(j) * r);
        if (!cyclo_equals_integer(sum, r == 0 ? order : 0)) return false;
      }
      return true;
    });
  }

  for (int n = 1; n <= o.n(4); ++n)
    for (int k = 1; k <= o.k(3); ++k) {
      std::vector<LocusSpec> specs{LocusSpec::x(n, k)};
      if (n <= k) specs.push_back(LocusSpec::y(n, k));
      if (k <= n) specs.push_back(LocusSpec::z(n, k));
      for (const auto& spec : specs)
        for (Subgroup g : {Subgroup::Sn, Subgroup::Cn, Subgroup::Hr}) {
          if (g == Subgroup::Hr && n % 2 != 0) continue;
          c.run("Burnside " + spec.to_string() + " " + to_string(g), [&] {
            const Locus l = enumerate_locus(spec);
            const auto elements = subgroup_elements(g, n);
            long total = 0;
            for (const auto& sigma : elements) total += count_fixed(l, Action::permutation(sigma));
            return total == static_cast<long>(elements.size() * orbit_set(l, g).size());
          });
        }
    }
}

struct CriterionDef {
  int id;
  const char* title;
  double limit_seconds;
  void (*body)(CriterionResult&, const SuiteOptions&);
};

inline const std::vector<CriterionDef>& criteria() {
  static const std::vector<CriterionDef> defs{
      {1, "word biCSPs", 60, criterion_word_bicsp},
      {2, "orbit CSPs (Sn)", 10, criterion_orbit_csp},
      {3, "necklace and graph CSPs", 60, criterion_necklace_graph},
      {4, "Tanisaki biCSP and examples", 60, criterion_tanisaki},
      {5, "Springer biCSP", 30, criterion_springer},
      {6, "presentations", 300, criterion_presentations},
      {7, "graded Frobenius", 300, criterion_frobenius},
      {8, "oracle coherence", 300, criterion_oracle},
      {9, "property suites", 60, criterion_properties},
  };
  return defs;
}

inline CriterionResult run_criterion(const CriterionDef& def, const SuiteOptions& opts = {}) {
  CriterionResult r;
  r.id = def.id;
  r.title = def.title;
  r.limit_seconds = def.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  def.body(r, opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline CriterionResult run_criterion(int id, const SuiteOptions& opts = {}) {
  for (const auto& def : criteria())
    if (def.id == id) return run_criterion(def, opts);
  throw DomainError("unknown criterion " + std::to_string(id));
}

}  // namespace csp
