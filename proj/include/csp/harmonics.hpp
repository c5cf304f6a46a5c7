#pragma once

// Orbit harmonics: vanishing ideals of point loci, their associated graded
// ideals, graded characters and graded Frobenius images.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "csp/cyclotomic.hpp"
#include "csp/errors.hpp"
#include "csp/groebner.hpp"
#include "csp/loci.hpp"
#include "csp/multipoly.hpp"
#include "csp/symfunc.hpp"

namespace csp {

struct HarmonicsBudget {
  int max_n = 5;
  std::size_t max_points = 720;
  std::size_t max_pairs = 200000;

  void check(int n, std::size_t points) const {
    if (n > max_n)
      throw ResourceError("harmonics budget: n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
    if (points > max_points)
      throw ResourceError("harmonics budget: " + std::to_string(points) + " points exceed the limit " +
                          std::to_string(max_points));
  }
};

namespace detail {

using ExpVec = std::vector<int>;

/// Translations e with X + e = X (coordinates taken mod k).
inline std::vector<ExpVec> translation_stabilizer(const std::vector<ExpVec>& pts, int k) {
  const std::set<ExpVec> point_set(pts.begin(), pts.end());
  const std::size_t n = pts.front().size();
  std::vector<ExpVec> out;
  std::set<ExpVec> tried;
  for (const auto& x : pts) {
    ExpVec e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = ((x[i] - pts.front()[i]) % k + k) % k;
    if (!tried.insert(e).second) continue;
    bool ok = true;
    ExpVec y(n);
    for (const auto& p : pts) {
      for (std::size_t i = 0; i < n; ++i) y[i] = (p[i] + e[i]) % k;
      if (!point_set.count(y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

/// A generating set of a subgroup of (Z/k)^n given by its elements.
inline std::vector<ExpVec> subgroup_generators(const std::vector<ExpVec>& group, int k) {
  if (group.empty()) return {};
  const std::size_t n = group.front().size();
  std::vector<ExpVec> gens;
  std::set<ExpVec> span{ExpVec(n, 0)};
  for (const auto& e : group) {
    if (span.count(e)) continue;
    gens.push_back(e);
    std::vector<ExpVec> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<ExpVec> next;
      for (const auto& s : frontier)
        for (const auto& g : gens) {
          ExpVec t(n);
          for (std::size_t i = 0; i < n; ++i) t[i] = (s[i] + g[i]) % k;
          if (span.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace detail

/// Reduced grevlex Groebner basis of the ideal of the points
/// (zeta_k^{w_1}, ..., zeta_k^{w_n}), computed by Buchberger-Moller.
///
/// Monomials are eigenfunctions for the translations that preserve the point
/// set, so linear dependencies are found separately inside each character
/// class, evaluating only at one representative per translation orbit.
inline GroebnerBasis vanishing_ideal(std::span<const Word> points, int n, int k) {
  if (points.empty()) throw DomainError("vanishing_ideal: the locus is empty");
  if (k <= 0) throw DomainError("vanishing_ideal: root order must be positive");
  const CycloField& field = CycloField::get(k);
  std::vector<detail::ExpVec> pts;
  for (const auto& w : points) {
    if (w.length() != n) throw DomainError("vanishing_ideal: point of the wrong dimension");
    detail::ExpVec e(n);
    for (int i = 0; i < n; ++i) e[i] = w[i] % k;
    pts.push_back(std::move(e));
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw DomainError("vanishing_ideal: repeated point");

  const auto stabilizer = detail::translation_stabilizer(pts, k);
  const auto dgens = detail::subgroup_generators(stabilizer, k);

  std::vector<detail::ExpVec> reps;
  {
    std::set<detail::ExpVec> covered;
    for (const auto& p : pts) {
      if (covered.count(p)) continue;
      reps.push_back(p);
      for (const auto& e : stabilizer) {
        detail::ExpVec y(n);
        for (int i = 0; i < n; ++i) y[i] = (p[i] + e[i]) % k;
        covered.insert(std::move(y));
      }
    }
  }
  const std::size_t width = reps.size();

  struct Row {
    std::size_t pivot;
    std::vector<CycloElement> values;
    std::vector<CycloElement> combo;  // over the class's standard monomials
  };
  struct ClassState {
    std::vector<Monomial> standard;
    std::vector<Row> rows;
  };
  std::map<std::vector<int>, ClassState> classes;

  auto class_key = [&](const Monomial& m) {
    std::vector<int> key(dgens.size());
    for (std::size_t g = 0; g < dgens.size(); ++g) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long>(m[i]) * dgens[g][i];
      key[g] = static_cast<int>(s % k);
    }
    return key;
  };

  std::vector<MultiPoly> generators;
  std::vector<Monomial> leading;
  std::size_t standard_count = 0;
  std::set<Monomial, GrevlexLess> queue{Monomial(n, 0)};
  std::set<Monomial, GrevlexLess> queued{Monomial(n, 0)};
  const auto zero = CycloElement::zero(field);

  while (!queue.empty()) {
    const Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool multiple = false;
    for (const auto& lt : leading)
      if (divides(lt, m)) {
        multiple = true;
        break;
      }
    if (multiple) continue;

    ClassState& cls = classes[class_key(m)];
    std::vector<CycloElement> v(width, zero);
    for (std::size_t j = 0; j < width; ++j) {
      long e = 0;
      for (int i = 0; i < n; ++i) e += static_cast<long>(m[i]) * reps[j][i];
      v[j] = CycloElement::root_power(field, e);
    }
    std::vector<CycloElement> combo(cls.standard.size(), zero);
    for (const auto& row : cls.rows) {
      const CycloElement c = v[row.pivot];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < width; ++j)
        if (!row.values[j].is_zero()) v[j].sub_mul(c, row.values[j]);
      for (std::size_t s = 0; s < row.combo.size(); ++s)
        if (!row.combo[s].is_zero()) combo[s] += c * row.combo[s];
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < width; ++j)
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    if (!pivot) {
      // eval(m) = sum combo_s eval(s)
      MultiPoly g = MultiPoly::monomial(n, field, m);
      for (std::size_t s = 0; s < combo.size(); ++s)
        if (!combo[s].is_zero()) g.add_term(cls.standard[s], -combo[s]);
      generators.push_back(std::move(g));
      leading.push_back(m);
      continue;
    }
    const CycloElement inv = v[*pivot].inverse();
    Row row;
    row.pivot = *pivot;
    row.values.resize(width, zero);
    for (std::size_t j = 0; j < width; ++j)
      if (!v[j].is_zero()) row.values[j] = v[j] * inv;
    cls.standard.push_back(m);
    row.combo.assign(cls.standard.size(), zero);
    for (std::size_t s = 0; s < combo.size(); ++s)
      if (!combo[s].is_zero()) row.combo[s] = -(combo[s] * inv);
    row.combo.back() = inv;
    cls.rows.push_back(std::move(row));
    ++standard_count;
    for (int i = 0; i < n; ++i) {
      Monomial up = m;
      ++up[i];
      if (queued.insert(up).second) queue.insert(std::move(up));
    }
  }
  if (standard_count != pts.size())
    throw InternalError("vanishing_ideal: found " + std::to_string(standard_count) + " standard monomials for " +
                        std::to_string(pts.size()) + " points");
  return GroebnerBasis(n, field, std::move(generators));
}

inline GroebnerBasis vanishing_ideal(const Locus& l, const HarmonicsBudget& budget = {}) {
  budget.check(l.n(), l.size());
  return vanishing_ideal(std::span<const Word>(l.elements()), l.n(), l.k());
}

/// I(X) as the iterated product of maximal ideals; an independent check for small loci.
inline GroebnerBasis vanishing_ideal_by_products(std::span<const Word> points, int n, int k,
                                                 const BuchbergerOptions& opts = {}) {
  if (points.empty()) throw DomainError("vanishing_ideal_by_products: the locus is empty");
  const CycloField& field = CycloField::get(k);
  auto maximal = [&](const Word& w) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < n; ++i) {
      MultiPoly g = MultiPoly::variable(n, field, i);
      g.add_term(Monomial(n, 0), -CycloElement::root_power(field, w[i]));
      gens.push_back(std::move(g));
    }
    return gens;
  };
  std::vector<MultiPoly> current = maximal(points.front());
  for (std::size_t p = 1; p < points.size(); ++p) {
    const auto m = maximal(points[p]);
    std::vector<MultiPoly> prod;
    for (const auto& a : current)
      for (const auto& b : m) prod.push_back(a * b);
    current = buchberger(prod, n, field, opts).generators();
  }
  return buchberger(current, n, field, opts);
}

/// True iff every generator vanishes at every point.
inline bool vanishes_on(const GroebnerBasis& gb, std::span<const Word> points, int k) {
  for (const auto& g : gb.generators())
    for (const auto& w : points)
      if (!g.evaluate_at_root_exponents(w.letters, k).is_zero()) return false;
  return true;
}

/// Generators tau(g_i) of T(X), checked to form a Groebner basis with the
/// same leading monomials as the input.
inline GroebnerBasis associated_graded(const GroebnerBasis& gb, const BuchbergerOptions& opts = {}) {
  std::vector<MultiPoly> tops;
  for (const auto& g : gb.generators()) tops.push_back(g.top_component().monic());
  GroebnerBasis candidate(gb.nvars(), gb.field(), tops);
  const GroebnerBasis check = buchberger(tops, gb.nvars(), gb.field(), opts);
  if (check.leading_monomials() != candidate.leading_monomials())
    throw InternalError("associated_graded: the top components do not form a Groebner basis");
  return check;
}

/// The graded quotient C[x]/T with memoized normal forms of monomials.
class GradedQuotient {
 public:
  explicit GradedQuotient(GroebnerBasis gb) : gb_(std::move(gb)), basis_(gb_.quotient_basis()) {
    for (const auto& g : gb_.generators())
      if (!g.is_homogeneous()) throw DomainError("GradedQuotient: ideal generators must be homogeneous");
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_.monomials()[i], i);
  }

  const GroebnerBasis& groebner_basis() const { return gb_; }
  const QuotientBasis& basis() const { return basis_; }
  SparsePoly hilbert() const { return hilbert_series(basis_); }

  /// Normal form of a monomial as (standard index, coefficient) pairs.
  const std::map<std::size_t, CycloElement>& normal_form(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::map<std::size_t, CycloElement> out;
    if (auto it = index_.find(m); it != index_.end()) {
      out.emplace(it->second, CycloElement::one(gb_.field()));
    } else {
      const auto d = gb_.divisor_of(m);
      if (!d) throw InternalError("GradedQuotient: monomial outside both the basis and the leading ideal");
      const MultiPoly& g = gb_.generators()[*d];
      const Monomial shift = monomial_quotient(m, g.leading_monomial());
      bool first = true;
      for (const auto& [t, c] : g.terms()) {
        if (first) {
          first = false;
          continue;
        }
        const auto& sub = normal_form(monomial_product(t, shift));
        for (const auto& [idx, v] : sub) {
          auto [pos, inserted] = out.try_emplace(idx, CycloElement::zero(gb_.field()));
          pos->second.sub_mul(c, v);
          if (pos->second.is_zero()) out.erase(pos);
        }
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

  /// sum_d trace(w on degree d) q^d.
  SparsePoly graded_character(const Permutation& w) {
    if (static_cast<int>(w.size()) != gb_.nvars()) throw DomainError("graded_character: permutation degree mismatch");
    validate_permutation(w);
    std::map<int, CycloElement> by_degree;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& m = basis_.monomials()[i];
      Monomial image(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) image[w[j]] = m[j];
      const auto& nf = normal_form(image);
      for (const auto& [idx, c] : nf)
        if (total_degree(basis_.monomials()[idx]) != total_degree(m))
          throw InternalError("graded_character: normal form left the graded piece");
      auto it = nf.find(i);
      if (it == nf.end()) continue;
      auto [pos, inserted] = by_degree.try_emplace(total_degree(m), CycloElement::zero(gb_.field()));
      pos->second += it->second;
    }
    SparsePoly p;
    for (const auto& [d, c] : by_degree) {
      auto v = c.as_integer();
      if (!v) throw InternalError("graded_character: trace is not an integer");
      p += SparsePoly::monomial(*v, d);
    }
    return p;
  }

 private:
  GroebnerBasis gb_;
  QuotientBasis basis_;
  std::map<Monomial, std::size_t, GrevlexLess> index_;
  std::map<Monomial, std::map<std::size_t, CycloElement>, GrevlexLess> memo_;
};

inline SparsePoly graded_character(const GroebnerBasis& gb_t, const Permutation& w) {
  GradedQuotient quotient(gb_t);
  return quotient.graded_character(w);
}

/// One permutation of the given cycle type: consecutive blocks are cycles.
inline Permutation permutation_of_type(const Partition& type) {
  Permutation p(type.size());
  int start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

/// c_lambda(q) = (1/n!) sum_classes |class| chi^lambda(class) chi_q(class).
inline SchurVector frobenius_from_quotient(GradedQuotient& quotient, int n) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  std::map<Partition, SparsePoly> characters;
  for (const auto& mu : partitions_of(n)) characters.emplace(mu, quotient.graded_character(permutation_of_type(mu)));
  SchurVector v(n);
  for (const auto& lambda : partitions_of(n)) {
    SparsePoly sum;
    for (const auto& [mu, chi_q] : characters) {
      const CycleType cls(mu);
      sum += chi_q * (cls.class_size() * sn_character(lambda, cls));
    }
    SparsePoly c;
    for (const auto& [e, coeff] : sum.terms()) {
      if (!mpz_divisible_p(coeff.get_mpz_t(), fact.get_mpz_t()))
        throw InternalError("graded_frobenius: character sum not divisible by n!");
      c += SparsePoly::monomial(coeff / fact, e.q);
    }
    if (!c.has_nonnegative_coefficients())
      throw InternalError("graded_frobenius: negative multiplicity for " + lambda.to_string());
    v.add(lambda, c);
  }
  return v;
}

/// The full pipeline for a locus: I(X), T(X) and the graded quotient.
struct HarmonicsResult {
  GroebnerBasis ideal;
  GroebnerBasis graded;
  GradedQuotient quotient;
};

inline HarmonicsResult run_harmonics(const Locus& l, const HarmonicsBudget& budget = {}) {
  GroebnerBasis ideal = vanishing_ideal(l, budget);
  GroebnerBasis graded = associated_graded(ideal, BuchbergerOptions{budget.max_pairs});
  GradedQuotient quotient(graded);
  if (quotient.basis().size() != l.size())
    throw InternalError("orbit harmonics: quotient by T(X) has dimension " + std::to_string(quotient.basis().size()) +
                        " but |X| = " + std::to_string(l.size()));
  return {std::move(ideal), std::move(graded), std::move(quotient)};
}

inline SchurVector graded_frobenius(const Locus& l, const HarmonicsBudget& budget = {}) {
  if (l.empty()) return SchurVector(l.n());
  auto result = run_harmonics(l, budget);
  return frobenius_from_quotient(result.quotient, l.n());
}

enum class PresentationRecipe { Powers, CompleteHomogeneous, Hrs };

inline std::string to_string(PresentationRecipe r) {
  switch (r) {
    case PresentationRecipe::Powers: return "powers";
    case PresentationRecipe::CompleteHomogeneous: return "complete-homogeneous";
    case PresentationRecipe::Hrs: return "hrs";
  }
  return "?";
}

inline PresentationRecipe parse_recipe(const std::string& s) {
  if (s == "powers") return PresentationRecipe::Powers;
  if (s == "complete-homogeneous" || s == "h") return PresentationRecipe::CompleteHomogeneous;
  if (s == "hrs") return PresentationRecipe::Hrs;
  throw DomainError("unknown presentation recipe '" + s + "' (expected powers, complete-homogeneous or hrs)");
}

inline PresentationRecipe default_recipe(LocusFamily f) {
  switch (f) {
    case LocusFamily::X: return PresentationRecipe::Powers;
    case LocusFamily::Y: return PresentationRecipe::CompleteHomogeneous;
    case LocusFamily::Z: return PresentationRecipe::Hrs;
    default: throw DomainError("no stated presentation for the " + to_string(f) + " locus");
  }
}

/// Generators of the stated presentation of T(X).
inline std::vector<MultiPoly> stated_generators(const LocusSpec& spec, PresentationRecipe recipe) {
  const int n = spec.n, k = spec.k;
  const CycloField& field = CycloField::get(k);
  std::vector<MultiPoly> gens;
  auto powers = [&] {
    for (int i = 0; i < n; ++i) {
      Monomial m(n, 0);
      m[i] = k;
      gens.push_back(MultiPoly::monomial(n, field, m));
    }
  };
  switch (recipe) {
    case PresentationRecipe::Powers:
      if (spec.family != LocusFamily::X) throw DomainError("the powers recipe applies to X loci only");
      powers();
      break;
    case PresentationRecipe::CompleteHomogeneous:
      if (spec.family != LocusFamily::Y) throw DomainError("the complete homogeneous recipe applies to Y loci only");
      if (n > k) throw DomainError("the complete homogeneous recipe requires n <= k");
      for (int d = k - n + 1; d <= k; ++d) gens.push_back(complete_homogeneous(n, field, d));
      break;
    case PresentationRecipe::Hrs:
      if (spec.family != LocusFamily::Z) throw DomainError("the HRS recipe applies to Z loci only");
      if (k > n) throw DomainError("the HRS recipe requires k <= n");
      powers();
      for (int d = n; d >= n - k + 1; --d) gens.push_back(elementary_symmetric(n, field, d));
      break;
  }
  return gens;
}

/// True iff the stated generators generate T(X).
inline bool verify_presentation(const Locus& l, PresentationRecipe recipe, const HarmonicsBudget& budget = {}) {
  const auto gens = stated_generators(l.spec(), recipe);
  if (l.empty()) throw DomainError("verify_presentation: the locus is empty");
  const BuchbergerOptions opts{budget.max_pairs};
  const auto ideal = vanishing_ideal(l, budget);
  const auto graded = associated_graded(ideal, opts);
  const auto stated = buchberger(gens, l.n(), CycloField::get(l.k()), opts);
  for (const auto& g : graded.generators())
    if (!stated.contains(g)) return false;
  if (!stated.is_zero_dimensional()) return false;
  return hilbert_series(stated.quotient_basis()) == hilbert_series(graded.quotient_basis());
}

/// Machine-readable dump of a Groebner basis and its standard monomials.
inline nlohmann::json groebner_to_json(const GroebnerBasis& gb) {
  using nlohmann::json;
  json out;
  out["field_order"] = gb.field().order();
  out["order"] = "grevlex";
  json gens = json::array();
  for (const auto& g : gb.generators()) {
    json terms = json::array();
    for (const auto& [m, c] : g.terms()) {
      json coords = json::array();
      for (const auto& q : c.coordinates()) coords.push_back(q.get_str());
      json term = json::object();
      term["exponents"] = m;
      term["coefficient"] = std::move(coords);
      terms.push_back(std::move(term));
    }
    gens.push_back(std::move(terms));
  }
  out["generators"] = std::move(gens);
  if (gb.is_zero_dimensional()) {
    json std_monomials = json::array();
    const QuotientBasis qb = gb.quotient_basis();
    for (const auto& m : qb.monomials()) std_monomials.push_back(m);
    out["standard_monomials"] = std::move(std_monomials);
  }
  return out;
}

}  // namespace csp
