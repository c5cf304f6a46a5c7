#pragma once

// Reduced Groebner bases under grevlex, Buchberger's algorithm, normal
// forms, standard monomials and Hilbert series.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "csp/errors.hpp"
#include "csp/multipoly.hpp"
#include "csp/sparse_poly.hpp"

namespace csp {

/// Standard monomials of a zero-dimensional ideal, ascending in grevlex.
class QuotientBasis {
 public:
  QuotientBasis() = default;
  QuotientBasis(int nvars, std::vector<Monomial> monomials) : nvars_(nvars), monomials_(std::move(monomials)) {
    std::sort(monomials_.begin(), monomials_.end(), GrevlexLess{});
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  std::map<int, std::vector<Monomial>> by_degree() const {
    std::map<int, std::vector<Monomial>> out;
    for (const auto& m : monomials_) out[total_degree(m)].push_back(m);
    return out;
  }

 private:
  int nvars_ = 0;
  std::vector<Monomial> monomials_;
};

inline SparsePoly hilbert_series(const QuotientBasis& qb) {
  SparsePoly p;
  for (const auto& m : qb.monomials()) p += SparsePoly::q(total_degree(m));
  return p;
}

/// Reduces p completely modulo the list (no interreduction assumptions).
inline MultiPoly reduce_by(MultiPoly p, const std::vector<MultiPoly>& divisors) {
  MultiPoly remainder(p.nvars(), p.field());
  while (!p.is_zero()) {
    const Monomial lt = p.leading_monomial();
    const MultiPoly* hit = nullptr;
    for (const auto& g : divisors)
      if (divides(g.leading_monomial(), lt)) {
        hit = &g;
        break;
      }
    if (!hit) {
      remainder.add_term(lt, p.leading_coefficient());
      p.add_term(lt, -p.leading_coefficient());
      continue;
    }
    const CycloElement c = p.leading_coefficient() * hit->leading_coefficient().inverse();
    p.sub_scaled(c, monomial_quotient(lt, hit->leading_monomial()), *hit);
  }
  return remainder;
}

/// A reduced, monic Groebner basis in grevlex order.
class GroebnerBasis {
 public:
  GroebnerBasis(int nvars, const CycloField& field, std::vector<MultiPoly> gens)
      : nvars_(nvars), field_(&field), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.is_zero()) throw DomainError("GroebnerBasis: zero generator");
      if (g.nvars() != nvars_ || &g.field() != field_) throw DomainError("GroebnerBasis: incompatible generator");
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return grevlex_less(a.leading_monomial(), b.leading_monomial()); });
  }

  int nvars() const { return nvars_; }
  const CycloField& field() const { return *field_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : gens_) out.push_back(g.leading_monomial());
    return out;
  }

  bool is_unit_ideal() const {
    return gens_.size() == 1 && total_degree(gens_.front().leading_monomial()) == 0;
  }

  bool is_standard(const Monomial& m) const {
    for (const auto& g : gens_)
      if (divides(g.leading_monomial(), m)) return false;
    return true;
  }

  /// Index of a generator whose leading monomial divides m.
  std::optional<std::size_t> divisor_of(const Monomial& m) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (divides(gens_[i].leading_monomial(), m)) return i;
    return std::nullopt;
  }

  MultiPoly normal_form(const MultiPoly& p) const { return reduce_by(p, gens_); }

  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }

  /// Every variable has a pure power among the leading monomials.
  bool is_zero_dimensional() const {
    for (int i = 0; i < nvars_; ++i) {
      bool found = false;
      for (const auto& g : gens_) {
        const auto& lt = g.leading_monomial();
        bool pure = lt[i] > 0;
        for (int j = 0; j < nvars_ && pure; ++j)
          if (j != i && lt[j] != 0) pure = false;
        if (pure) found = true;
      }
      if (!found) return false;
    }
    return true;
  }

  /// Standard monomials; throws if the quotient is infinite or larger than the limit.
  QuotientBasis quotient_basis(std::size_t limit = 1u << 20) const {
    if (!is_zero_dimensional()) throw DomainError("quotient_basis: ideal is not zero-dimensional");
    std::set<Monomial, GrevlexLess> seen;
    std::vector<Monomial> frontier;
    const Monomial one(nvars_, 0);
    if (is_standard(one)) {
      seen.insert(one);
      frontier.push_back(one);
    }
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier)
        for (int i = 0; i < nvars_; ++i) {
          Monomial up = m;
          ++up[i];
          if (!is_standard(up) || seen.count(up)) continue;
          if (seen.size() >= limit) throw ResourceError("quotient_basis: more than " + std::to_string(limit) + " standard monomials");
          seen.insert(up);
          next.push_back(std::move(up));
        }
      frontier = std::move(next);
    }
    return QuotientBasis(nvars_, {seen.begin(), seen.end()});
  }

 private:
  int nvars_;
  const CycloField* field_;
  std::vector<MultiPoly> gens_;
};

/// Interreduces a Groebner basis into reduced monic form.
inline std::vector<MultiPoly> interreduce(std::vector<MultiPoly> gens) {
  std::erase_if(gens, [](const MultiPoly& g) { return g.is_zero(); });
  std::sort(gens.begin(), gens.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return grevlex_less(a.leading_monomial(), b.leading_monomial()); });
  std::vector<MultiPoly> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (divides(h.leading_monomial(), g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lt = minimal[i].leading_monomial();
    const CycloElement lc = minimal[i].leading_coefficient();
    MultiPoly tail = minimal[i];
    tail.add_term(lt, -lc);
    MultiPoly r = MultiPoly::monomial(minimal[i].nvars(), minimal[i].field(), lt, lc) + reduce_by(tail, others);
    reduced.push_back(r.monic());
  }
  return reduced;
}

struct BuchbergerOptions {
  std::size_t max_pairs = 200000;
};

/// Reduced grevlex Groebner basis of the ideal generated by gens.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& input, int nvars, const CycloField& field,
                                const BuchbergerOptions& opts = {}) {
  std::vector<MultiPoly> basis;
  for (const auto& g : input) {
    if (g.nvars() != nvars || &g.field() != &field) throw DomainError("buchberger: incompatible generator");
    auto r = reduce_by(g, basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }
  if (basis.empty()) return GroebnerBasis(nvars, field, {});

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (grevlex_less(a.lcm, b.lcm)) return true;
    if (grevlex_less(b.lcm, a.lcm)) return false;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      pairs.insert(Pair{monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > opts.max_pairs)
      throw ResourceError("buchberger: pair budget of " + std::to_string(opts.max_pairs) + " exhausted");
    const MultiPoly& f = basis[p.i];
    const MultiPoly& g = basis[p.j];
    if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
    // Chain criterion: skip when some other leading monomial divides the lcm
    // and both companion pairs have already been handled.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !divides(basis[k].leading_monomial(), p.lcm)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return pairs.count(Pair{monomial_lcm(basis[a].leading_monomial(), basis[b].leading_monomial()), a, b}) > 0;
      };
      if (!pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;
    MultiPoly s = f.shifted(monomial_quotient(p.lcm, f.leading_monomial()), g.leading_coefficient());
    s.sub_scaled(f.leading_coefficient(), monomial_quotient(p.lcm, g.leading_monomial()), g);
    MultiPoly r = reduce_by(std::move(s), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(nvars, field, interreduce(std::move(basis)));
}

}  // namespace csp
