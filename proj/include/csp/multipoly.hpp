#pragma once

// Multivariate polynomials over Q(zeta_L) in the graded reverse
// lexicographic order.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "csp/cyclotomic.hpp"
#include "csp/errors.hpp"

namespace csp {

/// Exponent vector of a monomial x_1^{b_1} ... x_n^{b_n}.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded reverse lexicographic order: compare degrees first, then the
/// smaller monomial is the one with the larger exponent in the last
/// variable where they differ.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// b / a, assuming a divides b.
inline Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

class MultiPoly {
 public:
  using Terms = std::map<Monomial, CycloElement, GrevlexGreater>;

  MultiPoly(int nvars, const CycloField& field) : nvars_(nvars), field_(&field) {
    if (nvars < 0) throw DomainError("MultiPoly: negative variable count");
  }

  static MultiPoly monomial(int nvars, const CycloField& field, Monomial m, const CycloElement& c) {
    MultiPoly p(nvars, field);
    p.add_term(std::move(m), c);
    return p;
  }
  static MultiPoly monomial(int nvars, const CycloField& field, Monomial m) {
    return monomial(nvars, field, std::move(m), CycloElement::one(field));
  }
  static MultiPoly constant(int nvars, const CycloField& field, const CycloElement& c) {
    return monomial(nvars, field, Monomial(nvars, 0), c);
  }
  static MultiPoly variable(int nvars, const CycloField& field, int i) {
    Monomial m(nvars, 0);
    m.at(i) = 1;
    return monomial(nvars, field, std::move(m));
  }

  int nvars() const { return nvars_; }
  const CycloField& field() const { return *field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading_monomial of the zero polynomial");
    return terms_.begin()->first;
  }
  const CycloElement& leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading_coefficient of the zero polynomial");
    return terms_.begin()->second;
  }
  int degree() const { return terms_.empty() ? -1 : total_degree(leading_monomial()); }

  CycloElement coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloElement::zero(*field_) : it->second;
  }

  void add_term(Monomial m, const CycloElement& c) {
    if (static_cast<int>(m.size()) != nvars_) throw DomainError("MultiPoly: monomial has the wrong number of variables");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// this -= c * x^shift * other.
  void sub_scaled(const CycloElement& c, const Monomial& shift, const MultiPoly& other) {
    check(other);
    for (const auto& [m, a] : other.terms_) {
      Monomial target = monomial_product(m, shift);
      auto it = terms_.find(target);
      if (it == terms_.end()) {
        auto term = a * c;
        if (!term.is_zero()) terms_.emplace(std::move(target), -term);
        continue;
      }
      it->second.sub_mul(a, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly r(a.nvars_, *a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    return r;
  }

  MultiPoly scaled(const CycloElement& c) const {
    MultiPoly r(nvars_, *field_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
  }

  MultiPoly shifted(const Monomial& shift, const CycloElement& c) const {
    MultiPoly r(nvars_, *field_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(monomial_product(m, shift), a * c);
    return r;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  /// tau(f): the homogeneous component of top degree.
  MultiPoly top_component() const {
    MultiPoly r(nvars_, *field_);
    const int d = degree();
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
  }

  bool is_homogeneous() const {
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
  }

  /// f(zeta_k^{w_1}, ..., zeta_k^{w_n}); k must divide the field order.
  CycloElement evaluate_at_root_exponents(std::span<const int> exps, int k) const {
    if (static_cast<int>(exps.size()) != nvars_) throw DomainError("evaluate: point has the wrong dimension");
    if (k <= 0 || field_->order() % k != 0) throw DomainError("evaluate: root order must divide the field order");
    const long scale = field_->order() / k;
    auto value = CycloElement::zero(*field_);
    for (const auto& [m, c] : terms_) {
      long e = 0;
      for (int i = 0; i < nvars_; ++i) e += static_cast<long>(m[i]) * exps[i];
      value += c * CycloElement::root_power(*field_, e * scale);
    }
    return value;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      const auto integer = c.as_integer();
      const bool negative = integer && *integer < 0;
      if (!s.empty()) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      const bool constant = total_degree(m) == 0;
      if (integer) {
        const mpz_class mag = abs(*integer);
        if (mag != 1 || constant) s += mag.get_str() + (constant ? "" : "*");
      } else {
        s += "(" + c.to_string() + ")" + (constant ? "" : "*");
      }
      if (!constant) s += monomial_to_string(m);
    }
    return s;
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.nvars_ != nvars_ || o.field_ != field_) throw DomainError("MultiPoly: incompatible operands");
  }

  int nvars_;
  const CycloField* field_;
  Terms terms_;
};

/// Complete homogeneous symmetric polynomial h_d(x_1..x_n).
inline MultiPoly complete_homogeneous(int nvars, const CycloField& field, int d) {
  MultiPoly p(nvars, field);
  if (d < 0) return p;
  Monomial m(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      m[var] = remaining;
      p.add_term(m, CycloElement::one(field));
      m[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m[var] = e;
      self(self, var + 1, remaining - e);
    }
    m[var] = 0;
  };
  if (nvars == 0) return d == 0 ? MultiPoly::constant(0, field, CycloElement::one(field)) : p;
  rec(rec, 0, d);
  return p;
}

/// Elementary symmetric polynomial e_d(x_1..x_n).
inline MultiPoly elementary_symmetric(int nvars, const CycloField& field, int d) {
  MultiPoly p(nvars, field);
  if (d < 0 || d > nvars) return p;
  std::vector<int> pick(nvars, 0);
  std::fill(pick.end() - d, pick.end(), 1);
  do p.add_term(Monomial(pick.begin(), pick.end()), CycloElement::one(field));
  while (std::next_permutation(pick.begin(), pick.end()));
  return p;
}

}  // namespace csp
