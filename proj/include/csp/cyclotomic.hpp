#pragma once

// Exact arithmetic in Q(zeta_L), represented in the power basis
// 1, x, ..., x^{phi(L)-1} modulo the L-th cyclotomic polynomial.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csp/errors.hpp"
#include "csp/sparse_poly.hpp"

namespace csp {

/// Dense integer polynomial, coefficient i belongs to x^i.
using IntPoly = std::vector<mpz_class>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Quotient of num by a monic den; throws if the remainder is nonzero.
inline IntPoly int_exact_div_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) {
    trim(num);
    if (!num.empty()) throw InternalError("cyclotomic division left a remainder");
    return {};
  }
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw InternalError("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

/// Reduces an integer polynomial modulo a monic modulus in place.
inline void reduce_monic(IntPoly& a, const IntPoly& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    if (a[i] == 0) continue;
    const mpz_class c = a[i];
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * mod[j];
  }
  a.resize(d, 0);
}

}  // namespace detail

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Phi_L via Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d.
inline IntPoly cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  IntPoly num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  IntPoly den{1};
  for (int d = 1; d < order; ++d)
    if (order % d == 0) den = detail::int_mul(den, cyclotomic_polynomial(d));
  IntPoly phi = detail::int_exact_div_monic(std::move(num), den);
  std::lock_guard lock(mu);
  cache.emplace(order, phi);
  return phi;
}

class CycloField {
 public:
  /// Interned field for the given order; the reference stays valid for the program lifetime.
  static const CycloField& get(int order) {
    if (order < 1) throw DomainError("CycloField: order must be positive");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[order];
    if (!slot) slot.reset(new CycloField(order));
    return *slot;
  }

  int order() const { return order_; }
  int degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }

  /// x^e reduced modulo Phi_L, exponent taken mod L.
  const IntPoly& power(long e) const {
    long r = e % order_;
    if (r < 0) r += order_;
    return powers_[static_cast<std::size_t>(r)];
  }

  /// Reduces an integer polynomial of any length to the power basis.
  IntPoly reduce(IntPoly a) const {
    if (a.size() < static_cast<std::size_t>(degree_)) {
      a.resize(degree_, 0);
      return a;
    }
    detail::reduce_monic(a, modulus_);
    return a;
  }

 private:
  explicit CycloField(int order)
      : order_(order), modulus_(cyclotomic_polynomial(order)), degree_(static_cast<int>(modulus_.size()) - 1) {
    powers_.reserve(order_);
    for (int e = 0; e < order_; ++e) {
      IntPoly x(e + 1, 0);
      x[e] = 1;
      powers_.push_back(reduce(std::move(x)));
    }
  }

  int order_;
  IntPoly modulus_;
  int degree_;
  std::vector<IntPoly> powers_;
};

class CycloElement {
 public:
  CycloElement() = default;

  static CycloElement zero(const CycloField& f) { return CycloElement(f); }
  static CycloElement from_integer(const CycloField& f, const mpz_class& m) {
    CycloElement e(f);
    e.coeffs_[0] = m;
    return e;
  }
  static CycloElement from_rational(const CycloField& f, const mpq_class& m) {
    CycloElement e(f);
    e.coeffs_[0] = m;
    return e;
  }
  static CycloElement one(const CycloField& f) { return from_integer(f, 1); }
  /// zeta_L^e.
  static CycloElement root_power(const CycloField& f, long e) { return from_int_poly(f, f.power(e)); }
  /// Element with the given power-basis coordinates (already reduced).
  static CycloElement from_int_poly(const CycloField& f, const IntPoly& reduced) {
    CycloElement e(f);
    for (int i = 0; i < f.degree(); ++i) e.coeffs_[i] = reduced[i];
    return e;
  }
  static CycloElement from_coordinates(const CycloField& f, std::vector<mpq_class> coords) {
    if (static_cast<int>(coords.size()) != f.degree()) throw DomainError("CycloElement: coordinate count mismatch");
    CycloElement e(f);
    e.coeffs_ = std::move(coords);
    return e;
  }

  const CycloField& field() const { return *field_; }
  bool has_field() const { return field_ != nullptr; }
  const std::vector<mpq_class>& coordinates() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  /// The rational value when the element lies in Q.
  std::optional<mpq_class> as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  }
  std::optional<mpz_class> as_integer() const {
    auto r = as_rational();
    if (!r || r->get_den() != 1) return std::nullopt;
    return mpz_class(r->get_num());
  }

  CycloElement& operator+=(const CycloElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycloElement& operator-=(const CycloElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CycloElement& operator*=(const CycloElement& o) {
    *this = *this * o;
    return *this;
  }
  CycloElement& operator*=(const mpq_class& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  /// this -= a * b, the inner kernel of every elimination loop.
  void sub_mul(const CycloElement& a, const CycloElement& b) {
    check(a);
    check(b);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
      coeffs_[0] -= a.coeffs_[0] * b.coeffs_[0];
      return;
    }
    *this -= a * b;
  }

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator-(CycloElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    a.check(b);
    const CycloField& f = *a.field_;
    const int d = f.degree();
    if (d == 1) {
      CycloElement r(f);
      r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
      return r;
    }
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.coeffs_[j] == 0) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    const IntPoly& mod = f.modulus();
    for (int i = 2 * d - 2; i >= d; --i) {
      if (prod[i] == 0) continue;
      const mpq_class c = prod[i];
      for (int j = 0; j <= d; ++j) prod[i - d + j] -= c * mod[j];
    }
    prod.resize(d);
    CycloElement r(f);
    r.coeffs_ = std::move(prod);
    return r;
  }
  friend CycloElement operator*(CycloElement a, const mpq_class& s) { return a *= s; }

  /// Multiplicative inverse by the extended Euclidean algorithm in Q[x].
  CycloElement inverse() const {
    if (is_zero()) throw DomainError("CycloElement: inverse of zero");
    const int d = field_->degree();
    if (d == 1) return from_rational(*field_, 1 / coeffs_[0]);
    using QPoly = std::vector<mpq_class>;
    auto trim = [](QPoly& p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto sub_scaled_shift = [](QPoly& a, const QPoly& b, const mpq_class& c, std::size_t shift) {
      if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    };
    QPoly r0(field_->modulus().begin(), field_->modulus().end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0{0}, s1{1};  // coefficients of this element
    while (!(r1.size() == 1)) {
      // r0 = quot * r1 + rem
      QPoly rem = r0;
      QPoly quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        const std::size_t shift = rem.size() - r1.size();
        const mpq_class c = rem.back() / r1.back();
        quot[shift] += c;
        sub_scaled_shift(rem, r1, c, shift);
        trim(rem);
      }
      QPoly s2 = s0;
      for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        sub_scaled_shift(s2, s1, quot[i], i);
      }
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
      if (r1.empty()) throw InternalError("CycloElement::inverse: element shares a factor with the modulus");
    }
    // s1 * this == r1[0] (mod Phi)
    const mpq_class scale = 1 / r1[0];
    std::vector<mpq_class> out(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * scale;
    // reduce out modulo Phi (degree may reach d-1 already, but be safe)
    const IntPoly& mod = field_->modulus();
    for (std::size_t i = out.size(); i-- > static_cast<std::size_t>(d);) {
      if (out[i] == 0) continue;
      const mpq_class c = out[i];
      for (int j = 0; j <= d; ++j) out[i - d + j] -= c * mod[j];
    }
    out.resize(d, 0);
    return from_coordinates(*field_, std::move(out));
  }

  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const mpq_class& c = coeffs_[i];
      if (c == 0) continue;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      const mpq_class mag = abs(c);
      if (i == 0 || mag != 1) os << mag.get_str() << (i > 0 ? "*" : "");
      if (i == 1) os << "z";
      if (i > 1) os << "z^" << i;
    }
    return first ? "0" : os.str();
  }

 private:
  explicit CycloElement(const CycloField& f) : field_(&f), coeffs_(f.degree(), 0) {}

  void check(const CycloElement& o) const {
    if (field_ != o.field_) throw DomainError("CycloElement: operands live in different fields");
  }

  const CycloField* field_ = nullptr;
  std::vector<mpq_class> coeffs_;
};

/// p(zeta^{(L/order_q) r}, zeta^{(L/order_t) s}) in Q(zeta_L).
inline CycloElement eval_at_unity(const SparsePoly& p, int order, long r, long s, int order_q, int order_t = 1) {
  if (order < 1 || order_q < 1 || order_t < 1) throw DomainError("eval_at_unity: orders must be positive");
  if (order % order_q != 0 || order % order_t != 0)
    throw DomainError("eval_at_unity: group orders must divide L = " + std::to_string(order));
  if (r < 0 || s < 0) throw DomainError("eval_at_unity: exponents must be nonnegative");
  const CycloField& f = CycloField::get(order);
  const long step_q = static_cast<long>(order / order_q) * (r % order_q);
  const long step_t = static_cast<long>(order / order_t) * (s % order_t);
  IntPoly buckets(order, 0);
  for (const auto& [e, c] : p.terms()) {
    const long ex = (step_q * e.q + step_t * e.t) % order;
    buckets[static_cast<std::size_t>(ex)] += c;
  }
  return CycloElement::from_int_poly(f, f.reduce(std::move(buckets)));
}

/// True iff e equals the integer m exactly.
inline bool cyclo_equals_integer(const CycloElement& e, const mpz_class& m) {
  auto v = e.as_integer();
  return v && *v == m;
}

}  // namespace csp
