#pragma once

// Integer polynomials in q and (optionally) t with arbitrary-precision
// coefficients, plus the standard q-analogs built on them.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "csp/errors.hpp"

namespace csp {

struct Exponent {
  int q = 0;
  int t = 0;
  auto operator<=>(const Exponent&) const = default;
};

class SparsePoly {
 public:
  using Terms = std::map<Exponent, mpz_class>;

  SparsePoly() = default;
  SparsePoly(long constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponent{}, mpz_class(constant));
  }
  explicit SparsePoly(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(Exponent{}, constant);
  }

  static SparsePoly monomial(const mpz_class& coeff, int eq, int et = 0) {
    if (eq < 0 || et < 0) throw DomainError("negative exponent in monomial");
    SparsePoly p;
    if (coeff != 0) p.terms_.emplace(Exponent{eq, et}, coeff);
    return p;
  }
  static SparsePoly q(int e = 1) { return monomial(1, e, 0); }
  static SparsePoly t(int e = 1) { return monomial(1, 0, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  mpz_class coefficient(int eq, int et = 0) const {
    auto it = terms_.find(Exponent{eq, et});
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  int degree_q() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.q);
    return d;
  }
  int degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
  }
  int min_degree_q() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.q;
  }

  bool is_univariate() const {
    for (const auto& [e, c] : terms_)
      if (e.t != 0) return false;
    return true;
  }

  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// p(1, 1), the sum of all coefficients.
  mpz_class value_at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Renames q to t. Requires a univariate polynomial.
  SparsePoly as_t() const {
    if (!is_univariate()) throw DomainError("as_t: polynomial already involves t");
    SparsePoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{0, e.q}, c);
    return p;
  }

  /// Specializes t = 1.
  SparsePoly at_t_one() const {
    SparsePoly p;
    for (const auto& [e, c] : terms_) p.add_term(Exponent{e.q, 0}, c);
    return p;
  }

  /// Exchanges the roles of q and t.
  SparsePoly swapped() const {
    SparsePoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e.t, e.q}, c);
    return p;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
  }
  SparsePoly& operator*=(const mpz_class& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(Exponent{ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return r;
  }
  friend SparsePoly operator*(SparsePoly a, const mpz_class& s) { return a *= s; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Univariate long division; returns (quotient, remainder).
  static std::pair<SparsePoly, SparsePoly> divide(const SparsePoly& num, const SparsePoly& den) {
    if (!num.is_univariate() || !den.is_univariate()) throw DomainError("divide: univariate polynomials only");
    if (den.is_zero()) throw DomainError("divide: division by zero polynomial");
    const int dd = den.degree_q();
    const mpz_class lead = den.coefficient(dd);
    SparsePoly quot;
    SparsePoly rem = num;
    while (!rem.is_zero() && rem.degree_q() >= dd) {
      const int rd = rem.degree_q();
      const mpz_class rc = rem.coefficient(rd);
      if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) break;
      SparsePoly step = monomial(rc / lead, rd - dd);
      quot += step;
      rem -= step * den;
    }
    return {quot, rem};
  }

  /// Division that must be exact; a nonzero remainder is an invariant violation.
  static SparsePoly exact_divide(const SparsePoly& num, const SparsePoly& den) {
    auto [quot, rem] = divide(num, den);
    if (!rem.is_zero())
      throw InternalError("exact_divide: nonzero remainder " + rem.to_string() + " dividing " +
                          num.to_string() + " by " + den.to_string());
    return quot;
  }

  /// Human-readable form, ascending in q then t: "1 + q + 2*q^2*t".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool constant = e.q == 0 && e.t == 0;
      bool need_star = false;
      if (mag != 1 || constant) {
        os << mag.get_str();
        need_star = true;
      }
      auto var = [&](const char* name, int power) {
        if (power == 0) return;
        if (need_star) os << "*";
        os << name;
        if (power > 1) os << "^" << power;
        need_star = true;
      };
      var("q", e.q);
      var("t", e.t);
    }
    return os.str();
  }

 private:
  void add_term(const Exponent& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// q-analogs

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline SparsePoly q_integer(int n) {
  if (n < 0) throw DomainError("q_integer: negative argument");
  SparsePoly p;
  for (int i = 0; i < n; ++i) p += SparsePoly::q(i);
  return p;
}

inline SparsePoly q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial: negative argument");
  SparsePoly p = 1;
  for (int i = 2; i <= n; ++i) p *= q_integer(i);
  return p;
}

/// [n]!_q / prod [parts_i]!_q. Parts must sum to n.
inline SparsePoly q_multinomial(int n, std::span<const int> parts) {
  if (n < 0) throw DomainError("q_multinomial: negative n");
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("q_multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw DomainError("q_multinomial: parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
  SparsePoly den = 1;
  for (int p : parts) den *= q_factorial(p);
  return SparsePoly::exact_divide(q_factorial(n), den);
}

inline SparsePoly q_multinomial(int n, std::initializer_list<int> parts) {
  std::vector<int> v(parts);
  return q_multinomial(n, std::span<const int>(v));
}

/// Gaussian binomial; zero outside 0 <= k <= n.
inline SparsePoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return SparsePoly{};
  const int parts[] = {k, n - k};
  return q_multinomial(n, parts);
}

}  // namespace csp
