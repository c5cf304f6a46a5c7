#pragma once

// Schur-basis bookkeeping, symmetric group characters and fixed-space
// dimensions for the subgroups S_n, C_n and H_r of S_n.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "csp/errors.hpp"
#include "csp/partition.hpp"
#include "csp/sparse_poly.hpp"
#include "csp/tableau.hpp"

namespace csp {

/// sum_lambda c_lambda(q) s_lambda for lambda |- n. Zero coefficients are not stored.
class SchurVector {
 public:
  using Coeffs = std::map<Partition, SparsePoly, ReverseLex>;

  explicit SchurVector(int n = 0) : n_(n) {
    if (n < 0) throw DomainError("SchurVector: negative degree");
  }

  int degree() const { return n_; }
  const Coeffs& coeffs() const { return coeffs_; }

  SparsePoly coefficient(const Partition& shape) const {
    auto it = coeffs_.find(shape);
    return it == coeffs_.end() ? SparsePoly{} : it->second;
  }

  void add(const Partition& shape, const SparsePoly& c) {
    if (shape.size() != n_)
      throw DomainError("SchurVector: " + shape.to_string() + " is not a partition of " + std::to_string(n_));
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(shape, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SchurVector& operator+=(const SchurVector& o) {
    if (o.n_ != n_) throw DomainError("SchurVector: degree mismatch");
    for (const auto& [shape, c] : o.coeffs_) add(shape, c);
    return *this;
  }
  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator*(const SparsePoly& p, const SchurVector& v) {
    SchurVector r(v.n_);
    for (const auto& [shape, c] : v.coeffs_) r.add(shape, p * c);
    return r;
  }
  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [shape, c] : coeffs_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*s" + shape.to_string();
    }
    return s;
  }

 private:
  int n_;
  Coeffs coeffs_;
};

/// Conjugacy class of S_n labelled by a cycle type.
class CycleType {
 public:
  explicit CycleType(Partition p) : type_(std::move(p)) {}
  const Partition& partition() const { return type_; }
  int degree() const { return type_.size(); }

  /// z_mu = prod_i i^{m_i} m_i!.
  mpz_class z() const {
    mpz_class z = 1;
    for (int i = 1; i <= degree(); ++i) {
      const int m = type_.multiplicity(i);
      for (int j = 0; j < m; ++j) z *= i;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
      z *= f;
    }
    return z;
  }

  mpz_class class_size() const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(degree()));
    return f / z();
  }

 private:
  Partition type_;
};

/// A permutation of {0..n-1}: perm[i] is the image of i.
using Permutation = std::vector<int>;

inline Partition cycle_type(const Permutation& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::sorted_from(std::move(lengths));
}

namespace detail {

inline long mn_character(std::vector<int> beta, std::span<const int> parts) {
  if (parts.empty()) {
    // Remaining shape is empty; its beta set is {0, 1, ..., l-1}.
    std::sort(beta.begin(), beta.end());
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != static_cast<int>(i)) return 0;
    return 1;
  }
  const int r = parts.front();
  const auto rest = parts.subspan(1);
  long total = 0;
  std::set<int> present(beta.begin(), beta.end());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || present.count(target)) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    auto next = beta;
    next[i] = target;
    const long sub = mn_character(std::move(next), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace detail

/// chi^shape evaluated on the class cls, by the Murnaghan-Nakayama rule.
inline long sn_character(const Partition& shape, const CycleType& cls) {
  if (shape.size() != cls.degree())
    throw DomainError("sn_character: " + shape.to_string() + " and class " + cls.partition().to_string() +
                      " have different sizes");
  static std::shared_mutex mu;
  static std::map<std::pair<Partition, Partition>, long> cache;
  const auto key = std::make_pair(shape, cls.partition());
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int l = shape.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = shape[i] + (l - 1 - i);
  const long value = detail::mn_character(std::move(beta), cls.partition().parts());
  std::unique_lock lock(mu);
  cache.emplace(key, value);
  return value;
}

/// h_mu = sum_lambda K_{lambda,mu} s_lambda.
inline SchurVector h_to_schur(const Partition& mu) {
  SchurVector v(mu.size());
  const WeakComposition content(mu.parts());
  for (const auto& lambda : partitions_of(mu.size())) {
    const long k = kostka_number(lambda, content);
    if (k != 0) v.add(lambda, SparsePoly(k));
  }
  return v;
}

enum class Subgroup { Sn, Cn, Hr };

inline std::string to_string(Subgroup g) {
  switch (g) {
    case Subgroup::Sn: return "Sn";
    case Subgroup::Cn: return "Cn";
    case Subgroup::Hr: return "Hr";
  }
  return "?";
}

inline Subgroup parse_subgroup(const std::string& s) {
  if (s == "Sn" || s == "S") return Subgroup::Sn;
  if (s == "Cn" || s == "C") return Subgroup::Cn;
  if (s == "Hr" || s == "H") return Subgroup::Hr;
  throw DomainError("unknown subgroup '" + s + "' (expected Sn, Cn or Hr)");
}

inline std::vector<Permutation> symmetric_group_elements(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Powers of the long cycle i -> i+1 mod n.
inline std::vector<Permutation> cyclic_group_elements(int n) {
  std::vector<Permutation> out;
  for (int j = 0; j < std::max(n, 1); ++j) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + j) % n;
    out.push_back(std::move(p));
  }
  return out;
}

/// Generators of H_r inside S_{2r}: the transpositions swapping each pair and
/// the double transpositions exchanging consecutive pairs.
inline std::vector<Permutation> hyperoctahedral_generators(int r) {
  const int n = 2 * r;
  std::vector<Permutation> gens;
  for (int i = 0; i < r; ++i) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[2 * i], p[2 * i + 1]);
    gens.push_back(std::move(p));
  }
  for (int i = 0; i + 1 < r; ++i) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[2 * i], p[2 * i + 2]);
    std::swap(p[2 * i + 1], p[2 * i + 3]);
    gens.push_back(std::move(p));
  }
  return gens;
}

/// Closure of a generating set under composition.
inline std::vector<Permutation> generated_group(int n, const std::vector<Permutation>& gens) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q(n);
        for (int i = 0; i < n; ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<Permutation> hyperoctahedral_by_closure(int r) {
  return generated_group(2 * r, hyperoctahedral_generators(r));
}

/// Stabilizer of the matching {{0,1},{2,3},...}: permute the pairs, then flip any subset.
inline std::vector<Permutation> hyperoctahedral_elements(int r) {
  const int n = 2 * r;
  std::vector<int> pair_perm(r);
  std::iota(pair_perm.begin(), pair_perm.end(), 0);
  std::vector<Permutation> out;
  do {
    for (int flips = 0; flips < (1 << r); ++flips) {
      Permutation p(n);
      for (int i = 0; i < r; ++i) {
        const int f = (flips >> i) & 1;
        p[2 * i] = 2 * pair_perm[i] + f;
        p[2 * i + 1] = 2 * pair_perm[i] + 1 - f;
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(pair_perm.begin(), pair_perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Permutation> subgroup_elements(Subgroup g, int n) {
  switch (g) {
    case Subgroup::Sn: return symmetric_group_elements(n);
    case Subgroup::Cn: return cyclic_group_elements(n);
    case Subgroup::Hr:
      if (n % 2 != 0) throw DomainError("H_r requires an even number of coordinates, got " + std::to_string(n));
      return hyperoctahedral_elements(n / 2);
  }
  throw DomainError("unknown subgroup");
}

/// dim (S^shape)^G from the closed forms.
inline long fixed_space_dim(const Partition& shape, Subgroup g) {
  const int n = shape.size();
  switch (g) {
    case Subgroup::Sn: return shape.length() <= 1 ? 1 : 0;
    case Subgroup::Cn: return n == 0 ? 1 : count_maj_divisible(shape, n);
    case Subgroup::Hr:
      if (n % 2 != 0) throw DomainError("fixed_space_dim: H_r requires even n, got " + std::to_string(n));
      return shape.is_even() ? 1 : 0;
  }
  throw DomainError("unknown subgroup");
}

/// (1/|G|) sum_{g in G} chi^shape(g) over an explicit element list.
inline long fixed_space_dim_by_averaging(const Partition& shape, const std::vector<Permutation>& elements) {
  std::map<Partition, long> type_counts;
  for (const auto& p : elements) ++type_counts[cycle_type(p)];
  long total = 0;
  for (const auto& [type, count] : type_counts) total += count * sn_character(shape, CycleType(type));
  const long order = static_cast<long>(elements.size());
  if (total % order != 0) throw InternalError("fixed_space_dim_by_averaging: character sum not divisible by |G|");
  return total / order;
}

inline long fixed_space_dim_by_averaging(const Partition& shape, Subgroup g) {
  return fixed_space_dim_by_averaging(shape, subgroup_elements(g, shape.size()));
}

/// sum_lambda c_lambda(q) dim (S^lambda)^G.
inline SparsePoly invariant_hilbert(const SchurVector& v, Subgroup g) {
  SparsePoly p;
  for (const auto& [shape, c] : v.coeffs()) {
    const long d = fixed_space_dim(shape, g);
    if (d != 0) p += c * mpz_class(d);
  }
  return p;
}

}  // namespace csp
