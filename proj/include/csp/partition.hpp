#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "csp/errors.hpp"

namespace csp {

/// A partition, stored with weakly decreasing strictly positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive, got " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must weakly decrease, got " + to_string());
    }
  }

  /// Sorts decreasingly and drops zeros.
  static Partition sorted_from(std::vector<int> values) {
    std::erase_if(values, [](int v) { return v == 0; });
    for (int v : values)
      if (v < 0) throw DomainError("Partition: negative value");
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  /// b(lambda) = sum (i-1) lambda_i.
  int b() const {
    int s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
    return s;
  }

  Partition conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition{};
    for (int j = 0; j < parts_[0]; ++j) {
      int h = 0;
      while (h < length() && parts_[h] > j) ++h;
      c.push_back(h);
    }
    return Partition(std::move(c));
  }

  /// Hook lengths of all cells, row by row.
  std::vector<int> hook_lengths() const {
    const Partition conj = conjugate();
    std::vector<int> hooks;
    for (int i = 0; i < length(); ++i)
      for (int j = 0; j < parts_[i]; ++j) hooks.push_back(parts_[i] - j + conj[j] - i - 1);
    return hooks;
  }

  bool is_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Orders partitions with (n) first and (1^n) last.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// All partitions of n, (n) first.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All partitions with at most max_length parts, each at most max_part (empty one included).
inline std::vector<Partition> partitions_in_box(int max_length, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = bound; p >= 1; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  if (max_length < 0 || max_part < 0) return out;
  rec(max_part);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a > b;
  });
  return out;
}

/// A finite sequence of nonnegative integers; order is significant.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw DomainError("WeakComposition: negative part");
  }
  WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition sorted() const { return Partition::sorted_from(parts_); }

  /// mu_i == mu_{i+a} for all i, indices mod the length.
  bool has_cyclic_symmetry(int a) const {
    const int k = length();
    if (a <= 0 || k == 0 || k % a != 0) return false;
    for (int i = 0; i < k; ++i)
      if (parts_[i] != parts_[(i + a) % k]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const WeakComposition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All weak compositions of n with exactly k parts, lexicographically decreasing.
inline std::vector<WeakComposition> weak_compositions(int n, int k) {
  std::vector<WeakComposition> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (static_cast<int>(cur.size()) == k - 1) {
      cur.push_back(remaining);
      out.emplace_back(cur);
      cur.pop_back();
      return;
    }
    for (int p = remaining; p >= 0; --p) {
      cur.push_back(p);
      rec(remaining - p);
      cur.pop_back();
    }
  };
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(n);
  return out;
}

/// Rearranges the nonzero entries of (n - l(lambda), m_1, ..., m_{k-1}) into a partition.
inline Partition m_of(const Partition& lambda, int n, int k) {
  if (lambda.length() > n) throw DomainError("m_of: partition " + lambda.to_string() + " longer than n");
  if (!lambda.empty() && lambda[0] >= k) throw DomainError("m_of: largest part of " + lambda.to_string() + " must be < k");
  std::vector<int> v{n - lambda.length()};
  for (int i = 1; i < k; ++i) v.push_back(lambda.multiplicity(i));
  return Partition::sorted_from(std::move(v));
}

}  // namespace csp
