#pragma once

// Young tableaux: standard/semistandard enumeration, Kostka numbers,
// descent statistics and the RSK correspondence.

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "csp/errors.hpp"
#include "csp/partition.hpp"

namespace csp {

class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 1; i < rows_.size(); ++i)
      if (rows_[i].size() > rows_[i - 1].size() || rows_[i].empty())
        throw DomainError("Tableau: row lengths must weakly decrease");
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }

  int size() const {
    int s = 0;
    for (const auto& r : rows_) s += static_cast<int>(r.size());
    return s;
  }

  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (rows_[i][j] < 1) return false;
        if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
        if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) return false;
      }
    }
    return true;
  }

  bool is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> seen(size() + 1, 0);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v > size() || seen[v]) return false;
        seen[v] = 1;
      }
    return true;
  }

  /// Multiplicities of 1..max entry.
  std::vector<int> content() const {
    int mx = 0;
    for (const auto& r : rows_)
      for (int v : r) mx = std::max(mx, v);
    std::vector<int> c(mx, 0);
    for (const auto& r : rows_)
      for (int v : r) ++c[v - 1];
    return c;
  }

  /// Rows read left to right, bottom row first.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += " / ";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) s += ' ';
        s += std::to_string(rows_[i][j]);
      }
    }
    return s;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

struct MajDes {
  int maj = 0;
  int des = 0;
  bool operator==(const MajDes&) const = default;
};

/// Descents are positions i (1-based) with w_i > w_{i+1}.
inline MajDes maj_des(std::span<const int> word) {
  MajDes r;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) {
      r.maj += static_cast<int>(i) + 1;
      ++r.des;
    }
  }
  return r;
}

/// i is a descent when i+1 sits in a strictly lower row than i.
inline MajDes maj_des(const Tableau& t) {
  if (!t.is_standard()) throw DomainError("maj_des: tableau " + t.to_string() + " is not standard");
  const int n = t.size();
  std::vector<int> row_of(n + 1, 0);
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (int v : t.rows()[i]) row_of[v] = static_cast<int>(i);
  MajDes r;
  for (int i = 1; i < n; ++i) {
    if (row_of[i + 1] > row_of[i]) {
      r.maj += i;
      ++r.des;
    }
  }
  return r;
}

/// All standard tableaux of the shape, in a fixed deterministic order.
inline std::vector<Tableau> generate_syt(const Partition& shape) {
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (int i = 0; i < shape.length(); ++i) {
      const auto len = static_cast<int>(rows[i].size());
      if (len >= shape[i]) continue;
      if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
      rows[i].push_back(next);
      rec(next + 1);
      rows[i].pop_back();
    }
  };
  rec(1);
  return out;
}

/// Calls visit(rows) for every semistandard tableau of the given shape and
/// content. Each letter is placed as a horizontal strip, so only feasible
/// fillings are ever visited.
template <class Visit>
void for_each_ssyt(const Partition& shape, std::span<const int> content, Visit&& visit) {
  long total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("for_each_ssyt: negative content");
    total += c;
  }
  if (total != shape.size())
    throw DomainError("SSYT enumeration: content size " + std::to_string(total) + " differs from shape size " +
                      std::to_string(shape.size()));
  const int rows_n = shape.length();
  std::vector<std::vector<int>> rows(rows_n);
  std::function<void(std::size_t)> place_letter;
  // Distributes `remaining` copies of `letter` over rows >= row as a horizontal strip.
  std::function<void(std::size_t, int, int, const std::vector<int>&)> strip =
      [&](std::size_t letter_idx, int row, int remaining, const std::vector<int>& old_len) {
        if (remaining == 0) {
          place_letter(letter_idx + 1);
          return;
        }
        if (row >= rows_n) return;
        const int cap_shape = shape[row] - static_cast<int>(rows[row].size());
        const int cap_strip = row == 0 ? cap_shape : old_len[row - 1] - static_cast<int>(rows[row].size());
        const int cap = std::min({cap_shape, cap_strip, remaining});
        for (int take = cap; take >= 0; --take) {
          for (int j = 0; j < take; ++j) rows[row].push_back(static_cast<int>(letter_idx) + 1);
          strip(letter_idx, row + 1, remaining - take, old_len);
          for (int j = 0; j < take; ++j) rows[row].pop_back();
        }
      };
  place_letter = [&](std::size_t letter_idx) {
    if (letter_idx == content.size()) {
      visit(static_cast<const std::vector<std::vector<int>>&>(rows));
      return;
    }
    std::vector<int> old_len(rows_n);
    for (int i = 0; i < rows_n; ++i) old_len[i] = static_cast<int>(rows[i].size());
    strip(letter_idx, 0, content[letter_idx], old_len);
  };
  place_letter(0);
}

inline std::vector<Tableau> generate_ssyt(const Partition& shape, std::span<const int> content) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(rows); });
  return out;
}

/// Number of semistandard tableaux of the shape with the given content.
inline long kostka_number(const Partition& shape, const WeakComposition& content) {
  long count = 0;
  for_each_ssyt(shape, content.parts(), [&](const auto&) { ++count; });
  return count;
}

/// Row-insertion RSK: (insertion tableau P, recording tableau Q).
inline std::pair<Tableau, Tableau> rsk(std::span<const int> word) {
  std::vector<std::vector<int>> p, q;
  for (std::size_t idx = 0; idx < word.size(); ++idx) {
    int x = word[idx];
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(idx) + 1});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(static_cast<int>(idx) + 1);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

/// a_{lambda,n}: standard tableaux of the shape with n | maj.
inline long count_maj_divisible(const Partition& shape, int n) {
  if (n <= 0) throw DomainError("count_maj_divisible: n must be positive");
  if (shape.size() != n) throw DomainError("count_maj_divisible: |shape| must equal n");
  long c = 0;
  for (const auto& t : generate_syt(shape))
    if (maj_des(t).maj % n == 0) ++c;
  return c;
}

/// Words whose letter i appears content_i times, with n | maj.
inline long count_maj_divisible(const WeakComposition& content, int n) {
  if (n <= 0) throw DomainError("count_maj_divisible: n must be positive");
  if (content.size() != n) throw DomainError("count_maj_divisible: content must sum to n");
  std::vector<int> w;
  for (int i = 0; i < content.length(); ++i) w.insert(w.end(), content[i], i + 1);
  long c = 0;
  do {
    if (maj_des(w).maj % n == 0) ++c;
  } while (std::next_permutation(w.begin(), w.end()));
  return c;
}

}  // namespace csp
