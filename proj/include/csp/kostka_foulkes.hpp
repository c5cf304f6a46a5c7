#pragma once

// Fake degrees f^lambda(q) and modified Kostka-Foulkes polynomials via the
// Lascoux-Schutzenberger charge statistic.

#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "csp/errors.hpp"
#include "csp/partition.hpp"
#include "csp/sparse_poly.hpp"
#include "csp/tableau.hpp"

namespace csp {

/// f^lambda(q) = q^{b(lambda)} [n]!_q / prod_cells [h_c]_q.
inline SparsePoly fake_degree(const Partition& shape) {
  static std::mutex mu;
  static std::map<Partition, SparsePoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(shape); it != cache.end()) return it->second;
  }
  SparsePoly den = 1;
  for (int h : shape.hook_lengths()) den *= q_integer(h);
  SparsePoly result = SparsePoly::q(shape.b()) * SparsePoly::exact_divide(q_factorial(shape.size()), den);
  std::lock_guard lock(mu);
  cache.emplace(shape, result);
  return result;
}

/// Sum over SYT(shape) of q^maj.
inline SparsePoly fake_degree_by_maj(const Partition& shape) {
  SparsePoly p;
  for (const auto& t : generate_syt(shape)) p += SparsePoly::q(maj_des(t).maj);
  return p;
}

/// Charge of a word whose content is a partition (letter i occurs mu_i times,
/// mu weakly decreasing). Standard subwords are peeled off repeatedly: take the
/// rightmost 1, then move left cyclically to the next 2, 3, ...; each wrap
/// around the end raises the index by one.
inline int charge(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return 0;
  int max_letter = 0;
  for (int x : word) {
    if (x < 1) throw DomainError("charge: letters must be positive");
    max_letter = std::max(max_letter, x);
  }
  std::vector<int> count(max_letter + 1, 0);
  for (int x : word) ++count[x];
  for (int i = 2; i <= max_letter; ++i)
    if (count[i] > count[i - 1]) throw DomainError("charge: content must be a partition");

  std::vector<bool> alive(n, true);
  int remaining = n;
  int total = 0;
  while (remaining > 0) {
    int top = 0;
    while (top + 1 <= max_letter && count[top + 1] > 0) ++top;
    int pos = -1;
    for (int i = n - 1; i >= 0; --i)
      if (alive[i] && word[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) throw InternalError("charge: standard subword extraction lost letter 1");
    alive[pos] = false;
    --count[1];
    --remaining;
    int index = 0;
    for (int letter = 2; letter <= top; ++letter) {
      int found = -1;
      for (int i = pos - 1; i >= 0; --i)
        if (alive[i] && word[i] == letter) {
          found = i;
          break;
        }
      if (found < 0) {
        ++index;
        for (int i = n - 1; i > pos; --i)
          if (alive[i] && word[i] == letter) {
            found = i;
            break;
          }
      }
      if (found < 0) throw InternalError("charge: standard subword extraction lost a letter");
      total += index;
      alive[found] = false;
      --count[letter];
      --remaining;
      pos = found;
    }
  }
  return total;
}

/// Charge of a tableau through its reading word.
inline int charge(const Tableau& t) {
  const auto w = t.reading_word();
  return charge(std::span<const int>(w));
}

/// K~_{shape,content}(q) = sum over SSYT(shape, content) of q^{b(content) - charge}.
inline SparsePoly kostka_foulkes(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw DomainError("kostka_foulkes: |" + shape.to_string() + "| != |" + content.to_string() + "|");
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, SparsePoly> cache;
  const auto key = std::make_pair(shape, content);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int nmu = content.b();
  SparsePoly p;
  for_each_ssyt(shape, content.parts(), [&](const std::vector<std::vector<int>>& rows) {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    const int cocharge = nmu - charge(std::span<const int>(w));
    if (cocharge < 0) throw InternalError("kostka_foulkes: negative cocharge");
    p += SparsePoly::q(cocharge);
  });
  std::lock_guard lock(mu);
  cache.emplace(key, p);
  return p;
}

}  // namespace csp
