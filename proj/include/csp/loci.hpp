#pragma once

// Point loci as word sets, the cyclic actions on them, fixed-point counting
// and orbit labels for S_n, C_n and H_r.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csp/errors.hpp"
#include "csp/partition.hpp"
#include "csp/symfunc.hpp"
#include "csp/word.hpp"

namespace csp {

enum class LocusFamily { X, Y, Z, Tanisaki, Springer };

inline std::string to_string(LocusFamily f) {
  switch (f) {
    case LocusFamily::X: return "X";
    case LocusFamily::Y: return "Y";
    case LocusFamily::Z: return "Z";
    case LocusFamily::Tanisaki: return "tanisaki";
    case LocusFamily::Springer: return "springer";
  }
  return "?";
}

inline LocusFamily parse_locus_family(const std::string& s) {
  if (s == "X" || s == "x") return LocusFamily::X;
  if (s == "Y" || s == "y") return LocusFamily::Y;
  if (s == "Z" || s == "z") return LocusFamily::Z;
  if (s == "tanisaki" || s == "Tanisaki") return LocusFamily::Tanisaki;
  if (s == "springer" || s == "Springer") return LocusFamily::Springer;
  throw DomainError("unknown locus family '" + s + "' (expected X, Y, Z, tanisaki or springer)");
}

struct LocusSpec {
  LocusFamily family = LocusFamily::X;
  int n = 0;
  int k = 0;
  WeakComposition mu;  // Tanisaki only: k = mu.length()
  int a = 1;           // Tanisaki only: cyclic symmetry order

  static LocusSpec x(int n, int k) { return {LocusFamily::X, n, k, {}, 1}; }
  static LocusSpec y(int n, int k) { return {LocusFamily::Y, n, k, {}, 1}; }
  static LocusSpec z(int n, int k) { return {LocusFamily::Z, n, k, {}, 1}; }
  static LocusSpec springer(int n) { return {LocusFamily::Springer, n, n, {}, 1}; }
  static LocusSpec tanisaki(WeakComposition mu, int a) {
    const int n = mu.size();
    const int k = mu.length();
    return {LocusFamily::Tanisaki, n, k, std::move(mu), a};
  }

  std::string to_string() const {
    std::string s = csp::to_string(family) + "(n=" + std::to_string(n) + ", k=" + std::to_string(k);
    if (family == LocusFamily::Tanisaki) s += ", mu=" + mu.to_string() + ", a=" + std::to_string(a);
    return s + ")";
  }
};

/// Throws unless mu is a valid Tanisaki content with a-fold cyclic symmetry.
inline void validate_tanisaki(const WeakComposition& mu, int a) {
  const int k = mu.length();
  if (k == 0) throw DomainError("Tanisaki locus: mu must have at least one part");
  if (mu.size() == 0) throw DomainError("Tanisaki locus: mu must have positive size");
  if (a <= 0 || k % a != 0)
    throw DomainError("Tanisaki locus: a = " + std::to_string(a) + " must divide k = " + std::to_string(k));
  if (!mu.has_cyclic_symmetry(a))
    throw DomainError("Tanisaki locus: mu = " + mu.to_string() + " is not invariant under shifting by a = " +
                      std::to_string(a));
}

class Locus {
 public:
  Locus(LocusSpec spec, std::vector<Word> elements, std::optional<std::string> warning = std::nullopt)
      : spec_(std::move(spec)), elements_(std::move(elements)), warning_(std::move(warning)) {
    std::sort(elements_.begin(), elements_.end());
  }

  const LocusSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int k() const { return spec_.k; }
  const std::vector<Word>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::optional<std::string>& warning() const { return warning_; }

  bool contains(const Word& w) const { return std::binary_search(elements_.begin(), elements_.end(), w); }

 private:
  LocusSpec spec_;
  std::vector<Word> elements_;
  std::optional<std::string> warning_;
};

namespace detail {

template <class Keep>
std::vector<Word> words_where(int n, int k, Keep&& keep) {
  std::vector<Word> out;
  if (n < 0 || k <= 0) return out;
  std::vector<int> w(n, 1);
  while (true) {
    if (keep(w)) out.emplace_back(w, k);
    int i = n - 1;
    while (i >= 0 && w[i] == k) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace detail

inline Locus enumerate_locus(const LocusSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  if (n <= 0 || k <= 0) throw DomainError("enumerate_locus: n and k must be positive in " + spec.to_string());
  switch (spec.family) {
    case LocusFamily::X:
      return Locus(spec, detail::words_where(n, k, [](const auto&) { return true; }));
    case LocusFamily::Y: {
      if (n > k) return Locus(spec, {}, "Y_{n,k} is empty when k < n");
      return Locus(spec, detail::words_where(n, k, [k](const std::vector<int>& w) {
                     std::vector<bool> seen(k + 1, false);
                     for (int x : w) {
                       if (seen[x]) return false;
                       seen[x] = true;
                     }
                     return true;
                   }));
    }
    case LocusFamily::Z: {
      if (k > n) return Locus(spec, {}, "Z_{n,k} is empty when n < k");
      return Locus(spec, detail::words_where(n, k, [k](const std::vector<int>& w) {
                     std::vector<bool> seen(k + 1, false);
                     int distinct = 0;
                     for (int x : w)
                       if (!seen[x]) {
                         seen[x] = true;
                         ++distinct;
                       }
                     return distinct == k;
                   }));
    }
    case LocusFamily::Springer: {
      if (k != n) throw DomainError("Springer locus requires k = n");
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      std::vector<Word> out;
      do out.emplace_back(p, n);
      while (std::next_permutation(p.begin(), p.end()));
      return Locus(spec, std::move(out));
    }
    case LocusFamily::Tanisaki: {
      validate_tanisaki(spec.mu, spec.a);
      if (spec.mu.length() != k || spec.mu.size() != n)
        throw DomainError("Tanisaki locus: n and k must equal |mu| and the number of parts of mu");
      std::vector<int> w;
      for (int i = 0; i < k; ++i) w.insert(w.end(), spec.mu[i], i + 1);
      std::vector<Word> out;
      do out.emplace_back(w, k);
      while (std::next_permutation(w.begin(), w.end()));
      return Locus(spec, std::move(out));
    }
  }
  throw DomainError("enumerate_locus: unknown family");
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw DomainError("compose: permutations of different degrees");
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) throw DomainError("not a permutation");
    seen[x] = true;
  }
}

/// A map on words. Composite actions apply their parts in list order.
class Action {
 public:
  enum class Kind { PositionRotation, ValueShift, Permutation, Composite };

  /// w_1 ... w_n -> w_{1+steps} ... w_{n+steps}, indices mod n.
  static Action position_rotation(int steps = 1) {
    Action a(Kind::PositionRotation);
    a.amount_ = steps;
    return a;
  }
  /// Each letter l -> l + step, wrapped into 1..modulus.
  static Action value_shift(int step, int modulus) {
    if (modulus <= 0) throw DomainError("value_shift: modulus must be positive");
    Action a(Kind::ValueShift);
    a.amount_ = step;
    a.modulus_ = modulus;
    return a;
  }
  /// (sigma . w)_i = w_{sigma^{-1}(i)}; sigma given 0-based.
  static Action permutation(csp::Permutation sigma) {
    validate_permutation(sigma);
    Action a(Kind::Permutation);
    a.perm_ = std::move(sigma);
    return a;
  }
  static Action composite(std::vector<Action> parts) {
    Action a(Kind::Composite);
    a.parts_ = std::move(parts);
    return a;
  }
  static Action identity() { return composite({}); }

  Kind kind() const { return kind_; }

  Action power(int r) const {
    if (r < 0) throw DomainError("Action::power: negative exponent");
    switch (kind_) {
      case Kind::PositionRotation: return position_rotation(amount_ * r);
      case Kind::ValueShift: return value_shift(amount_ * r, modulus_);
      case Kind::Permutation: {
        csp::Permutation p(perm_.size());
        std::iota(p.begin(), p.end(), 0);
        for (int i = 0; i < r; ++i) p = compose(perm_, p);
        return permutation(std::move(p));
      }
      case Kind::Composite: {
        std::vector<Action> parts;
        for (int i = 0; i < r; ++i) parts.insert(parts.end(), parts_.begin(), parts_.end());
        return composite(std::move(parts));
      }
    }
    throw InternalError("Action::power: unknown kind");
  }

  Word apply(const Word& w) const {
    const int n = w.length();
    switch (kind_) {
      case Kind::PositionRotation: {
        if (n == 0) return w;
        const int s = ((amount_ % n) + n) % n;
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[i] = w[(i + s) % n];
        return Word(std::move(out), w.alphabet);
      }
      case Kind::ValueShift: {
        if (modulus_ != w.alphabet)
          throw DomainError("value_shift modulus " + std::to_string(modulus_) + " does not match alphabet size " +
                            std::to_string(w.alphabet));
        const int s = ((amount_ % modulus_) + modulus_) % modulus_;
        std::vector<int> out(w.letters);
        for (int& l : out) l = (l - 1 + s) % modulus_ + 1;
        return Word(std::move(out), w.alphabet);
      }
      case Kind::Permutation: {
        if (static_cast<int>(perm_.size()) != n)
          throw DomainError("permutation action of degree " + std::to_string(perm_.size()) +
                            " applied to a word of length " + std::to_string(n));
        std::vector<int> out(n);
        for (int i = 0; i < n; ++i) out[perm_[i]] = w[i];
        return Word(std::move(out), w.alphabet);
      }
      case Kind::Composite: {
        Word cur = w;
        for (const auto& p : parts_) cur = p.apply(cur);
        return cur;
      }
    }
    throw InternalError("Action::apply: unknown kind");
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::PositionRotation: return "rotate_positions^" + std::to_string(amount_);
      case Kind::ValueShift: return "shift_values(+" + std::to_string(amount_) + " mod " + std::to_string(modulus_) + ")";
      case Kind::Permutation: {
        std::string s = "permute[";
        for (std::size_t i = 0; i < perm_.size(); ++i) s += (i ? " " : "") + std::to_string(perm_[i] + 1);
        return s + "]";
      }
      case Kind::Composite: {
        if (parts_.empty()) return "identity";
        std::string s;
        for (const auto& p : parts_) s += (s.empty() ? "" : " then ") + p.to_string();
        return s;
      }
    }
    return "?";
  }

 private:
  explicit Action(Kind k) : kind_(k) {}
  Kind kind_;
  int amount_ = 0;
  int modulus_ = 0;
  csp::Permutation perm_;
  std::vector<Action> parts_;
};

inline Word apply_action(const Action& a, const Word& w) { return a.apply(w); }

/// Number of elements fixed by the action; the action must map the locus into itself.
inline long count_fixed(const Locus& l, const Action& a) {
  long fixed = 0;
  for (const auto& w : l.elements()) {
    const Word image = a.apply(w);
    if (image == w) {
      ++fixed;
      continue;
    }
    if (!l.contains(image))
      throw InternalError("count_fixed: " + a.to_string() + " sends " + w.to_string() + " outside " +
                          l.spec().to_string());
  }
  return fixed;
}

/// True iff the two actions commute on every element of the locus.
inline bool actions_commute(const Locus& l, const Action& a, const Action& b) {
  for (const auto& w : l.elements())
    if (b.apply(a.apply(w)) != a.apply(b.apply(w))) return false;
  return true;
}

/// Orbit label: S_n -> content vector, C_n -> minimal rotation,
/// H_r -> sorted list of sorted letter pairs, flattened.
inline std::vector<int> canonical_form(const Word& w, Subgroup g) {
  const int n = w.length();
  switch (g) {
    case Subgroup::Sn: return w.content();
    case Subgroup::Cn: {
      std::vector<int> best = w.letters;
      std::vector<int> rot(n);
      for (int s = 1; s < n; ++s) {
        for (int i = 0; i < n; ++i) rot[i] = w[(i + s) % n];
        if (rot < best) best = rot;
      }
      return best;
    }
    case Subgroup::Hr: {
      if (n % 2 != 0) throw DomainError("canonical_form: H_r needs even length, got " + std::to_string(n));
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; i += 2) edges.emplace_back(std::min(w[i], w[i + 1]), std::max(w[i], w[i + 1]));
      std::sort(edges.begin(), edges.end());
      std::vector<int> out;
      for (const auto& [x, y] : edges) {
        out.push_back(x);
        out.push_back(y);
      }
      return out;
    }
  }
  throw DomainError("canonical_form: unknown subgroup");
}

inline std::string label_to_string(const std::vector<int>& label, Subgroup g) {
  std::string s;
  if (g == Subgroup::Hr) {
    for (std::size_t i = 0; i + 1 < label.size(); i += 2)
      s += (i ? "," : "") + std::string("{") + std::to_string(label[i]) + "," + std::to_string(label[i + 1]) + "}";
    return s;
  }
  const char* sep = g == Subgroup::Sn ? "," : " ";
  if (g == Subgroup::Sn) s += "(";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? sep : "") + std::to_string(label[i]);
  if (g == Subgroup::Sn) s += ")";
  return s;
}

/// The G-orbits of a locus, each stored as label -> representative word.
class OrbitSet {
 public:
  using Label = std::vector<int>;

  OrbitSet(const Locus& l, Subgroup g) : spec_(l.spec()), group_(g) {
    for (const auto& w : l.elements()) orbits_.try_emplace(canonical_form(w, g), w);
  }

  const LocusSpec& spec() const { return spec_; }
  Subgroup group() const { return group_; }
  std::size_t size() const { return orbits_.size(); }
  const std::map<Label, Word>& orbits() const { return orbits_; }
  bool contains(const Label& label) const { return orbits_.count(label) != 0; }

  /// Induced action: act on the representative, then relabel. The action must commute with G.
  Label apply(const Action& a, const Label& label) const {
    auto it = orbits_.find(label);
    if (it == orbits_.end()) throw DomainError("OrbitSet::apply: unknown label");
    return canonical_form(a.apply(it->second), group_);
  }

 private:
  LocusSpec spec_;
  Subgroup group_;
  std::map<Label, Word> orbits_;
};

inline OrbitSet orbit_set(const Locus& l, Subgroup g) { return OrbitSet(l, g); }

inline long count_fixed(const OrbitSet& o, const Action& a) {
  long fixed = 0;
  for (const auto& [label, rep] : o.orbits()) {
    const auto image = o.apply(a, label);
    if (image == label) {
      ++fixed;
      continue;
    }
    if (!o.contains(image)) throw InternalError("count_fixed: induced action leaves the orbit set");
  }
  return fixed;
}

}  // namespace csp
