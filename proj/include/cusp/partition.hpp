#pragma once

// Exact partition arithmetic for nilpotent-orbit combinatorics of the
// classical groups: transposition, collapses, the two partition orders,
// Barbasch-Vogan duality into type C, special partitions and expansions,
// and the even "GRS" shapes with bounded multiplicities.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cusp/error.hpp"

namespace cusp {

/// A non-increasing sequence of positive integers. The empty partition is
/// the partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Accepts the parts in any order; zeros are dropped. Throws
  /// InvalidPartition on a negative value.
  Partition(std::initializer_list<int> values) : Partition(std::vector<int>(values)) {}

  explicit Partition(std::vector<int> values) {
    for (int v : values) {
      if (v < 0) throw Error(ErrorKind::InvalidPartition, "negative part " + std::to_string(v));
    }
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    parts_ = std::move(values);
  }

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Part i, or 0 past the end (the zero padding used by both orders).
  int at_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  int multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  /// Distinct part values (descending) with their multiplicities.
  std::vector<std::pair<int, int>> grouped() const {
    std::vector<std::pair<int, int>> out;
    for (int v : parts_) {
      if (!out.empty() && out.back().first == v) {
        ++out.back().second;
      } else {
        out.emplace_back(v, 1);
      }
    }
    return out;
  }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

enum class GroupFamily { B, C, D };

enum class OrderRel { Less, Equal, Greater, Incomparable };

inline const char* to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::B: return "B";
    case GroupFamily::C: return "C";
    case GroupFamily::D: return "D";
  }
  return "?";
}

inline const char* to_string(OrderRel r) {
  switch (r) {
    case OrderRel::Less: return "Less";
    case OrderRel::Equal: return "Equal";
    case OrderRel::Greater: return "Greater";
    case OrderRel::Incomparable: return "Incomparable";
  }
  return "?";
}

inline Partition normalize(std::vector<int> values) { return Partition(std::move(values)); }

inline Partition transpose(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

inline Partition pointwise_sum(const Partition& p, const Partition& q) {
  std::vector<int> out(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.at_or_zero(i) + q.at_or_zero(i);
  return Partition(std::move(out));
}

/// Lowers the smallest part by one; a part that reaches zero disappears.
inline Partition decrement(const Partition& p) {
  if (p.empty()) throw Error(ErrorKind::InvalidPartition, "decrement of the empty partition");
  std::vector<int> out(p.begin(), p.end());
  --out.back();
  return Partition(std::move(out));
}

/// Odd parts occur with even multiplicity.
inline bool is_symplectic(const Partition& p) {
  for (auto [value, mult] : p.grouped()) {
    if (value % 2 == 1 && mult % 2 == 1) return false;
  }
  return true;
}

/// Even parts occur with even multiplicity.
inline bool is_orthogonal(const Partition& p) {
  for (auto [value, mult] : p.grouped()) {
    if (value % 2 == 0 && mult % 2 == 1) return false;
  }
  return true;
}

/// Parity of the weight and of the multiplicities match the family:
/// B orthogonal of odd weight, C symplectic of even weight, D orthogonal of
/// even weight.
inline bool is_admissible(const Partition& p, GroupFamily family) {
  const bool odd = p.weight() % 2 == 1;
  switch (family) {
    case GroupFamily::B: return odd && is_orthogonal(p);
    case GroupFamily::C: return !odd && is_symplectic(p);
    case GroupFamily::D: return !odd && is_orthogonal(p);
  }
  return false;
}

inline OrderRel compare_lex(const Partition& p, const Partition& q) {
  const std::size_t len = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int a = p.at_or_zero(i);
    const int b = q.at_or_zero(i);
    if (a < b) return OrderRel::Less;
    if (a > b) return OrderRel::Greater;
  }
  return OrderRel::Equal;
}

inline OrderRel compare_dominance(const Partition& p, const Partition& q) {
  const std::size_t len = std::max(p.size(), q.size());
  bool p_below = true;
  bool q_below = true;
  int sp = 0;
  int sq = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sp += p.at_or_zero(i);
    sq += q.at_or_zero(i);
    if (sp > sq) p_below = false;
    if (sq > sp) q_below = false;
  }
  if (p_below && q_below) return OrderRel::Equal;
  if (p_below) return OrderRel::Less;
  if (q_below) return OrderRel::Greater;
  return OrderRel::Incomparable;
}

/// p <= q in the dominance order.
inline bool dominated_by(const Partition& p, const Partition& q) {
  const OrderRel r = compare_dominance(p, q);
  return r == OrderRel::Less || r == OrderRel::Equal;
}

/// p <= q in the lexicographic order.
inline bool lex_at_most(const Partition& p, const Partition& q) {
  return compare_lex(p, q) != OrderRel::Greater;
}

/// Largest symplectic partition of the same weight dominated by p.
///
/// Repeatedly take the largest odd part q of odd multiplicity, lower its
/// last occurrence to q-1 and raise the first later part smaller than q-1 by
/// one. Each step keeps the sequence non-increasing and the weight fixed.
inline Partition symplectic_collapse(const Partition& p) {
  if (p.weight() % 2 != 0) {
    throw Error(ErrorKind::InvalidWeight,
                "symplectic collapse needs an even weight, got " + std::to_string(p.weight()));
  }
  std::vector<int> v(p.begin(), p.end());
  const int guard = p.weight() * p.weight() + 1;
  for (int step = 0;; ++step) {
    if (step > guard) {
      throw Error(ErrorKind::InternalInvariantViolation, "symplectic collapse did not terminate");
    }
    int q = 0;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (v[i] % 2 == 1 && (j - i) % 2 == 1) {
        q = v[i];
        break;
      }
      i = j;
    }
    if (q == 0) break;
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == q) last = i;
    }
    v[last] = q - 1;
    std::size_t j = last + 1;
    while (j < v.size() && v[j] >= q - 1) ++j;
    if (j == v.size()) v.push_back(0);
    ++v[j];
    std::erase(v, 0);
  }
  return Partition(std::move(v));
}

/// Intermediate partitions of both duality recipes, kept for display.
struct BvDualTrace {
  Partition input;
  Partition decremented;            // p^-
  Partition collapsed_decremented;  // (p^-)_Sp
  Partition via_collapse;           // ((p^-)_Sp)^t
  Partition transposed;             // p^t
  Partition transposed_decremented; // (p^t)^-
  Partition via_transpose;          // ((p^t)^-)_Sp
  Partition eta;
};

/// Barbasch-Vogan dual of an orthogonal partition of 2n+1, computed by both
/// recipes; the two must coincide.
inline BvDualTrace bv_dual_trace(const Partition& p) {
  if (p.weight() % 2 != 1) {
    throw Error(ErrorKind::InvalidWeight,
                "duality needs an odd weight, got " + std::to_string(p.weight()));
  }
  if (!is_orthogonal(p)) {
    throw Error(ErrorKind::InvalidPartition,
                "duality is defined on orthogonal partitions; even parts need even multiplicity");
  }
  BvDualTrace t;
  t.input = p;
  t.decremented = decrement(p);
  t.collapsed_decremented = symplectic_collapse(t.decremented);
  t.via_collapse = transpose(t.collapsed_decremented);
  t.transposed = transpose(p);
  t.transposed_decremented = decrement(t.transposed);
  t.via_transpose = symplectic_collapse(t.transposed_decremented);
  if (t.via_collapse != t.via_transpose) {
    throw Error(ErrorKind::InternalInvariantViolation, "duality recipes disagree");
  }
  if (!is_symplectic(t.via_collapse)) {
    throw Error(ErrorKind::InternalInvariantViolation, "dual partition is not symplectic");
  }
  t.eta = t.via_collapse;
  return t;
}

inline Partition bv_dual_sp(const Partition& p) { return bv_dual_trace(p).eta; }

/// Calls visit(parts) for every partition of `weight`, in lexicographically
/// decreasing order. `parts` is only valid during the call.
template <typename Visitor>
void for_each_partition(int weight, Visitor&& visit) {
  if (weight < 0) return;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(weight));
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      visit(std::span<const int>(parts));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      parts.push_back(k);
      self(self, remaining - k, k);
      parts.pop_back();
    }
  };
  rec(rec, weight, weight);
}

inline std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  for_each_partition(weight, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

/// Special in the sense of the Lusztig-Spaltenstein classification, tested on
/// the transpose: B needs an orthogonal transpose, C and D a symplectic one.
inline bool is_special(const Partition& p, GroupFamily family) {
  if (!is_admissible(p, family)) {
    throw Error(ErrorKind::InvalidPartition,
                std::string("partition is not a ") + to_string(family) + "-partition");
  }
  const Partition t = transpose(p);
  return family == GroupFamily::B ? is_orthogonal(t) : is_symplectic(t);
}

/// Smallest special partition dominating p, found by search over all
/// partitions of |p|.
inline Partition expansion(const Partition& p, GroupFamily family) {
  if (!is_admissible(p, family)) {
    throw Error(ErrorKind::InvalidPartition,
                std::string("partition is not a ") + to_string(family) + "-partition");
  }
  if (is_special(p, family)) return p;
  std::vector<Partition> above;
  for_each_partition(p.weight(), [&](std::span<const int> parts) {
    Partition q(std::vector<int>(parts.begin(), parts.end()));
    if (is_admissible(q, family) && is_special(q, family) && dominated_by(p, q)) {
      above.push_back(std::move(q));
    }
  });
  std::vector<const Partition*> minimal;
  for (const auto& q : above) {
    const bool is_min = std::none_of(above.begin(), above.end(), [&](const Partition& r) {
      return compare_dominance(r, q) == OrderRel::Less;
    });
    if (is_min) minimal.push_back(&q);
  }
  if (minimal.size() != 1) {
    throw Error(ErrorKind::AmbiguousExpansion,
                std::to_string(minimal.size()) + " minimal special partitions dominate the input");
  }
  return *minimal.front();
}

/// Even parts only, each distinct value used between one and four times.
inline bool is_grs_admissible(const Partition& p) {
  for (auto [value, mult] : p.grouped()) {
    if (value % 2 != 0 || mult > 4) return false;
  }
  return true;
}

/// Every GRS-admissible partition with parts at most max_part, the empty
/// partition included. Ordered lexicographically decreasing.
inline std::vector<Partition> enumerate_grs(int max_part) {
  if (max_part < 0 || max_part % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "max_part must be a non-negative even integer, got " + std::to_string(max_part));
  }
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int value) -> void {
    if (value == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int m = 4; m >= 0; --m) {
      parts.insert(parts.end(), static_cast<std::size_t>(m), value);
      self(self, value - 2);
      parts.resize(parts.size() - static_cast<std::size_t>(m));
    }
  };
  rec(rec, max_part);
  return out;
}

}  // namespace cusp
