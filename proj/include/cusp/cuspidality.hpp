#pragma once

// Bounds on the weight of even Fourier-coefficient partitions with bounded
// multiplicities, and a rule engine deciding when an Arthur packet of Sp(2n)
// provably has no cuspidal member. Rules carry the assumption, if any, that
// they depend on; the verdict only aggregates rules whose assumption is
// active.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cusp/arthur.hpp"
#include "cusp/error.hpp"
#include "cusp/partition.hpp"

namespace cusp {

enum class FieldKind { General, TotallyImaginary, TotallyReal };

enum class Assumption {
  UpbfcDominanceBound,  // Fourier partitions of discrete members lie below eta in dominance
  ConjJ14Part1,         // eta dominates every maximal Fourier partition
  MoeglinConjecture,
};

inline const char* to_string(FieldKind f) {
  switch (f) {
    case FieldKind::General: return "general";
    case FieldKind::TotallyImaginary: return "totally-imaginary";
    case FieldKind::TotallyReal: return "totally-real";
  }
  return "?";
}

inline const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::UpbfcDominanceBound: return "upbfc";
    case Assumption::ConjJ14Part1: return "conj-j14-1";
    case Assumption::MoeglinConjecture: return "moeglin";
  }
  return "?";
}

class AssumptionSet {
 public:
  AssumptionSet() = default;
  AssumptionSet(std::initializer_list<Assumption> flags) {
    for (auto a : flags) insert(a);
  }

  void insert(Assumption a) { bits_ |= bit(a); }
  bool contains(Assumption a) const noexcept { return (bits_ & bit(a)) != 0; }

  friend bool operator==(const AssumptionSet&, const AssumptionSet&) = default;

 private:
  static unsigned bit(Assumption a) { return 1U << static_cast<unsigned>(a); }
  unsigned bits_ = 0;
};

struct BoundsReport {
  int n_a = 0;
  int n1 = 0;
  int n2 = 0;
  Partition n1_witness;
  Partition n2_witness;
};

enum class Status { NoCuspidal, ContainsCuspidal, Undetermined };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::NoCuspidal: return "NoCuspidal";
    case Status::ContainsCuspidal: return "ContainsCuspidal";
    case Status::Undetermined: return "Undetermined";
  }
  return "?";
}

enum class RuleId {
  Generic,
  KudlaRallis,
  UnipotentDominance,
  RankSumBound,
  LexGrsBound,
  DominanceGrsBound,
  Moeglin,
};

inline const char* to_string(RuleId r) {
  switch (r) {
    case RuleId::Generic: return "R1-generic";
    case RuleId::KudlaRallis: return "R2-kudla-rallis";
    case RuleId::UnipotentDominance: return "R3-unipotent-dominance";
    case RuleId::RankSumBound: return "R4-rank-sum-bound";
    case RuleId::LexGrsBound: return "R5-lex-grs-bound";
    case RuleId::DominanceGrsBound: return "R6-dominance-grs-bound";
    case RuleId::Moeglin: return "R7-moeglin";
  }
  return "?";
}

struct Firing {
  RuleId rule;
  Status implies;
  std::optional<Assumption> conditional_on;

  friend bool operator==(const Firing&, const Firing&) = default;
};

struct Verdict {
  Status status = Status::Undetermined;
  std::vector<Firing> firings;
  BoundsReport bounds;
  Partition p_psi;
  Partition eta;
  int n = 0;
  std::vector<std::string> warnings;
};

/// (sum a)^2 + 2 sum a when the rank sum is even, (sum a)^2 - 1 otherwise.
inline int n_a(std::span<const int> ranks) {
  if (ranks.empty()) throw Error(ErrorKind::InvalidArgument, "rank list is empty");
  int total = 0;
  for (int a : ranks) {
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "ranks must be positive");
    total += a;
  }
  return total % 2 == 0 ? total * total + 2 * total : total * total - 1;
}

/// Whether self-dual types can be chosen so that (a_i, b_i) forms a valid
/// parameter: even b forces symplectic type and hence even a, and the total
/// sum of a_i b_i must be odd.
inline bool b_a_contains(std::span<const int> ranks, std::span<const int> mults) {
  if (ranks.size() != mults.size()) {
    throw Error(ErrorKind::InvalidArgument, "rank and multiplicity lists differ in length");
  }
  long long total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1 || mults[i] < 1) return false;
    if (mults[i] % 2 == 0 && ranks[i] % 2 != 0) return false;
    total += static_cast<long long>(ranks[i]) * mults[i];
  }
  return total % 2 == 1;
}

enum class GrsOrder { Lex, Dominance };

struct GrsMaximum {
  int weight = 0;
  Partition witness;
};

namespace detail {

inline bool grs_prefix_ok(std::span<const int> prefix) {
  for (std::size_t i = 0; i < prefix.size();) {
    if (prefix[i] % 2 != 0) return false;
    std::size_t j = i;
    while (j < prefix.size() && prefix[j] == prefix[i]) ++j;
    if (j - i > 4) return false;
    i = j;
  }
  return true;
}

inline void better(GrsMaximum& best, std::vector<int> parts) {
  Partition cand(std::move(parts));
  const int w = cand.weight();
  if (w > best.weight || (w == best.weight && compare_lex(cand, best.witness) == OrderRel::Greater)) {
    best.weight = w;
    best.witness = std::move(cand);
  }
}

// Lex order: p <= eta iff p == eta or p agrees with eta up to some position
// and is smaller there. After the first smaller position the tail is free,
// so the heaviest choice is four copies of every even value below the
// largest even value under eta_i.
inline GrsMaximum grs_max_lex(const Partition& eta) {
  GrsMaximum best;
  const auto parts = eta.parts();
  if (is_grs_admissible(eta)) better(best, {parts.begin(), parts.end()});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto prefix = parts.first(i);
    if (!grs_prefix_ok(prefix)) break;
    std::vector<int> cand(prefix.begin(), prefix.end());
    const int top = parts[i] % 2 == 0 ? parts[i] - 2 : parts[i] - 1;
    for (int v = top; v >= 2; v -= 2) cand.insert(cand.end(), 4, v);
    better(best, std::move(cand));
  }
  return best;
}

// Dominance order: parts are placed value by value from the largest even
// value down, tracking the position and prefix sum; every prefix sum must
// stay under the matching prefix sum of eta. Memoised on (value, position,
// prefix sum), which bounds the work by O(|eta|^3).
class DominanceSearch {
 public:
  explicit DominanceSearch(const Partition& eta) : total_(eta.weight()) {
    for (int v = eta.largest() - eta.largest() % 2; v >= 2; v -= 2) values_.push_back(v);
    int s = 0;
    for (int part : eta) {
      s += part;
      prefix_.push_back(s);
    }
  }

  GrsMaximum run() {
    GrsMaximum out;
    std::vector<int> parts;
    std::size_t vi = 0;
    int k = 0;
    int s = 0;
    while (vi < values_.size()) {
      const int target = best(vi, k, s);
      const int v = values_[vi];
      for (int m = 4; m >= 0; --m) {
        if (!fits(v, m, k, s)) continue;
        if (m * v + best(vi + 1, k + m, s + m * v) == target) {
          parts.insert(parts.end(), static_cast<std::size_t>(m), v);
          k += m;
          s += m * v;
          break;
        }
      }
      ++vi;
    }
    out.witness = Partition(std::move(parts));
    out.weight = out.witness.weight();
    return out;
  }

 private:
  int cap(int position) const {
    // position counts parts placed so far (1-based prefix length)
    return position <= static_cast<int>(prefix_.size()) ? prefix_[static_cast<std::size_t>(position - 1)]
                                                         : total_;
  }

  bool fits(int v, int m, int k, int s) const {
    for (int j = 1; j <= m; ++j) {
      if (s + j * v > cap(k + j)) return false;
    }
    return true;
  }

  int best(std::size_t vi, int k, int s) {
    if (vi == values_.size()) return 0;
    const std::uint64_t key = (static_cast<std::uint64_t>(vi) << 40) |
                              (static_cast<std::uint64_t>(k) << 20) | static_cast<std::uint64_t>(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int result = 0;
    const int v = values_[vi];
    for (int m = 4; m >= 0; --m) {
      if (!fits(v, m, k, s)) continue;
      result = std::max(result, m * v + best(vi + 1, k + m, s + m * v));
    }
    memo_.emplace(key, result);
    return result;
  }

  int total_;
  std::vector<int> values_;
  std::vector<int> prefix_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// Largest weight of a GRS-admissible partition p <= eta in the given
/// order, with the lexicographically largest such p as witness. An empty
/// feasible family yields weight 0 and the empty partition.
inline GrsMaximum grs_max_weight(const Partition& eta, GrsOrder order) {
  if (!is_symplectic(eta)) {
    throw Error(ErrorKind::InvalidPartition, "bound search needs a symplectic partition");
  }
  if (order == GrsOrder::Lex) return detail::grs_max_lex(eta);
  return detail::DominanceSearch(eta).run();
}

inline BoundsReport bounds(const ArthurParameter& psi, const Partition& dual) {
  BoundsReport r;
  r.n_a = n_a(psi.ranks());
  auto lex = grs_max_weight(dual, GrsOrder::Lex);
  auto dom = grs_max_weight(dual, GrsOrder::Dominance);
  r.n1 = lex.weight;
  r.n1_witness = std::move(lex.witness);
  r.n2 = dom.weight;
  r.n2_witness = std::move(dom.witness);
  return r;
}

inline BoundsReport bounds(const ArthurParameter& psi) { return bounds(psi, eta(psi)); }

namespace detail {

inline bool rank_one_with(const ArthurParameter& psi, auto&& pred) {
  for (const auto& s : psi.summands()) {
    if (s.rank == 1 && pred(s.mult)) return true;
  }
  return false;
}

inline bool moeglin_condition(const ArthurParameter& psi) {
  const auto& s = psi.summands();
  if (s.size() < 2) return false;
  for (std::size_t j1 = 0; j1 < s.size(); ++j1) {
    bool all = true;
    for (std::size_t j2 = 0; j2 < s.size() && all; ++j2) {
      if (j2 == j1) continue;
      all = s[j1].mult >= s[j1].rank + s[j2].rank + s[j2].mult;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace detail

/// Evaluates every rule, records each one whose hypothesis on psi holds,
/// and aggregates the firings that are unconditional or whose assumption is
/// active. Throws InternalInvariantViolation when active firings disagree.
inline Verdict verdict(const ArthurParameter& psi, FieldKind field, const AssumptionSet& assumptions) {
  Verdict v;
  v.n = psi.n();
  v.p_psi = p_psi(psi);
  v.eta = bv_dual_sp(v.p_psi);
  v.bounds = bounds(psi, v.eta);
  v.warnings = psi.warnings();

  const int n = v.n;
  const int two_n = 2 * n;
  const bool imaginary = field == FieldKind::TotallyImaginary;
  auto fire = [&](RuleId rule, Status implies, std::optional<Assumption> cond = std::nullopt) {
    v.firings.push_back({rule, implies, cond});
  };

  if (is_generic(psi)) fire(RuleId::Generic, Status::ContainsCuspidal);
  // The pole of L(s, pi x chi) bounds b by 1 + 2[n/2]: n+1 for even n, n for odd n.
  if (detail::rank_one_with(psi, [&](int b) { return n % 2 == 0 ? b > n + 1 : b > n; })) {
    fire(RuleId::KudlaRallis, Status::NoCuspidal);
  }
  if (detail::rank_one_with(psi, [&](int b) { return b > n + 1; })) {
    fire(RuleId::UnipotentDominance, Status::NoCuspidal, Assumption::UpbfcDominanceBound);
  }
  if (imaginary && two_n > v.bounds.n_a) fire(RuleId::RankSumBound, Status::NoCuspidal);
  if (imaginary && two_n > v.bounds.n1) fire(RuleId::LexGrsBound, Status::NoCuspidal);
  if (imaginary && two_n > v.bounds.n2) {
    fire(RuleId::DominanceGrsBound, Status::NoCuspidal, Assumption::ConjJ14Part1);
  }
  if (detail::moeglin_condition(psi)) {
    fire(RuleId::Moeglin, Status::NoCuspidal, Assumption::MoeglinConjecture);
  }

  bool none = false;
  bool some = false;
  for (const auto& f : v.firings) {
    if (f.conditional_on && !assumptions.contains(*f.conditional_on)) continue;
    (f.implies == Status::NoCuspidal ? none : some) = true;
  }
  if (none && some) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "active rules imply both NoCuspidal and ContainsCuspidal");
  }
  v.status = none ? Status::NoCuspidal : some ? Status::ContainsCuspidal : Status::Undetermined;
  return v;
}

}  // namespace cusp
