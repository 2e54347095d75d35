#pragma once

// Small cuspidal spectrum of the split classical groups: non-singular
// partitions and their expansions, the minimal even shape forced over
// totally imaginary fields, conjectured lower bounds for SO, and recognizers
// for the parameter families whose cuspidal members have [2^n] as their only
// maximal Fourier partition.

#include <string>
#include <vector>

#include "cusp/arthur.hpp"
#include "cusp/cuspidality.hpp"
#include "cusp/error.hpp"
#include "cusp/partition.hpp"

namespace cusp {

namespace detail {

inline Partition repeated(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> parts;
  for (auto [value, mult] : blocks) {
    if (mult > 0) parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
  }
  return Partition(std::move(parts));
}

// Subset-sum reachability of `target` using value v at most `left` more
// times and every smaller even value at most four times.
inline bool grs_reachable(int target, int v, int left) {
  if (target < 0 || target % 2 != 0) return false;
  std::vector<char> can(static_cast<std::size_t>(target) + 1, 0);
  can[0] = 1;
  auto add = [&](int value, int copies) {
    for (int c = 0; c < copies; ++c) {
      for (int s = target; s >= value; --s) {
        if (can[static_cast<std::size_t>(s - value)]) can[static_cast<std::size_t>(s)] = 1;
      }
    }
  };
  add(v, left);
  for (int u = v - 2; u >= 2; u -= 2) add(u, 4);
  return can[static_cast<std::size_t>(target)] != 0;
}

}  // namespace detail

/// Lexicographically smallest GRS-admissible partition of two_n, built part
/// by part taking the smallest value whose remainder is still reachable.
inline Partition grs_minimal_partition(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "weight must be an even integer >= 2");
  }
  std::vector<int> parts;
  int remaining = two_n;
  int prev = 0;
  int used = 0;
  while (remaining > 0) {
    bool placed = false;
    for (int x = 2; x <= remaining && !placed; x += 2) {
      if (prev != 0 && x > prev) break;
      const int copies = x == prev ? used + 1 : 1;
      if (copies > 4) continue;
      if (!detail::grs_reachable(remaining - x, x, 4 - copies)) continue;
      parts.push_back(x);
      remaining -= x;
      used = copies;
      prev = x;
      placed = true;
    }
    if (!placed) throw Error(ErrorKind::InternalInvariantViolation, "no GRS partition of the requested weight");
  }
  return Partition(std::move(parts));
}

/// Partition of the maximal-rank abelian Fourier coefficients of G_n.
inline Partition nonsingular_partition(GroupFamily family, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  const int e = n / 2;
  const bool even = n % 2 == 0;
  switch (family) {
    case GroupFamily::C: return detail::repeated({{2, n}});
    case GroupFamily::B: return even ? detail::repeated({{2, 2 * e}, {1, 1}}) : detail::repeated({{2, 2 * e}, {1, 3}});
    case GroupFamily::D: return even ? detail::repeated({{2, 2 * e}}) : detail::repeated({{2, 2 * e}, {1, 2}});
  }
  return {};
}

inline Partition nonsingular_expansion(GroupFamily family, int n) {
  return expansion(nonsingular_partition(family, n), family);
}

struct ConjecturedBound {
  Partition partition;
  bool conjectural = true;
};

/// Conjectured sharp lower bound for Fourier partitions of cuspidal
/// representations of SO(2n+1) (family B) or SO(2n) (family D).
inline ConjecturedBound conjectured_so_lower_bound(GroupFamily family, int n) {
  if (family == GroupFamily::C) {
    throw Error(ErrorKind::InvalidArgument, "the conjectured lower bound concerns orthogonal groups");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  const int e = n / 2;
  const bool even = n % 2 == 0;
  if (family == GroupFamily::B) {
    return {even ? detail::repeated({{3, e}, {1, e + 1}}) : detail::repeated({{3, e + 1}, {1, e}})};
  }
  if (!even && e == 0) throw Error(ErrorKind::InvalidArgument, "SO(2) has no such bound; need n >= 2");
  return {even ? detail::repeated({{3, e}, {1, e}}) : detail::repeated({{5, 1}, {3, e - 1}, {1, e}})};
}

enum class SmallFamily { SaitoKurokawaEven, SaitoKurokawaOdd, Rank3Tower, None };

inline const char* to_string(SmallFamily f) {
  switch (f) {
    case SmallFamily::SaitoKurokawaEven: return "SaitoKurokawaEven";
    case SmallFamily::SaitoKurokawaOdd: return "SaitoKurokawaOdd";
    case SmallFamily::Rank3Tower: return "Rank3Tower";
    case SmallFamily::None: return "None";
  }
  return "?";
}

struct FamilyMatch {
  SmallFamily family = SmallFamily::None;
  Partition claimed_pm;  // [2^n] on a match
  int e = 0;
};

/// Recognizes, for n = 2e, (tau,2i)+(1,4e-4i+1) with tau symplectic on
/// GL(2); for n = 2e+1, (tau,2i+1)+(omega_tau,4e-4i+1) with tau orthogonal
/// on GL(2); both with e <= 2i <= 2e. For n = 3e+1, (tau,2e+1) with tau
/// orthogonal on GL(3). A character known to be nontrivial where a trivial
/// one is required prevents a match.
inline FamilyMatch small_family_match(const ArthurParameter& psi) {
  FamilyMatch out;
  const auto& s = psi.summands();
  const int n = psi.n();

  auto accept = [&](SmallFamily family, int e) {
    out.family = family;
    out.e = e;
    out.claimed_pm = detail::repeated({{2, n}});
    if (eta(psi).largest() > 3) {
      throw Error(ErrorKind::InternalInvariantViolation, "small family with a dual part above 3");
    }
  };

  if (s.size() == 1) {
    const auto& t = s[0];
    if (t.rank == 3 && t.dual_type == SelfDualType::Orthogonal && t.mult >= 3 &&
        t.central_char.triviality != Triviality::Nontrivial) {
      accept(SmallFamily::Rank3Tower, (t.mult - 1) / 2);
    }
    return out;
  }
  if (s.size() != 2) return out;

  const bool first_is_char = s[0].rank == 1;
  const SimpleParameter& tau = first_is_char ? s[1] : s[0];
  const SimpleParameter& chi = first_is_char ? s[0] : s[1];
  if (chi.rank != 1 || tau.rank != 2) return out;
  const int b = tau.mult;
  const int c = chi.mult;

  if (tau.dual_type == SelfDualType::Symplectic && n % 2 == 0 &&
      chi.central_char.triviality != Triviality::Nontrivial) {
    const int e = n / 2;
    if (e >= 1 && c == 4 * e - 2 * b + 1 && e <= b && b <= 2 * e) accept(SmallFamily::SaitoKurokawaEven, e);
  } else if (tau.dual_type == SelfDualType::Orthogonal && n % 2 == 1) {
    const int e = (n - 1) / 2;
    const int two_i = b - 1;
    if (e >= 1 && c == 4 * e - 2 * two_i + 1 && e <= two_i && two_i <= 2 * e) {
      accept(SmallFamily::SaitoKurokawaOdd, e);
    }
  }
  return out;
}

enum class HypercuspidalVerdict { NoneExist, Unknown };

inline const char* to_string(HypercuspidalVerdict v) {
  return v == HypercuspidalVerdict::NoneExist ? "NoneExist" : "Unknown";
}

inline HypercuspidalVerdict hypercuspidal_existence(int n, FieldKind field) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  return field == FieldKind::TotallyImaginary && n >= 5 ? HypercuspidalVerdict::NoneExist
                                                        : HypercuspidalVerdict::Unknown;
}

}  // namespace cusp
