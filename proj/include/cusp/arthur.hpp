#pragma once

// Symbolic global Arthur parameters for Sp(2n): formal sums of pairs
// (tau_i, b_i) where tau_i is an opaque self-dual cuspidal representation of
// GL(a_i) known only through its rank, self-dual type and central character.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cusp/error.hpp"
#include "cusp/partition.hpp"

namespace cusp {

enum class SelfDualType { Orthogonal, Symplectic };

enum class Triviality { Trivial, Nontrivial, Unknown };

struct CharacterLabel {
  std::string name;
  Triviality triviality = Triviality::Unknown;

  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

struct SimpleParameter {
  std::string label;
  int rank = 1;
  int mult = 1;
  SelfDualType dual_type = SelfDualType::Orthogonal;
  CharacterLabel central_char;

  friend bool operator==(const SimpleParameter&, const SimpleParameter&) = default;
};

enum class ValidationErrorKind {
  EmptyParameter,
  EmptyLabel,
  NonPositive,
  NotOddWeight,
  WeightTooSmall,
  ParityRule,
  DuplicateSummand,
};

inline const char* to_string(ValidationErrorKind k) {
  switch (k) {
    case ValidationErrorKind::EmptyParameter: return "EmptyParameter";
    case ValidationErrorKind::EmptyLabel: return "EmptyLabel";
    case ValidationErrorKind::NonPositive: return "NonPositive";
    case ValidationErrorKind::NotOddWeight: return "NotOddWeight";
    case ValidationErrorKind::WeightTooSmall: return "WeightTooSmall";
    case ValidationErrorKind::ParityRule: return "ParityRule";
    case ValidationErrorKind::DuplicateSummand: return "DuplicateSummand";
  }
  return "?";
}

struct ValidationError {
  ValidationErrorKind kind;
  std::string message;
};

class ArthurParameter;
struct ValidationResult;
ValidationResult validate(std::vector<SimpleParameter> summands);

/// A validated parameter. Only validate() constructs one, so every instance
/// satisfies the parity, weight and distinctness rules.
class ArthurParameter {
 public:
  const std::vector<SimpleParameter>& summands() const noexcept { return summands_; }

  /// The group is Sp(2n) with 2n+1 = sum of rank * mult.
  int n() const noexcept { return n_; }

  /// Advisory notes, e.g. a central-character product known to be nontrivial.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  std::vector<int> ranks() const {
    std::vector<int> out;
    for (const auto& s : summands_) out.push_back(s.rank);
    return out;
  }

  std::vector<int> mults() const {
    std::vector<int> out;
    for (const auto& s : summands_) out.push_back(s.mult);
    return out;
  }

 private:
  friend ValidationResult validate(std::vector<SimpleParameter> summands);
  ArthurParameter() = default;

  std::vector<SimpleParameter> summands_;
  int n_ = 0;
  std::vector<std::string> warnings_;
};

struct ValidationResult {
  std::optional<ArthurParameter> parameter;
  std::vector<ValidationError> errors;

  bool ok() const noexcept { return parameter.has_value(); }

  bool has(ValidationErrorKind kind) const {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const ValidationError& e) { return e.kind == kind; });
  }

  std::string message() const {
    std::string out;
    for (const auto& e : errors) {
      if (!out.empty()) out += "; ";
      out += std::string(to_string(e.kind)) + ": " + e.message;
    }
    return out;
  }

  /// The parameter, or InvalidArgument carrying every validation error.
  const ArthurParameter& value() const {
    if (!parameter) throw Error(ErrorKind::InvalidArgument, message());
    return *parameter;
  }
};

namespace detail {

// Self-dual cuspidal representations have quadratic central characters, so
// omega^b is trivial for even b and otherwise contributes omega itself.
// Returns a warning when the product is known to be nontrivial.
inline std::optional<std::string> central_character_warning(
    const std::vector<SimpleParameter>& summands) {
  std::map<std::string, int> odd_nontrivial;
  for (const auto& s : summands) {
    if (s.central_char.triviality == Triviality::Unknown) return std::nullopt;
    if (s.central_char.triviality == Triviality::Nontrivial && s.mult % 2 == 1) {
      ++odd_nontrivial[s.central_char.name];
    }
  }
  int surviving = 0;
  std::string name;
  for (const auto& [n, count] : odd_nontrivial) {
    if (count % 2 == 1) {
      ++surviving;
      name = n;
    }
  }
  if (surviving == 1) {
    return "product of central characters is " + name + ", not trivial";
  }
  return std::nullopt;
}

}  // namespace detail

inline ValidationResult validate(std::vector<SimpleParameter> summands) {
  ValidationResult result;
  auto fail = [&](ValidationErrorKind kind, std::string msg) {
    result.errors.push_back({kind, std::move(msg)});
  };

  if (summands.empty()) {
    fail(ValidationErrorKind::EmptyParameter, "a parameter needs at least one summand");
    return result;
  }

  long long total = 0;
  std::set<std::pair<std::string, int>> seen;
  for (const auto& s : summands) {
    const std::string who = "(" + s.label + "," + std::to_string(s.mult) + ")";
    if (s.label.empty()) fail(ValidationErrorKind::EmptyLabel, "summand label is empty");
    if (s.rank < 1 || s.mult < 1) {
      fail(ValidationErrorKind::NonPositive, who + " needs rank >= 1 and multiplicity >= 1");
      continue;
    }
    total += static_cast<long long>(s.rank) * s.mult;
    if (s.dual_type == SelfDualType::Symplectic) {
      if (s.rank % 2 != 0) {
        fail(ValidationErrorKind::ParityRule, who + " symplectic type needs an even rank");
      }
      if (s.mult % 2 != 0) {
        fail(ValidationErrorKind::ParityRule, who + " symplectic type needs an even multiplicity");
      }
    } else if (s.mult % 2 != 1) {
      fail(ValidationErrorKind::ParityRule, who + " orthogonal type needs an odd multiplicity");
    }
    if (!seen.emplace(s.label, s.mult).second) {
      fail(ValidationErrorKind::DuplicateSummand, who + " occurs twice");
    }
  }

  if (!result.has(ValidationErrorKind::NonPositive)) {
    if (total % 2 == 0) {
      fail(ValidationErrorKind::NotOddWeight,
           "sum of rank*mult is " + std::to_string(total) + ", must be odd");
    } else if (total < 3) {
      fail(ValidationErrorKind::WeightTooSmall,
           "sum of rank*mult is " + std::to_string(total) + ", must be at least 3");
    }
  }
  if (!result.errors.empty()) return result;

  ArthurParameter psi;
  psi.n_ = static_cast<int>((total - 1) / 2);
  if (auto w = detail::central_character_warning(summands)) psi.warnings_.push_back(*w);
  psi.summands_ = std::move(summands);
  result.parameter = std::move(psi);
  return result;
}

/// [b_1^{a_1} ... b_r^{a_r}], a partition of 2n+1.
inline Partition p_psi(const ArthurParameter& psi) {
  std::vector<int> parts;
  for (const auto& s : psi.summands()) parts.insert(parts.end(), static_cast<std::size_t>(s.rank), s.mult);
  return Partition(std::move(parts));
}

inline bool is_generic(const ArthurParameter& psi) {
  const auto& s = psi.summands();
  return std::all_of(s.begin(), s.end(), [](const SimpleParameter& x) { return x.mult == 1; });
}

/// Barbasch-Vogan dual of p_psi, a symplectic partition of 2n.
inline Partition eta(const ArthurParameter& psi) { return bv_dual_sp(p_psi(psi)); }

}  // namespace cusp
