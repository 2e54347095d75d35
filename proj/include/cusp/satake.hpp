#pragma once

// Bounds theta such that every cuspidal representation of Sp(2n) has all
// unramified Satake exponents in [0, theta]. Exact rationals only.

#include <cstdint>
#include <span>
#include <string>

#include <boost/rational.hpp>

#include "cusp/cuspidality.hpp"
#include "cusp/error.hpp"

namespace cusp {

using Rational = boost::rational<std::int64_t>;

/// Best known GL(2) exponent bound towards Ramanujan (Kim-Sarnak, Blomer-Brumley).
inline const Rational kGl2RamanujanExponent{7, 64};

struct ThetaBound {
  Rational theta;
  bool sharp = false;
  std::string source;
};

inline ThetaBound satake_exponent_bound(int n, FieldKind field) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (n % 2 == 0) {
    // Attained by the theta lifts with a (chi, n+1) summand.
    return {Rational(n, 2), true, "even-n-kudla-rallis"};
  }
  if (field == FieldKind::TotallyImaginary && n >= 5) {
    return {Rational(n - 1, 2), false, "odd-n-totally-imaginary"};
  }
  return {kGl2RamanujanExponent + Rational(n - 1, 2), false, "odd-n-gl2-ramanujan"};
}

/// Every exponent lies in [0, theta].
inline bool check_r_theta(std::span<const Rational> exponents, const Rational& theta) {
  for (const auto& a : exponents) {
    if (a < 0 || a > theta) return false;
  }
  return true;
}

inline std::string render_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace cusp
