#pragma once

// Number types shared by every module.
//
// Exact work is done in GMP rationals. Anything involving square roots,
// non-integer powers or very long sums is done in MPFR through Boost's
// variable-precision wrapper. The working precision of Real is a process-wide
// setting (Boost 1.74 keeps it in a global); set it with PrecisionScope before
// spawning worker threads and never change it from inside a worker.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace qk {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

unsigned digits10_for_bits(unsigned bits);

/// RAII guard for the Real working precision (in bits).
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_digits10_;
};

/// Parses "7", "-2/5", "3.5", "1e-10", "0.125e2" into an exact rational.
/// Decimal literals are converted exactly (3.5 -> 7/2).
Rational parse_rational(std::string_view text);

/// Nearest rational with denominator 2^denominator_bits. This is the
/// documented conversion for floating-point inputs of the exact layers.
Rational rational_from_double(double x, unsigned denominator_bits = 64);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Real to_real(const Rational& value);
Real to_real(const Integer& value);

/// Scientific decimal string with a fixed number of significant digits;
/// "inf" for +infinity. Deterministic for a fixed value and digit count.
std::string format_real(const Real& value, int significant_digits);

/// base^exponent for any integer exponent (base must be nonzero when the
/// exponent is negative).
Rational rational_pow(const Rational& base, long exponent);

/// Exact square root when value is the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

/// Exact n-th root when it exists.
bool exact_root(const Rational& value, unsigned n, Rational& root);

Real real_infinity();

}  // namespace qk
