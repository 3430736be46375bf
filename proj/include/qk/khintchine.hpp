#pragma once

// The Khintchine constant
//
//   K_p^2 = sum over irreducibles a of ||chi_a||_inf^{2 - 4/p} (n_a / d_a)^{2/p},
//
// summed level by level in increasing length with a certified tail bound,
// together with the decay rates of n_a / d_a and the L^r -> L^1 equivalence
// constants derived from K_p for dyadic p.
//
// K_p is evaluated for every real p >= 2. The inequality it controls is only
// established for p = 2^k; the constant itself is well defined for all p.

#include "qk/models.hpp"
#include "qk/numeric.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace qk {

enum class Verdict { Converged, Divergent, Inconclusive };

std::string_view verdict_name(Verdict v);

struct KpOptions {
  /// Worker threads used to evaluate levels; results do not depend on it.
  unsigned threads = 1;
  unsigned precision_bits = kDefaultPrecisionBits;
};

struct KpReport {
  Rational p;
  /// Levels 0..terms_summed were summed exactly (up to working precision).
  std::int64_t terms_summed = -1;
  Real partial_sum;
  /// Upper bound for the sum over all levels > terms_summed; +inf when none is available.
  Real tail_bound;
  Verdict verdict = Verdict::Inconclusive;
  /// K_p lies in [kp_lower, kp_upper] (kp_upper = +inf unless Converged).
  Real kp_lower;
  Real kp_upper;
  /// Lower bound on every term, for Divergent reports.
  std::string divergence_witness;
  unsigned precision_bits = kDefaultPrecisionBits;
};

/// Sum of the K_p^2 terms over the irreducibles of length k, in
/// enumerate_level order. Uses the current Real precision.
Real level_sum(const QuantumGroupModel& model, const Rational& p, std::int64_t k);

/// Upper bound for the sum of the terms of all levels > L. Non-increasing in
/// L; +inf while the geometric domination is not yet certified. Throws
/// ErrorCode::Divergent for Kac models.
Real certified_tail(const QuantumGroupModel& model, const Rational& p, std::int64_t L);

/// Sums levels until certified_tail < tol. Inconclusive if max_length levels
/// are exhausted first; Divergent for Kac models (every term is >= 1).
KpReport kp_constant(const QuantumGroupModel& model, const Rational& p, const Real& tol, std::int64_t max_length,
                     const KpOptions& options = {});

struct DecayReport {
  /// Closed-form r with n/d <~ r^{|a|} (1 for Kac models).
  Real theoretical_base;
  /// (max over level H of n/d)^{1/H}.
  Real empirical_base;
  /// Smallest C with max_{|a|=k} n/d <= C * theoretical_base^k for all k <= horizon.
  Real constant_envelope;
  unsigned horizon = 50;
};

DecayReport decay_rate(const QuantumGroupModel& model, unsigned horizon = 50);

struct CorollaryExponents {
  Rational to_l2;  // p/(p-2):           ||f||_2 <= K^e ||f||_1
  Rational to_lp;  // (2p-2)/(p-2):      ||f||_p <= K^e ||f||_1
  Rational to_lr;  // 2p(r-1)/(r(p-2)):  ||f||_r <= K^e ||f||_1
};

/// p must be a power of two >= 4 and r >= 1.
CorollaryExponents corollary_exponents(const Rational& p, const Rational& r);

struct CorollaryConstants {
  Rational p;
  Rational r;
  CorollaryExponents exponents;
  Real c_2_1;
  Real c_p_1;
  Real c_r_1;
};

/// Constants from the upper end of a converged K_p interval. Throws
/// ErrorCode::Divergent / ErrorCode::Inconclusive otherwise.
CorollaryConstants corollary_constants(const KpReport& kp, const Rational& r);

}  // namespace qk
