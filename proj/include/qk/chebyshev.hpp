#pragma once

// Chebyshev polynomials of the second kind in the normalization
// f_0 = 1, f_1 = t, f_{k+1} = t f_k - f_{k-1}, so f_k(2) = k + 1 and
// f_k(t) = (u^{k+1} - u^{-(k+1)}) / (u - u^{-1}) with u = (t + sqrt(t^2 - 4))/2
// for t > 2. The even-index family g_k(x) = f_{2k}(sqrt x) is a polynomial in
// x obeying g_0 = 1, g_1 = x - 1, g_{k+1} = (x - 2) g_k - g_{k-1}.

#include "qk/numeric.hpp"

#include <vector>

namespace qk {

/// Exact three-term recursion; t >= 2.
Rational chebyshev_f(unsigned k, const Rational& t);
Real chebyshev_f(unsigned k, const Real& t);
/// f_0 .. f_kmax.
std::vector<Rational> chebyshev_f_sequence(unsigned kmax, const Rational& t);

/// Closed form; only defined for t > 2.
Real chebyshev_f_closed(unsigned k, const Real& t);

/// Exact recursion in x; x >= 4 (x = 4 gives 2k + 1).
Rational chebyshev_g(unsigned k, const Rational& x);
Real chebyshev_g(unsigned k, const Real& x);
std::vector<Rational> chebyshev_g_sequence(unsigned kmax, const Rational& x);

/// u = (t + sqrt(t^2 - 4)) / 2 for t >= 2.
Real growth_base(const Real& t);

struct ChebEnvelope {
  Real lower;
  Real upper;
  Real base_u;

  bool contains(const Real& value) const { return lower <= value && value <= upper; }
};

/// Two-sided bracket of f_k(t) for t > 2:
/// [u^{k+1}(1 - u^{-2(k+1)}) / (u - u^{-1}), u^{k+1} / (u - u^{-1})],
/// widened by O(k) ulps of the working precision.
ChebEnvelope envelope(unsigned k, const Real& t);

}  // namespace qk
