#pragma once

// Matrix-coefficient calculus over the Haar state.
//
// For each irreducible a with diagonal modular matrix Q_a and quantum
// dimension d_a = Tr(Q_a), Schur orthogonality gives
//
//   h((u^a_ij)^* u^b_st) = delta_ab delta_is delta_jt (Q_a)_ii^{-1} / d_a
//   h(u^a_ij (u^b_st)^*) = delta_ab delta_is delta_jt (Q_a)_jj / d_a
//
// and the modular automorphism acts by
//
//   sigma_z(u^a_st) = (Q_a)_ss^{iz} (Q_a)_tt^{iz} u^a_st.
//
// Two coefficient representations are provided. The exact one stores each
// coefficient as scale * ((Q)_ii (Q)_jj)^power with rationals scale and
// power; it supports sigma_z for purely imaginary z = -i s (multiplier
// (Q_ii Q_jj)^s) and yields exact norms whenever the powers that appear are
// rational. The floating one stores complex doubles and accepts any complex z.

#include "qk/models.hpp"
#include "qk/numeric.hpp"
#include "qk/rootsys.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

namespace qk {

/// Q spectra per irreducible; the diagonal order is QSpectrum::diagonal().
using QData = std::map<IrrLabel, QSpectrum>;

/// Basis element u^label_{ij}, 0-based indices.
struct BasisIndex {
  IrrLabel label;
  int i = 0;
  int j = 0;

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

struct ExactCoefficient {
  Rational scale;
  Rational power = 0;
};

struct ExactCoefficientVector {
  std::map<BasisIndex, ExactCoefficient> entries;
};

struct CoefficientVector {
  std::map<BasisIndex, std::complex<double>> entries;
};

/// Haar pairings of two basis elements, exact.
Rational haar_adjoint_left(const QData& q, const BasisIndex& a, const BasisIndex& b);   // h(a^* b)
Rational haar_adjoint_right(const QData& q, const BasisIndex& a, const BasisIndex& b);  // h(a b^*)

/// chi_label = sum_i u_ii, with unit scalar.
ExactCoefficientVector character(const QData& q, const IrrLabel& label);

/// sigma_{-i s}.
ExactCoefficientVector sigma_imaginary(const ExactCoefficientVector& v, const Rational& s, const QData& q);
CoefficientVector sigma_apply(const CoefficientVector& v, std::complex<double> z, const QData& q);

/// ||v||_2^2 = h(v^* v) via Schur orthogonality. Throws NotExact when an
/// irrational power of a Q entry would be needed.
Rational l2_norm_squared(const ExactCoefficientVector& v, const QData& q);
double l2_norm_squared(const CoefficientVector& v, const QData& q);

struct LemmaBaseCheck {
  Rational lhs;  // ||sigma_{-i/4}(chi)||_2^2
  Rational rhs;  // n / d
  bool equal = false;
};

/// Base case p = 2 of the smoothing lemma for one spectrum.
LemmaBaseCheck lemma_base_check(const QSpectrum& q);

/// h(u_ij (u_st)^*) == h((u_st)^* sigma_{-i}(u_ij)) for all index quadruples.
bool modular_duality_check(const QSpectrum& q);

using ComplexMatrix = Eigen::MatrixXcd;

/// f = sum_a x_a (x) chi_a with n x n coefficients.
struct CentralSeries {
  int n = 0;
  std::map<IrrLabel, ComplexMatrix> terms;
  QData spectra;
};

/// ||f||_{L^2(S^2_n)}^2 expanded over matrix-coefficient pairs with Schur orthogonality.
double l2_norm_squared(const CentralSeries& f);

struct TheoremP2Check {
  double lhs = 0;              // ||f||_{L^2(S^2_n)}
  double square_function = 0;  // ||(sum x^* x)^{1/2}||_{S^2_n}
  double rhs_bound = 0;        // K_2 * square_function
  bool holds = false;
};

/// Operator-valued inequality at p = 2. k2 = +inf is rejected (Divergent).
TheoremP2Check theorem_p2_check(const CentralSeries& f, double k2 = 1.0);

/// Diagonal rescaled by s = sqrt(Tr Q^{-1} / Tr Q) (floating point).
std::vector<double> trace_symmetrize(std::vector<double> diagonal);

/// Random exactly trace-symmetric rational spectrum of the given size.
/// Sizes >= 3 are in general not closed under inversion.
QSpectrum random_trace_symmetric_spectrum(std::mt19937_64& rng, int size);

}  // namespace qk
