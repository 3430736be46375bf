#pragma once

// Root systems and weight lattices of the simple Lie types.
//
// Normalization: the invariant form is scaled so that SHORT roots have
// (alpha, alpha) = 2. Simply-laced types therefore have all roots of length 2,
// B/C/F long roots have length 4 and the long root of G2 has length 6. The
// t-constants t_i = q^{(omega_i, 2 rho)} depend on this choice.
//
// Weights are written in the fundamental-weight basis; roots in the
// simple-root basis unless stated otherwise. Simple roots follow Bourbaki
// numbering (B_r: alpha_r short, C_r: alpha_r long, F4: alpha_1, alpha_2 long,
// G2: alpha_1 short, E: alpha_2 attached to alpha_4).

#include "qk/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qk {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Integral weight in fundamental-weight coordinates.
struct WeightVector {
  std::vector<std::int64_t> coeffs;

  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  WeightVector(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  bool dominant() const;
  /// Sum of the coefficients (the length |mu| of a dominant weight).
  std::int64_t level() const;
  std::string str() const;  // "(1,0,2)"

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

struct RootSystemData {
  LieType type = LieType::A;
  int rank = 0;
  /// a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  std::vector<std::vector<int>> cartan_matrix;
  /// (alpha_i, alpha_j) under the normalized form.
  std::vector<std::vector<int>> simple_root_gram;
  /// Positive roots, simple-root coordinates, sorted by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  /// (omega_i, omega_j).
  std::vector<std::vector<Rational>> fundamental_weight_gram;
  /// rho = sum of fundamental weights, i.e. all ones.
  WeightVector rho;

  /// (omega_i, beta) for every positive root beta: root_pairing[beta][i].
  std::vector<std::vector<std::int64_t>> root_pairing;
  /// (rho, beta) for every positive root beta.
  std::vector<std::int64_t> rho_pairing;
  /// Positive roots written in fundamental-weight coordinates.
  std::vector<WeightVector> positive_roots_weight_basis;

  std::string name() const;  // e.g. "G2"
  /// (alpha_i, alpha_i) / 2: 1 for short roots.
  int half_length(int i) const { return simple_root_gram[i][i] / 2; }
};

/// Validates (type, rank) and builds the data; positive roots come from
/// closing the simple roots under simple reflections.
RootSystemData build_root_system(LieType type, int rank);
/// Accepts "A1", "B2", "E8", ...
RootSystemData build_root_system(std::string_view name);
/// Shared, immutable instance; safe to call concurrently.
std::shared_ptr<const RootSystemData> shared_root_system(LieType type, int rank);

Rational inner_product(const RootSystemData& rs, std::span<const Rational> v, std::span<const Rational> w);
Rational inner_product(const RootSystemData& rs, const WeightVector& v, const WeightVector& w);

/// (mu, beta) for each positive root beta, in the order of rs.positive_roots.
std::vector<std::int64_t> root_pairings(const RootSystemData& rs, const WeightVector& mu);

/// Weyl dimension formula, exact.
Integer weyl_dimension(const RootSystemData& rs, const WeightVector& mu);

/// Dominant representative of the Weyl orbit of an integral weight.
WeightVector dominant_representative(const RootSystemData& rs, WeightVector lambda);

/// Weyl orbit of an integral weight, sorted.
std::vector<WeightVector> weyl_orbit(const RootSystemData& rs, const WeightVector& lambda);

/// Full weight system of the irreducible module of highest weight mu with
/// multiplicities (Freudenthal's formula on dominant weights, then orbits).
/// Results are memoized process-wide under a mutex.
std::map<WeightVector, Integer> weight_multiplicities(const RootSystemData& rs, const WeightVector& mu);

/// Spectrum of a positive diagonal matrix, as (eigenvalue, multiplicity)
/// pairs sorted by decreasing eigenvalue.
struct QSpectrum {
  std::vector<std::pair<Rational, std::int64_t>> entries;

  std::int64_t size() const;
  Rational trace() const;
  Rational inverse_trace() const;
  bool trace_symmetric() const;
  Rational max_eigenvalue() const;
  /// Expanded diagonal in the fixed order of entries.
  std::vector<Rational> diagonal() const;
  static QSpectrum from_diagonal(std::span<const Rational> diagonal);
};

/// (nu, 2 rho) for a weight nu; always an integer under the chosen normalization.
std::int64_t two_rho_pairing(const RootSystemData& rs, const WeightVector& nu);

/// Spectrum of the modular matrix Q_mu: eigenvalue q^{-(nu, 2 rho)} for every weight nu.
QSpectrum q_matrix_spectrum(const RootSystemData& rs, const WeightVector& mu, const Rational& q);

/// Symmetric q-integer [m]_q = (q^m - q^-m)/(q - q^-1).
Rational q_integer(std::int64_t m, const Rational& q);
Real q_integer(std::int64_t m, const Real& q);

/// d_mu = Tr(Q_mu), summed over the weight system.
Rational quantum_dimension(const RootSystemData& rs, const WeightVector& mu, const Rational& q);
/// d_mu via the q-deformed Weyl product prod [(mu+rho, beta)]_q / [(rho, beta)]_q.
Rational quantum_dimension_product(const RootSystemData& rs, const WeightVector& mu, const Rational& q);
Real quantum_dimension_product(const RootSystemData& rs, const WeightVector& mu, const Real& q);

/// (omega_i, 2 rho) for each i.
std::vector<std::int64_t> t_exponents(const RootSystemData& rs);
/// t_i = q^{(omega_i, 2 rho)}.
std::vector<Rational> t_constants(const RootSystemData& rs, const Rational& q);

/// Validates 0 < q < 1.
void require_deformation_parameter(const Rational& q);

}  // namespace qk
