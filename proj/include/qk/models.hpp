#pragma once

// The three families of non-Kac compact quantum groups, plus their Kac
// degenerations, behind one value type.
//
//   djq:<type><rank>:<q>   Drinfeld-Jimbo deformation G_q, 0 < q < 1.
//                          Irreducibles are dominant weights, |mu| = sum of
//                          coefficients, n = Weyl dimension, d = Tr(Q_mu),
//                          ||chi_mu||_inf = n (coamenability of G_q).
//   oplus:<N>:<Nq>         Free orthogonal O_F^+ with N = size of F and
//                          Nq = Tr(F^*F) >= N. Irreducibles k = 0, 1, ...,
//                          n_k = f_k(N), d_k = f_k(Nq), ||chi_k||_inf = k + 1.
//   aut:<dimB>:<d1>        Quantum automorphism group with a delta-form.
//                          n_1 = dimB - 1 is the classical and d1 >= n_1 the
//                          quantum dimension of u(1). Since g_1(x) = x - 1,
//                          n_k = g_k(dimB), d_k = g_k(d1 + 1), and
//                          ||chi_k||_inf = 2k + 1.
//
// Numeric parameters accept integers, decimals or num/den literals and are
// kept exact.

#include "qk/fusion.hpp"
#include "qk/numeric.hpp"
#include "qk/rootsys.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qk {

/// Dominant weight for Drinfeld-Jimbo models; a one-component vector {k}
/// for the N0-graded families.
using IrrLabel = WeightVector;

struct DrinfeldJimbo {
  LieType type;
  int rank;
  Rational q;
  std::shared_ptr<const RootSystemData> roots;
};

struct FreeOrthogonal {
  std::int64_t n;
  Rational nq;
};

struct QuantumAutomorphism {
  std::int64_t dim_b;
  Rational d1;

  std::int64_t n1() const { return dim_b - 1; }
  /// Points at which g_k gives the classical / quantum dimensions.
  Rational classical_argument() const { return Rational(static_cast<long>(dim_b)); }
  Rational quantum_argument() const { return d1 + 1; }
};

using ModelFamily = std::variant<DrinfeldJimbo, FreeOrthogonal, QuantumAutomorphism>;

class QuantumGroupModel {
 public:
  explicit QuantumGroupModel(ModelFamily family);

  const ModelFamily& family() const { return family_; }
  /// Canonical spec string, e.g. "djq:A1:1/2".
  const std::string& spec() const { return spec_; }

  bool is_drinfeld_jimbo() const { return std::holds_alternative<DrinfeldJimbo>(family_); }
  const DrinfeldJimbo* drinfeld_jimbo() const { return std::get_if<DrinfeldJimbo>(&family_); }
  const FreeOrthogonal* free_orthogonal() const { return std::get_if<FreeOrthogonal>(&family_); }
  const QuantumAutomorphism* quantum_automorphism() const { return std::get_if<QuantumAutomorphism>(&family_); }

  /// Fusion rule of the N0-graded families (and of djq:A1); empty otherwise.
  std::optional<FusionRule> fusion_rule() const;

 private:
  ModelFamily family_;
  std::string spec_;
};

struct IrrData {
  IrrLabel label;
  Integer n;
  Rational d;
  Integer chi_sup;
  std::int64_t length = 0;
};

QuantumGroupModel make_drinfeld_jimbo(LieType type, int rank, const Rational& q);
QuantumGroupModel make_free_orthogonal(std::int64_t n, const Rational& nq);
QuantumGroupModel make_quantum_automorphism(std::int64_t dim_b, const Rational& d1);

/// Parses and validates a model spec string (grammar above).
QuantumGroupModel construct_model(std::string_view spec);

bool is_kac(const QuantumGroupModel& model);

IrrData irr_data(const QuantumGroupModel& model, const IrrLabel& label);

/// Irreducibles of length k; dominant weights in decreasing lexicographic
/// order for Drinfeld-Jimbo, the singleton {k} otherwise.
std::vector<IrrLabel> enumerate_level(const QuantumGroupModel& model, std::int64_t k);

/// (n_k, d_k) for k = 0..kmax of an N0-graded model, by exact recursion.
std::vector<std::pair<Integer, Rational>> graded_dimensions(const QuantumGroupModel& model, unsigned kmax);

}  // namespace qk
