#include "doctest.h"

#include "qk/error.hpp"
#include "qk/rootsys.hpp"
#include "qk/schur.hpp"

#include <cmath>

using namespace qk;

namespace {
QSpectrum spectrum(std::initializer_list<Rational> d) {
  std::vector<Rational> v(d);
  return QSpectrum::from_diagonal(v);
}
}  // namespace

TEST_CASE("base case on the SU_q(2) generator") {
  auto r = lemma_base_check(spectrum({2, Rational(1, 2)}));
  CHECK(r.lhs == Rational(4, 5));
  CHECK(r.rhs == Rational(4, 5));
  CHECK(r.equal);
  auto kac = lemma_base_check(spectrum({1, 1, 1}));
  CHECK(kac.lhs == 1);
  CHECK(kac.equal);
  CHECK_THROWS_AS(lemma_base_check(spectrum({2, 1})), Error);
}

TEST_CASE("characters are orthonormal") {
  QData q{{IrrLabel{0}, spectrum({2, Rational(1, 2)})}};
  CHECK(l2_norm_squared(character(q, IrrLabel{0}), q) == 1);
  CHECK(l2_norm_squared(ExactCoefficientVector{}, q) == 0);
  CHECK_THROWS_AS(character(q, IrrLabel{1}), Error);
}

TEST_CASE("sigma multipliers") {
  QData q{{IrrLabel{0}, spectrum({2, Rational(1, 2)})}};
  CoefficientVector v;
  v.entries[{IrrLabel{0}, 0, 1}] = 1.0;
  v.entries[{IrrLabel{0}, 0, 0}] = 1.0;
  auto w = sigma_apply(v, {0, -1}, q);
  CHECK(std::abs(w.entries.at({IrrLabel{0}, 0, 1}) - std::complex<double>(1.0)) < 1e-12);
  CHECK(std::abs(w.entries.at({IrrLabel{0}, 0, 0}) - std::complex<double>(4.0)) < 1e-12);
  auto id = sigma_apply(v, {0, 0}, q);
  CHECK(std::abs(id.entries.at({IrrLabel{0}, 0, 0}) - std::complex<double>(1.0)) < 1e-15);
}

TEST_CASE("property: sigma group law") {
  QData q{{IrrLabel{0}, spectrum({3, 1, Rational(1, 3)})}};
  auto chi = character(q, IrrLabel{0});
  for (Rational a : {Rational(1, 4), Rational(-1, 3), Rational(2)})
    for (Rational b : {Rational(1, 2), Rational(3, 4)}) {
      auto lhs = sigma_imaginary(sigma_imaginary(chi, a, q), b, q);
      auto rhs = sigma_imaginary(chi, a + b, q);
      for (const auto& [k, c] : lhs.entries) {
        CHECK(c.power == rhs.entries.at(k).power);
        CHECK(c.scale == rhs.entries.at(k).scale);
      }
    }
  CoefficientVector v;
  v.entries[{IrrLabel{0}, 0, 2}] = {0.3, -1.2};
  auto two = sigma_apply(sigma_apply(v, {0.4, 0.1}, q), {-1.1, 0.7}, q);
  auto one = sigma_apply(v, {-0.7, 0.8}, q);
  CHECK(std::abs(two.entries.begin()->second - one.entries.begin()->second) < 1e-12);
}

TEST_CASE("irrational norms are refused in exact mode") {
  QData q{{IrrLabel{0}, spectrum({2, Rational(1, 2)})}};
  auto v = sigma_imaginary(character(q, IrrLabel{0}), Rational(1, 8), q);
  CHECK_THROWS_AS(l2_norm_squared(v, q), Error);
}

TEST_CASE("modular duality") {
  CHECK(modular_duality_check(spectrum({2, Rational(1, 2)})));
  CHECK(modular_duality_check(spectrum({1, 1})));
  QData q{{IrrLabel{0}, spectrum({2, Rational(1, 2)})}};
  CHECK(haar_adjoint_right(q, {IrrLabel{0}, 0, 1}, {IrrLabel{0}, 0, 1}) == Rational(2, 5) * Rational(1, 2));
  CHECK(haar_adjoint_left(q, {IrrLabel{0}, 0, 1}, {IrrLabel{0}, 1, 1}) == 0);
  auto a2 = build_root_system("A2");
  for (WeightVector mu : {WeightVector{1, 0}, WeightVector{1, 1}, WeightVector{2, 1}})
    CHECK(modular_duality_check(q_matrix_spectrum(a2, mu, Rational(1, 2))));
}

TEST_CASE("property: base case on random spectra") {
  std::mt19937_64 rng(12345);
  int non_palindromic = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + trial % 10;
    auto q = random_trace_symmetric_spectrum(rng, size);
    CHECK(q.size() == size);
    CHECK(q.trace_symmetric());
    auto diag = q.diagonal();
    Rational prod = 1;
    for (const auto& x : diag) prod *= x;
    if (prod != 1) ++non_palindromic;
    CHECK(lemma_base_check(q).equal);
  }
  // The generator must not just produce reciprocal pairs.
  CHECK(non_palindromic > 20);
}

TEST_CASE("trace symmetrization in floating point") {
  auto d = trace_symmetrize({1.0, 2.0, 7.0});
  double tr = 0, inv = 0;
  for (double x : d) {
    tr += x;
    inv += 1 / x;
  }
  CHECK(std::abs(tr - inv) < 1e-12);
  CHECK_THROWS_AS(trace_symmetrize({1.0, -1.0}), Error);
}

TEST_CASE("square function on simple series") {
  CentralSeries f;
  f.n = 1;
  f.spectra[IrrLabel{0}] = spectrum({1});
  f.spectra[IrrLabel{1}] = spectrum({2, Rational(1, 2)});
  f.terms[IrrLabel{0}] = ComplexMatrix::Ones(1, 1);
  f.terms[IrrLabel{1}] = ComplexMatrix::Ones(1, 1);
  auto r = theorem_p2_check(f);
  CHECK(std::abs(r.lhs - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r.square_function - std::sqrt(2.0)) < 1e-12);
  CHECK(r.holds);
  CHECK_THROWS_AS(theorem_p2_check(f, INFINITY), Error);

  CentralSeries g;
  g.n = 2;
  g.spectra[IrrLabel{1}] = spectrum({2, Rational(1, 2)});
  ComplexMatrix x(2, 2);
  x << std::complex<double>(1, 2), 3, 0, std::complex<double>(-1, 1);
  g.terms[IrrLabel{1}] = x;
  CHECK(std::abs(theorem_p2_check(g).lhs - x.norm()) < 1e-12);
  CHECK(l2_norm_squared(CentralSeries{}) == 0);
}

TEST_CASE("property: Parseval additivity and square-function identity") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    CentralSeries f, a, b;
    f.n = a.n = b.n = 3;
    for (std::int64_t k = 0; k < 4; ++k) {
      auto q = random_trace_symmetric_spectrum(rng, 1 + static_cast<int>(k));
      ComplexMatrix x(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) x(i, j) = {gauss(rng), gauss(rng)};
      f.spectra[IrrLabel{k}] = q;
      f.terms[IrrLabel{k}] = x;
      auto& part = k % 2 ? a : b;
      part.spectra[IrrLabel{k}] = q;
      part.terms[IrrLabel{k}] = x;
    }
    double direct = 0;
    for (const auto& [label, x] : f.terms) direct += (x.adjoint() * x).trace().real();
    CHECK(std::abs(l2_norm_squared(f) - direct) < 1e-10 * direct);
    CHECK(std::abs(l2_norm_squared(f) - l2_norm_squared(a) - l2_norm_squared(b)) < 1e-10 * direct);
    auto r = theorem_p2_check(f);
    CHECK(std::abs(r.lhs - r.square_function) < 1e-10 * r.lhs);
  }
}
