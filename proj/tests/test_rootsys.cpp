#include "doctest.h"

#include "qk/error.hpp"
#include "qk/rootsys.hpp"

#include <functional>

using namespace qk;

namespace {

// All dominant weights of the given rank with coefficient sum exactly k.
std::vector<WeightVector> weights_of_level(int rank, std::int64_t k) {
  std::vector<WeightVector> out;
  std::vector<std::int64_t> c(rank, 0);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == rank - 1) {
      c[i] = left;
      out.emplace_back(c);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, k);
  return out;
}

Integer sum_of_multiplicities(const std::map<WeightVector, Integer>& m) {
  Integer s = 0;
  for (const auto& [w, c] : m) s += c;
  return s;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system(LieType::A, 2).positive_roots.size() == 3);
  CHECK(build_root_system("G2").positive_roots.size() == 6);
  CHECK(build_root_system("B2").positive_roots.size() == 4);
  CHECK(build_root_system("C3").positive_roots.size() == 9);
  CHECK(build_root_system("D4").positive_roots.size() == 12);
  CHECK(build_root_system("F4").positive_roots.size() == 24);
  CHECK(build_root_system("E6").positive_roots.size() == 36);
  CHECK(build_root_system("E7").positive_roots.size() == 63);
  CHECK(build_root_system("E8").positive_roots.size() == 120);
}

TEST_CASE("invalid root systems are rejected") {
  CHECK_THROWS_AS(build_root_system("E9"), Error);
  CHECK_THROWS_AS(build_root_system("D3"), Error);
  CHECK_THROWS_AS(build_root_system("A0"), Error);
  CHECK_THROWS_AS(build_root_system("X2"), Error);
  try {
    build_root_system("G3");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRootSystem);
  }
}

TEST_CASE("short roots have length 2") {
  auto g2 = build_root_system("G2");
  CHECK(g2.simple_root_gram[0][0] == 2);
  CHECK(g2.simple_root_gram[1][1] == 6);
  CHECK(g2.cartan_matrix[0][1] == -3);
  CHECK(g2.cartan_matrix[1][0] == -1);
  auto b2 = build_root_system("B2");
  CHECK(b2.simple_root_gram[0][0] == 4);
  CHECK(b2.simple_root_gram[1][1] == 2);
}

TEST_CASE("Weyl dimensions") {
  auto a2 = build_root_system("A2");
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  CHECK(weyl_dimension(a2, {1, 0}) == 3);
  CHECK(weyl_dimension(a2, {2, 0}) == 6);
  auto g2 = build_root_system("G2");
  CHECK(weyl_dimension(g2, {1, 0}) == 7);
  CHECK(weyl_dimension(g2, {0, 1}) == 14);
  auto b2 = build_root_system("B2");
  CHECK(weyl_dimension(b2, {1, 0}) == 5);
  CHECK(weyl_dimension(b2, {0, 1}) == 4);
  auto e8 = build_root_system("E8");
  CHECK(weyl_dimension(e8, {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK_THROWS_AS(weyl_dimension(a2, {1, -1}), Error);
  CHECK_THROWS_AS(weyl_dimension(a2, {1, 0, 0}), Error);
}

TEST_CASE("Freudenthal multiplicities") {
  auto a2 = build_root_system("A2");
  auto adj = weight_multiplicities(a2, {1, 1});
  CHECK(adj.at(WeightVector{0, 0}) == 2);
  CHECK(sum_of_multiplicities(adj) == 8);
  auto g2 = build_root_system("G2");
  auto seven = weight_multiplicities(g2, {1, 0});
  CHECK(seven.at(WeightVector{0, 0}) == 1);
  CHECK(sum_of_multiplicities(seven) == 7);
}

TEST_CASE("property: multiplicities sum to the Weyl dimension") {
  for (const char* name : {"A1", "A2", "A3", "B2", "G2", "B3", "C3"}) {
    auto rs = build_root_system(name);
    for (std::int64_t k = 0; k <= 3; ++k) {
      for (const auto& mu : weights_of_level(rs.rank, k)) {
        CAPTURE(name);
        CAPTURE(mu.str());
        CHECK(sum_of_multiplicities(weight_multiplicities(rs, mu)) == weyl_dimension(rs, mu));
      }
    }
  }
}

TEST_CASE("modular spectrum for A1") {
  auto a1 = build_root_system("A1");
  auto q = q_matrix_spectrum(a1, {1}, Rational(1, 2));
  CHECK(q.size() == 2);
  CHECK(q.trace() == Rational(5, 2));
  CHECK(q.trace_symmetric());
  CHECK(q.max_eigenvalue() == 2);
  CHECK(quantum_dimension(a1, {2}, Rational(1, 2)) == Rational(21, 4));
  CHECK(quantum_dimension(a1, {3}, Rational(1, 2)) == Rational(85, 8));
}

TEST_CASE("q-integers") {
  CHECK(q_integer(4, Rational(1, 2)) == Rational(85, 8));
  CHECK(q_integer(1, Rational(1, 3)) == 1);
  CHECK(q_integer(0, Rational(1, 3)) == 0);
}

TEST_CASE("property: spectrum route equals q-Weyl product") {
  for (const char* name : {"A1", "A2", "A3", "B2", "G2", "B3", "C3"}) {
    auto rs = build_root_system(name);
    for (Rational q : {Rational(1, 2), Rational(3, 4)}) {
      for (std::int64_t k = 0; k <= 3; ++k) {
        for (const auto& mu : weights_of_level(rs.rank, k)) {
          CAPTURE(name);
          CAPTURE(mu.str());
          auto spec = q_matrix_spectrum(rs, mu, q);
          CHECK(spec.trace() == quantum_dimension_product(rs, mu, q));
          CHECK(spec.trace_symmetric());
        }
      }
    }
  }
}

TEST_CASE("t-constants and the norm of Q") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto rs = build_root_system(name);
    for (Rational q : {Rational(1, 2), Rational(3, 4)}) {
      auto t = t_constants(rs, q);
      for (const auto& ti : t) CHECK(ti < 1);
      for (std::int64_t k = 0; k <= 4; ++k) {
        for (const auto& mu : weights_of_level(rs.rank, k)) {
          Rational expected = 1;
          for (int i = 0; i < rs.rank; ++i) expected *= rational_pow(t[i], -static_cast<long>(mu.coeffs[i]));
          CHECK(q_matrix_spectrum(rs, mu, q).max_eigenvalue() == expected);
        }
      }
    }
  }
  // A1: t = q^{(omega, 2 rho)} = q.
  CHECK(t_constants(build_root_system("A1"), Rational(1, 2))[0] == Rational(1, 2));
  CHECK(t_exponents(build_root_system("A2")) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("deformation parameter domain") {
  CHECK_THROWS_AS(require_deformation_parameter(Rational(1)), Error);
  CHECK_THROWS_AS(require_deformation_parameter(Rational(0)), Error);
  CHECK_NOTHROW(require_deformation_parameter(Rational(1, 2)));
}
