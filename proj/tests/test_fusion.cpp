#include "doctest.h"

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"
#include "qk/fusion.hpp"

#include <vector>

using namespace qk;

TEST_CASE("generator rules") {
  CHECK(tensor_with_generator(FusionRule::SU2, 0) == FusionMultiset{{1, 1}});
  CHECK(tensor_with_generator(FusionRule::SU2, 3) == FusionMultiset{{2, 1}, {4, 1}});
  CHECK(tensor_with_generator(FusionRule::SO3, 0) == FusionMultiset{{1, 1}});
  CHECK(tensor_with_generator(FusionRule::SO3, 2) == FusionMultiset{{1, 1}, {2, 1}, {3, 1}});
  CHECK_THROWS_AS(tensor_with_generator(FusionRule::SU2, -1), Error);
}

TEST_CASE("Clebsch-Gordan for SU2") {
  FusionMultiset expected{{1, 1}, {3, 1}, {5, 1}};
  CHECK(tensor_decompose(FusionRule::SU2, 2, 3) == expected);
}

TEST_CASE("SO3 products") {
  // 1 x 1 = 0 + 1 + 2; 2 x 2 = 0 + 1 + 2 + 3 + 4.
  CHECK(tensor_decompose(FusionRule::SO3, 1, 1) == FusionMultiset{{0, 1}, {1, 1}, {2, 1}});
  CHECK(tensor_decompose(FusionRule::SO3, 2, 2) == FusionMultiset{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("Catalan and Motzkin-type counts") {
  const Integer catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 0; m <= 6; ++m) {
    std::vector<std::int64_t> labels(2 * m, 1);
    CHECK(trivial_multiplicity(FusionRule::SU2, labels) == catalan[m]);
  }
  // Riordan numbers for the SO3 generator.
  const Integer riordan[] = {1, 0, 1, 1, 3, 6, 15, 36};
  for (int m = 0; m <= 7; ++m) {
    std::vector<std::int64_t> labels(m, 1);
    CHECK(trivial_multiplicity(FusionRule::SO3, labels) == riordan[m]);
  }
  CHECK(trivial_multiplicity(FusionRule::SU2, std::vector<std::int64_t>{}) == 1);
}

TEST_CASE("property: dimension homomorphism") {
  const Rational x = 5;  // SO3 dimensions g_k(5)
  const Rational t = 3;  // SU2 dimensions f_k(3)
  for (std::int64_t k = 0; k <= 40; k += 3) {
    for (std::int64_t l = 0; l <= 40; l += 4) {
      Rational lhs = 0;
      for (const auto& [j, m] : tensor_decompose(FusionRule::SU2, k, l)) lhs += m * chebyshev_f(j, t);
      CHECK(lhs == chebyshev_f(k, t) * chebyshev_f(l, t));
      Rational lhs3 = 0;
      for (const auto& [j, m] : tensor_decompose(FusionRule::SO3, k, l)) lhs3 += m * chebyshev_g(j, x);
      CHECK(lhs3 == chebyshev_g(k, x) * chebyshev_g(l, x));
    }
  }
}

TEST_CASE("property: commutativity") {
  for (std::int64_t k = 0; k <= 12; ++k)
    for (std::int64_t l = 0; l <= 12; ++l) {
      CHECK(tensor_decompose(FusionRule::SU2, k, l) == tensor_decompose(FusionRule::SU2, l, k));
      CHECK(tensor_decompose(FusionRule::SO3, k, l) == tensor_decompose(FusionRule::SO3, l, k));
    }
}
