#include "doctest.h"

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"

using namespace qk;
namespace mp = boost::multiprecision;

TEST_CASE("small values") {
  CHECK(chebyshev_f(2, Rational(3)) == 8);
  CHECK(chebyshev_f(2, Rational(7, 2)) == Rational(45, 4));
  CHECK(chebyshev_f(0, Rational(5)) == 1);
  CHECK(chebyshev_f(1, Rational(5)) == 5);
  for (unsigned k = 0; k < 20; ++k) CHECK(chebyshev_f(k, Rational(2)) == k + 1);
  for (unsigned k = 0; k < 20; ++k) CHECK(chebyshev_g(k, Rational(4)) == 2 * k + 1);
  CHECK_THROWS_AS(chebyshev_f(3, Rational(3, 2)), Error);
  CHECK_THROWS_AS(chebyshev_g(3, Rational(3)), Error);
}

TEST_CASE("property: g_k(x) = f_2k(sqrt x)") {
  for (int s = 2; s <= 7; ++s) {
    const Rational t = s;
    for (unsigned k = 0; k < 15; ++k) CHECK(chebyshev_g(k, t * t) == chebyshev_f(2 * k, t));
  }
}

TEST_CASE("recursion agrees with closed form") {
  PrecisionScope scope(256);
  for (Rational t : {Rational(5, 2), Rational(3), Rational(7, 2), Rational(10)}) {
    const Real tr = to_real(t);
    for (unsigned k = 0; k <= 300; k += 7) {
      Real rec = to_real(chebyshev_f(k, t));
      Real closed = chebyshev_f_closed(k, tr);
      CHECK(mp::abs(rec - closed) / rec < 1e-9);
    }
  }
}

TEST_CASE("asymptotic identity at t = 3.5") {
  PrecisionScope scope(256);
  const Real t = to_real(Rational(7, 2));
  const Real u = growth_base(t);
  const Real ratio = chebyshev_f(200u, t) / mp::pow(u, 201);
  CHECK(mp::abs(ratio - 1 / mp::sqrt(Real(8.25))) < 1e-6);
}

TEST_CASE("envelope brackets the exact value") {
  PrecisionScope scope(256);
  for (Rational t : {Rational(21, 10), Rational(3), Rational(7, 2)}) {
    for (unsigned k = 0; k <= 600; ++k) {
      auto env = envelope(k, to_real(t));
      CHECK(env.contains(to_real(chebyshev_f(k, t))));
    }
  }
  // Irrational t: the even family g_k(x) = f_2k(sqrt x).
  for (Rational x : {Rational(5), Rational(6), Rational(13, 2)}) {
    const Real t = boost::multiprecision::sqrt(to_real(x));
    for (unsigned k = 0; k <= 300; ++k) CHECK(envelope(2 * k, t).contains(to_real(chebyshev_g(k, x))));
  }
}
