#include "doctest.h"

#include "qk/chebyshev.hpp"
#include "qk/error.hpp"
#include "qk/models.hpp"

using namespace qk;

namespace {
ErrorCode code_of(const char* spec) {
  try {
    construct_model(spec);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}
}  // namespace

TEST_CASE("spec parsing") {
  CHECK(construct_model("djq:A1:0.5").spec() == "djq:A1:1/2");
  CHECK(construct_model("oplus:3:3.5").spec() == "oplus:3:7/2");
  CHECK(construct_model("aut:5:5").spec() == "aut:5:5");
  CHECK(code_of("djq:A1") == ErrorCode::MalformedSpec);
  CHECK(code_of("foo:1:2") == ErrorCode::MalformedSpec);
  CHECK(code_of("djq:A1:1") == ErrorCode::InvalidModel);
  CHECK(code_of("djq:E9:1/2") == ErrorCode::InvalidRootSystem);
  CHECK(code_of("oplus:3:x") == ErrorCode::MalformedSpec);
  CHECK(code_of("oplus:3:2") == ErrorCode::InvalidModel);
  CHECK(code_of("aut:3:5") == ErrorCode::InvalidModel);
  CHECK(code_of("aut:5:3") == ErrorCode::InvalidModel);
}

TEST_CASE("Kac detection") {
  CHECK(is_kac(construct_model("oplus:3:3")));
  CHECK(is_kac(construct_model("aut:4:3")));
  CHECK_FALSE(is_kac(construct_model("oplus:3:3.5")));
  CHECK_FALSE(is_kac(construct_model("aut:4:5")));
  CHECK_FALSE(is_kac(construct_model("aut:5:5")));
  CHECK_FALSE(is_kac(construct_model("djq:A2:1/2")));
}

TEST_CASE("dims of SU_q(2) at q = 1/2") {
  auto m = construct_model("djq:A1:1/2");
  const Rational expected_d[] = {1, Rational(5, 2), Rational(21, 4), Rational(85, 8)};
  for (std::int64_t k = 0; k <= 3; ++k) {
    auto labels = enumerate_level(m, k);
    REQUIRE(labels.size() == 1);
    auto data = irr_data(m, labels[0]);
    CHECK(data.n == k + 1);
    CHECK(data.d == expected_d[k]);
    CHECK(data.chi_sup == k + 1);
    CHECK(data.length == k);
  }
}

TEST_CASE("N0 families") {
  auto o = construct_model("oplus:3:7/2");
  auto d = irr_data(o, IrrLabel{2});
  CHECK(d.n == 8);
  CHECK(d.d == Rational(45, 4));
  CHECK(d.chi_sup == 3);
  auto a = construct_model("aut:5:5");
  auto e = irr_data(a, IrrLabel{1});
  CHECK(e.n == 4);
  CHECK(e.d == 5);
  CHECK(e.chi_sup == 3);
  CHECK(irr_data(a, IrrLabel{2}).n == chebyshev_g(2, Rational(5)));
  CHECK(irr_data(a, IrrLabel{2}).d == chebyshev_g(2, Rational(6)));
  CHECK_THROWS_AS(irr_data(a, IrrLabel{-1}), Error);
}

TEST_CASE("SU_q(2) bridge") {
  auto dj = construct_model("djq:A1:1/2");
  auto fo = construct_model("oplus:2:5/2");
  auto graded = graded_dimensions(fo, 30);
  for (std::int64_t k = 0; k <= 30; ++k) {
    auto data = irr_data(dj, IrrLabel{k});
    CHECK(data.n == graded[k].first);
    CHECK(data.d == graded[k].second);
  }
}

TEST_CASE("level enumeration") {
  auto m = construct_model("djq:A2:1/2");
  auto level2 = enumerate_level(m, 2);
  REQUIRE(level2.size() == 3);
  CHECK(level2[0] == WeightVector{2, 0});
  CHECK(level2[1] == WeightVector{1, 1});
  CHECK(level2[2] == WeightVector{0, 2});
  CHECK(enumerate_level(construct_model("aut:5:5"), 4) == std::vector<IrrLabel>{IrrLabel{4}});
}

TEST_CASE("property: d >= n") {
  for (const char* spec : {"djq:A2:3/4", "djq:B2:1/2", "djq:G2:1/2", "oplus:4:9/2", "aut:6:7"}) {
    auto m = construct_model(spec);
    for (std::int64_t k = 0; k <= 4; ++k)
      for (const auto& label : enumerate_level(m, k)) {
        auto data = irr_data(m, label);
        CHECK(data.d >= Rational(data.n));
      }
  }
}
