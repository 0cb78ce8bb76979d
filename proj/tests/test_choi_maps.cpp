#include <gtest/gtest.h>

#include "bqcert/choi_maps.hpp"
#include "bqcert/certify.hpp"
#include "oracles.hpp"

using namespace bqcert;
using bqcert::testing::displayed_phi_rank_one;
using bqcert::testing::random_nonzero_vector;
using bqcert::testing::random_rational;
using bqcert::testing::random_vector;
using bqcert::testing::sample_parameters;

namespace {

RatMatrix diag(const Rational& a, const Rational& b, const Rational& c) {
  return RatMatrix::from_rows({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
}

RatMatrix random_symmetric(std::mt19937_64& rng) {
  RatMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = random_rational(rng, 6, 4);
  return m;
}

SymLinearMap random_map(std::mt19937_64& rng) {
  std::array<RatMatrix, kSymBasisSize> images;
  for (auto& m : images) m = random_symmetric(rng);
  return SymLinearMap(images);
}

Rational quadratic(const RatMatrix& m, const RatVector& y) { return dot(y, m * y); }

}  // namespace

TEST(BuildPhiT, ExamplesAtTwo) {
  const SymLinearMap phi = build_phi_t(Rational(2));
  EXPECT_EQ(phi.image(0), diag(9, 16, 1));
  RatMatrix off(3, 3);
  off(0, 1) = off(1, 0) = Rational(-13);
  EXPECT_EQ(phi.image(3), off);
}

TEST(BuildPhiT, ZeroParameterIsTheQuarezMap) {
  const SymLinearMap phi = build_phi_t(Rational(0));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const RatMatrix a = random_symmetric(rng);
    const RatMatrix expected = RatMatrix::from_rows({{a(0, 0) + a(1, 1), -a(0, 1), -a(0, 2)},
                                                     {-a(0, 1), a(1, 1) + a(2, 2), -a(1, 2)},
                                                     {-a(0, 2), -a(1, 2), a(2, 2) + a(0, 0)}});
    EXPECT_EQ(phi.apply(a), expected);
  }
}

TEST(Apply, Examples) {
  const SymLinearMap phi = build_phi_t(Rational(2));
  EXPECT_TRUE(phi.apply(RatMatrix(3, 3)).is_zero());
  EXPECT_EQ(phi.apply(RatMatrix::identity(3)), Rational(26) * RatMatrix::identity(3));
  const RatVector x{1, 2, 0};
  EXPECT_EQ(phi.apply(outer(x, x)), RatMatrix::from_rows({{13, -26, 0}, {-26, 52, 0}, {0, 0, 65}}));
  RatMatrix skew = RatMatrix::identity(3);
  skew(0, 1) = 1;
  EXPECT_THROW(phi.apply(skew), std::invalid_argument);
}

TEST(Apply, IsLinear) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const SymLinearMap m = random_map(rng);
    const RatMatrix a = random_symmetric(rng), b = random_symmetric(rng);
    const Rational alpha = random_rational(rng, 5, 7), beta = random_rational(rng, 5, 7);
    EXPECT_EQ(m.apply(alpha * a + beta * b), alpha * m.apply(a) + beta * m.apply(b));
  }
}

TEST(PhiOfRankOne, Examples) {
  const RatMatrix m = build_phi_t(Rational(2)).phi_of_rank_one(RatVector{1, 1, 1});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), Rational(i == j ? 26 : -13));

  EXPECT_EQ(build_phi_t(Rational(0)).phi_of_rank_one(RatVector{1, 0, 0}), diag(1, 0, 1));
  EXPECT_THROW(build_phi_t(Rational(2)).phi_of_rank_one(RatVector{0, 0, 0}), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (const Rational t : {Rational(1), Rational(-1)}) {
    const SymLinearMap phi = build_phi_t(t);
    for (int k = 0; k < 20; ++k) {
      const RatVector x = random_nonzero_vector(rng, 3, 5, 3);
      EXPECT_EQ(phi.phi_of_rank_one(x), dot(x, x) * RatMatrix::identity(3) - outer(x, x));
    }
  }
}

TEST(PhiOfRankOne, MatchesDisplayedMatrix) {
  std::mt19937_64 rng(13);
  for (const auto& t : sample_parameters()) {
    const SymLinearMap phi = build_phi_t(t);
    for (int k = 0; k < 20; ++k) {
      const RatVector x = random_nonzero_vector(rng, 3, 6, 5);
      EXPECT_EQ(phi.phi_of_rank_one(x), displayed_phi_rank_one(t, x));
      EXPECT_EQ(phi.phi_of_rank_one(x), phi.apply(outer(x, x)));
    }
  }
}

TEST(SymbolicRankOne, AgreesWithNumericEvaluation) {
  std::mt19937_64 rng(19);
  const SymLinearMap phi = build_phi_t(Rational(3, 7));
  const auto sym = phi.symbolic_rank_one();
  for (int k = 0; k < 10; ++k) {
    const RatVector x = random_nonzero_vector(rng, 3, 4, 3);
    const RatMatrix m = phi.phi_of_rank_one(x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(sym[i][j].eval(x), m(i, j));
  }
}

TEST(ChoiForm, Examples) {
  EXPECT_TRUE(choi_form(SymLinearMap()).is_zero());
  EXPECT_EQ(choi_form(build_phi_t(Rational(1))), lagrange_form());
  EXPECT_EQ(choi_form(build_phi_t(Rational(-1))), lagrange_form());
  EXPECT_EQ(choi_form(build_phi_t(Rational(2))).coeff(0, 0), Rational(9));
}

TEST(ChoiMap, Examples) {
  EXPECT_EQ(choi_map(BiquadraticForm()), SymLinearMap());
  EXPECT_EQ(choi_map(choi_form(build_phi_t(Rational(2)))), build_phi_t(Rational(2)));
  EXPECT_EQ(choi_map(lagrange_form()), build_phi_t(Rational(1)));
}

TEST(Choi, RoundTripsOnRandomMapsAndForms) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 100; ++k) {
    const SymLinearMap m = random_map(rng);
    EXPECT_EQ(choi_map(choi_form(m)), m);

    std::array<Rational, BiquadraticForm::kSize> c;
    for (auto& e : c) e = random_rational(rng, 7, 6);
    const BiquadraticForm f = BiquadraticForm::from_coefficients(c);
    EXPECT_EQ(choi_form(choi_map(f)), f);
  }
}

TEST(Choi, FormEvaluatesQuadraticFormOfTheImage) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    const SymLinearMap m = random_map(rng);
    const BiquadraticForm f = choi_form(m);
    const RatVector x = random_vector(rng, 3, 4, 3), y = random_vector(rng, 3, 4, 3);
    EXPECT_EQ(f.eval(x, y), quadratic(m.apply(outer(x, x)), y));
  }
  for (const auto& t : sample_parameters()) {
    const SymLinearMap phi = build_phi_t(t);
    const BiquadraticForm p = choi_form(phi);
    for (int k = 0; k < 20; ++k) {
      const RatVector x = random_nonzero_vector(rng, 3, 5, 4), y = random_vector(rng, 3, 5, 4);
      EXPECT_EQ(p.eval(x, y), quadratic(displayed_phi_rank_one(t, x), y));
    }
  }
}

TEST(MapJson, RoundTrip) {
  const SymLinearMap phi = build_phi_t(Rational(-5, 7));
  const auto j = map_to_json(phi, Rational(-5, 7));
  EXPECT_EQ(j["t"], "-5/7");
  EXPECT_EQ(map_from_json(nlohmann::json::parse(j.dump())), phi);
  EXPECT_THROW(map_from_json(nlohmann::json::parse(R"({"images":{}})")), std::invalid_argument);
}

TEST(CklParameters, Examples) {
  auto p = ckl_parameters(Rational(2));
  EXPECT_EQ(p.a, Rational(22, 13));
  EXPECT_EQ(p.b, Rational(1, 13));
  EXPECT_EQ(p.c, Rational(16, 13));
  p = ckl_parameters(Rational(0));
  EXPECT_EQ(p.a, Rational(2));
  EXPECT_EQ(p.b, Rational(1));
  EXPECT_EQ(p.c, Rational(0));
  p = ckl_parameters(Rational(1));
  EXPECT_EQ(p.a, Rational(1));
  EXPECT_EQ(p.b, Rational(1));
  EXPECT_EQ(p.c, Rational(1));
}

TEST(CklMap, DiagonalPattern) {
  // Phi[a,b,c](E11) = diag(a, c, b) - E11.
  const SymLinearMap m = ckl_map({Rational(5), Rational(7), Rational(11)});
  EXPECT_EQ(m.image(0), diag(4, 11, 7));
  EXPECT_EQ(m.image(1), diag(7, 4, 11));
  EXPECT_EQ(m.image(2), diag(11, 7, 4));
}

TEST(VerifyCkl, PassesOnExamplesAndSamples) {
  for (const Rational t : {Rational(2), Rational(0), Rational(1, 2), Rational(1), Rational(-1)}) {
    const auto cert = verify_ckl(t);
    EXPECT_TRUE(cert.passed()) << t;
    EXPECT_EQ(cert.checks.size(), 4u);
  }
  EXPECT_EQ(ckl_parameters(Rational(0)).a, Rational(2));
  for (const auto& t : sample_parameters()) {
    const auto cert = verify_ckl(t);
    EXPECT_TRUE(cert.passed()) << t;
    const auto& [a, b, c] = cert.params;
    EXPECT_GE(a, Rational(1));
    EXPECT_LE(a, Rational(2));
    EXPECT_EQ(a + b + c, Rational(3));
    EXPECT_EQ(b * c, (Rational(2) - a) * (Rational(2) - a));
    const Rational scale = pow(t, 4) - t * t + 1;
    EXPECT_EQ(scale * ckl_map(cert.params), build_phi_t(t));
  }
}

TEST(RationalParameter, CachedValues) {
  const RationalParameter p(Rational(3, 2));
  EXPECT_EQ(p.t2, Rational(9, 4));
  EXPECT_EQ(p.t4, Rational(81, 16));
  EXPECT_EQ(p.t2_minus_1_sq, Rational(25, 16));
  EXPECT_EQ(p.off_diag, Rational(81, 16) - Rational(9, 4) + 1);
  EXPECT_FALSE(p.is_degenerate());
  EXPECT_TRUE(RationalParameter(Rational(-1)).is_plus_minus_one());
  EXPECT_TRUE(RationalParameter(Rational(0)).is_degenerate());
  EXPECT_FALSE(RationalParameter(Rational(0)).is_plus_minus_one());
}
