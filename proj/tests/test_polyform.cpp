#include <gtest/gtest.h>

#include <cmath>

#include "bqcert/biquadratic_form.hpp"
#include "bqcert/certify.hpp"
#include "bqcert/choi_maps.hpp"
#include "bqcert/polynomial.hpp"
#include "oracles.hpp"

using namespace bqcert;
using bqcert::testing::random_rational;
using bqcert::testing::random_vector;

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, int terms, int max_exp) {
  Polynomial p;
  for (int i = 0; i < terms; ++i) {
    Monomial m{};
    for (auto& e : m) e = static_cast<int>(rng() % (max_exp + 1));
    p.add_term(m, random_rational(rng, 5, 4));
  }
  return p;
}

BiquadraticForm random_form(std::mt19937_64& rng) {
  std::array<Rational, 36> c;
  for (auto& e : c) e = rng() % 3 == 0 ? Rational(0) : random_rational(rng, 9, 5);
  return BiquadraticForm::from_coefficients(c);
}

}  // namespace

TEST(PolyEval, Examples) {
  EXPECT_EQ(Polynomial(5).eval(RatVector{1, 2, 3, 4, 5, 6}), Rational(5));
  const Polynomial det2 = det_phi_rank_one(Rational(2));
  EXPECT_EQ(det2.eval(RatVector{1, 1, 1}), Rational(0));
  // (t^2-1)^2 (2 t^4 + (t^8 - 2t^2) + (1 - 2t^6)) at t = 2 is 9 * (32 + 248 - 127).
  EXPECT_EQ(det2.eval(RatVector{1, 1, 0}), Rational(1377));
  EXPECT_EQ(bqcert::testing::leibniz_det3(bqcert::testing::displayed_phi_rank_one(2, {1, 1, 0})), Rational(1377));
}

TEST(PolyEval, LengthMismatch) {
  const Polynomial p = Polynomial::y(0);
  EXPECT_THROW(p.eval(RatVector{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(Polynomial::x(0).eval(RatVector{1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(Polynomial::x(0).eval(RatVector{1, 2, 3}));
}

TEST(Partial, Examples) {
  EXPECT_EQ(pow(Polynomial::x(0), 2).partial(0), Rational(2) * Polynomial::x(0));
  EXPECT_THROW(Polynomial::x(0).partial(6), std::out_of_range);
  EXPECT_THROW(Polynomial::x(0).partial(-1), std::out_of_range);

  const Polynomial det2 = det_phi_rank_one(Rational(2));
  const RatVector at{1, 2, 0};
  EXPECT_TRUE(det2.partial(0).eval(at).is_zero());
  // Central finite differences of the exact polynomial agree.
  const double h = 1e-5;
  const double fd = (det2.eval(std::vector<double>{1 + h, 2, 0}) - det2.eval(std::vector<double>{1 - h, 2, 0})) / (2 * h);
  EXPECT_NEAR(fd, 0.0, 1e-6 * std::max(1.0, std::abs(det2.eval(std::vector<double>{1, 3, 1}))));

  const Polynomial p2 = choi_form(build_phi_t(Rational(2))).to_polynomial();
  for (int v = 0; v < kNumVars; ++v) EXPECT_TRUE(p2.partial(v).eval(RatVector{1, 1, 1, 1, 1, 1}).is_zero());
}

TEST(Polynomial, RingLawsAtRandomPoints) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = random_polynomial(rng, 6, 2);
    const Polynomial q = random_polynomial(rng, 6, 2);
    const Polynomial sum = p + q, prod = p * q;
    for (int k = 0; k < 10; ++k) {
      const RatVector v = random_vector(rng, 6, 3, 4);
      EXPECT_EQ(sum.eval(v), p.eval(v) + q.eval(v));
      EXPECT_EQ(prod.eval(v), p.eval(v) * q.eval(v));
    }
  }
}

TEST(Polynomial, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const Polynomial p = choi_form(build_phi_t(Rational(3, 2))).to_polynomial() + random_polynomial(rng, 8, 3);
  for (int k = 0; k < 50; ++k) {
    std::vector<double> v(6);
    for (auto& e : v) e = u(rng);
    const int var = k % kNumVars;
    const double h = 1e-5;
    auto plus = v, minus = v;
    plus[var] += h;
    minus[var] -= h;
    const double fd = (p.eval(plus) - p.eval(minus)) / (2 * h);
    const double exact = p.partial(var).eval(v);
    EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)));
  }
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
  Polynomial p = Polynomial::x(0) - Polynomial::x(0);
  EXPECT_TRUE(p.is_zero());
  p.add_term({1, 0, 0, 0, 0, 0}, Rational(0));
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ((Polynomial::x(0) * Rational(0)).size(), 0u);
}

TEST(FormEval, Examples) {
  const BiquadraticForm p2 = choi_form(build_phi_t(Rational(2)));
  EXPECT_EQ(p2.eval(RatVector{1, 1, 1}, RatVector{1, 1, 1}), Rational(0));
  EXPECT_EQ(p2.eval(RatVector{1, 0, 0}, RatVector{0, 1, 0}), Rational(16));
  EXPECT_EQ(p2.eval(RatVector{1, 2, 0}, RatVector{2, 1, 0}), Rational(0));
}

TEST(FormFromPolynomial, Examples) {
  const Polynomial x1y1 = Polynomial::x(0) * Polynomial::y(0);
  const BiquadraticForm single = BiquadraticForm::from_polynomial(x1y1 * x1y1);
  int nonzero = 0;
  for (const auto& c : single.coefficients()) nonzero += !c.is_zero();
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(single.coeff(0, 0), Rational(1));

  Polynomial xy;
  for (int i = 0; i < 3; ++i) xy += Polynomial::x(i) * Polynomial::y(i);
  const BiquadraticForm sq = BiquadraticForm::from_polynomial(xy * xy);
  EXPECT_EQ(sq.coeff(quadratic_slot(0, 1), quadratic_slot(0, 1)), Rational(2));
  EXPECT_EQ(sq.coeff(quadratic_slot(0, 0), quadratic_slot(0, 0)), Rational(1));
  EXPECT_EQ(sq.coeff(quadratic_slot(0, 0), quadratic_slot(1, 1)), Rational(0));
}

TEST(FormFromPolynomial, RejectsWrongBidegree) {
  const Polynomial bad = Polynomial::x(0) * Polynomial::x(1) * Polynomial::x(2) * Polynomial::y(0) +
                         pow(Polynomial::x(0) * Polynomial::y(1), 2);
  try {
    BiquadraticForm::from_polynomial(bad);
    FAIL() << "expected BidegreeError";
  } catch (const BidegreeError& e) {
    EXPECT_EQ(e.offending(), (Monomial{1, 1, 1, 1, 0, 0}));
    EXPECT_NE(std::string(e.what()).find("x1*x2*x3*y1"), std::string::npos);
  }
}

TEST(BiquadraticForm, PolynomialRoundTripAndEvalAgree) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const BiquadraticForm f = random_form(rng);
    const Polynomial p = f.to_polynomial();
    EXPECT_TRUE(p.has_bidegree(2, 2));
    EXPECT_EQ(BiquadraticForm::from_polynomial(p), f);
    const RatVector x = random_vector(rng, 3, 4, 3), y = random_vector(rng, 3, 4, 3);
    RatVector xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    EXPECT_EQ(f.eval(x, y), p.eval(xy));
  }
}

TEST(BiquadraticForm, EulerBidegreeIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_form(rng).to_polynomial();
    Polynomial ex, ey;
    for (int i = 0; i < 3; ++i) {
      ex += Polynomial::x(i) * f.partial(i);
      ey += Polynomial::y(i) * f.partial(3 + i);
    }
    EXPECT_EQ(ex, Rational(2) * f);
    EXPECT_EQ(ey, Rational(2) * f);
  }
}

TEST(FormJson, RoundTripAndCanonicalOrder) {
  const BiquadraticForm p2 = choi_form(build_phi_t(Rational(2)));
  const auto j = form_to_json(p2, Rational(2));
  EXPECT_EQ(j["t"], "2");
  const auto back = form_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.form, p2);
  ASSERT_TRUE(back.t.has_value());
  EXPECT_EQ(*back.t, Rational(2));
  // (x1^2, y1^2) is the first slot and carries (t^2-1)^2 = 9.
  EXPECT_EQ(j["coeffs"][0]["xmono"], (std::array<int, 3>{2, 0, 0}));
  EXPECT_EQ(j["coeffs"][0]["ymono"], (std::array<int, 3>{2, 0, 0}));
  EXPECT_EQ(j["coeffs"][0]["value"], "9");
  EXPECT_EQ(j.dump(), form_to_json(p2, Rational(2)).dump());
}

TEST(FormJson, MalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(form_from_json(json::array()), std::invalid_argument);
  EXPECT_THROW(form_from_json(json{{"coeffs", 3}}), std::invalid_argument);
  EXPECT_THROW(form_from_json(json::parse(R"({"coeffs":[{"xmono":[2,0,0],"ymono":[1,0,0],"value":"1"}]})")),
               std::invalid_argument);
  EXPECT_THROW(form_from_json(json::parse(R"({"coeffs":[{"xmono":[2,0,0],"ymono":[2,0,0],"value":"0.5"}]})")),
               std::invalid_argument);
  EXPECT_THROW(form_from_json(json::parse(R"({"coeffs":[{"xmono":[2,0],"ymono":[2,0,0],"value":"1"}]})")),
               std::invalid_argument);
  EXPECT_NO_THROW(form_from_json(json::parse(R"({"coeffs":[]})")));
}
