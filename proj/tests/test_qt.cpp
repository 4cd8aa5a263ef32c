#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macd/qt.hpp"

using macd::Int;
using macd::QtPoly;
using macd::QtRational;

namespace {

QtRational rat(long n) { return QtRational(n); }

QtRational Q() { return QtRational::q(); }
QtRational T() { return QtRational::t(); }

QtRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  auto poly = [&](bool nonzero) {
    QtPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
      p.add_term(macd::QtExp{ex(rng), 2 * ex(rng)}, coeff(rng));
    if (nonzero && p.is_zero()) p.add_term(macd::QtExp{0, 0}, 1);
    return p;
  };
  return QtRational(poly(false), poly(true));
}

}  // namespace

TEST_CASE("polynomial gcd and exact division") {
  QtPoly one_minus_qt = QtPoly(1) - (QtPoly::q() * QtPoly::t_half(2));
  QtPoly sq = one_minus_qt * one_minus_qt;
  // gcd is normalized with positive leading coefficient: qt - 1.
  CHECK(QtPoly::gcd(sq, one_minus_qt) == -one_minus_qt);

  QtPoly a = one_minus_qt * (QtPoly(1) + QtPoly::q());
  QtPoly b = one_minus_qt * (QtPoly(1) - QtPoly::t_half(2));
  CHECK(QtPoly::gcd(a, b) == -one_minus_qt);

  auto quo = a.divided_exactly_by(one_minus_qt);
  REQUIRE(quo.has_value());
  CHECK(*quo == QtPoly(1) + QtPoly::q());
  CHECK(!a.divided_exactly_by(QtPoly(1) + QtPoly::t_half(2)).has_value());
}

TEST_CASE("field arithmetic basics") {
  QtRational inv = rat(1) / (rat(1) - Q() * T());
  CHECK((inv + (-inv)).is_zero());

  // (1-q^2 t^2) / (1-qt) = 1+qt: polynomial long division oracle.
  QtRational lhs = (rat(1) - Q().pow(2) * T().pow(2)) / (rat(1) - Q() * T());
  QtPoly expect = QtPoly(1) + QtPoly::q() * QtPoly::t_half(2);
  {
    QtPoly n = (QtPoly(1) - QtPoly::q(2) * QtPoly::t_half(4));
    auto q = n.divided_exactly_by(QtPoly(1) - QtPoly::q() * QtPoly::t_half(2));
    REQUIRE(q.has_value());
    CHECK(*q == expect);
  }
  CHECK(lhs == QtRational::from_poly(expect));

  QtRational tmq = T() - Q();
  CHECK((tmq * (rat(1) / tmq)).is_one());

  CHECK_THROWS_AS(rat(1) / rat(0), macd::MathError);
}

TEST_CASE("star substitution") {
  // 1/(1-qt) -> t/(t-q)
  QtRational v = rat(1) / (rat(1) - Q() * T());
  CHECK(v.star() == T() / (T() - Q()));

  // (1-q)/((1-t)(1-qt)) -> t^2 (1-q)/((t-1)(t-q))
  QtRational w = (rat(1) - Q()) / ((rat(1) - T()) * (rat(1) - Q() * T()));
  QtRational expect =
      T().pow(2) * (rat(1) - Q()) / ((T() - rat(1)) * (T() - Q()));
  CHECK(w.star() == expect);

  CHECK(Q().pow(3).star() == Q().pow(3));

  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 10000; ++i) {
    QtRational r = random_rational(rng);
    CHECK(r.star().star() == r);
  }
}

TEST_CASE("canonical form is idempotent and unique") {
  QtRational a = (rat(2) - Q() * rat(2)) / (rat(4) - rat(4) * T());
  QtRational b = (rat(1) - Q()) / (rat(2) - rat(2) * T());
  CHECK(a == b);

  // denominator leading coefficient positive
  QtRational c = rat(1) / (Q() - T());
  QtRational d = rat(-1) / (T() - Q());
  CHECK(c == d);

  // unique zero
  QtRational z = (Q() - Q()) / (rat(1) - Q() * T());
  CHECK(z.is_zero());
  CHECK(z == rat(0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    QtRational a = random_rational(rng);
    QtRational b = random_rational(rng);
    QtRational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == rat(1));
  }
}

TEST_CASE("t substitution") {
  // 1 - qt at t = q^{-1} vanishes; as a denominator this must raise.
  QtRational v = rat(1) / (rat(1) - Q() * T());
  CHECK_THROWS_AS(v.substitute_t_q_power(-1), macd::MathError);

  QtRational w = (rat(1) - T().pow(2)) / (rat(1) - T());
  CHECK(w == rat(1) + T());
  CHECK(w.substitute_t_q_power(1) == rat(1) + Q());

  // half-integral t-powers cannot be substituted
  CHECK_THROWS_AS(QtRational::t_half(1).substitute_t_q_power(1),
                  macd::MathError);
}

TEST_CASE("canonical serialization") {
  // Denominators carry a positive leading coefficient under the q-then-t
  // descending order, so 1/(1-qt) prints as -1/(qt-1).
  QtRational v = rat(1) / (rat(1) - Q() * T());
  CHECK(v.str() == "-1 / 1*q^1*t^1+-1");
  CHECK(QtRational::t_half(1).str() == "1*t^(1/2) / 1");
  QtRational neg = rat(0) - Q();
  CHECK(neg.str() == "-1*q^1 / 1");
  CHECK(rat(0).str() == "0 / 1");
}

TEST_CASE("integrality detection") {
  CHECK((rat(1) - Q() * T()).is_integral_poly());
  CHECK(!(rat(1) / T()).is_integral_poly());
  CHECK(!QtRational::t_half(1).is_integral_poly());
  CHECK(!(rat(1) / (rat(1) - T())).is_integral_poly());
}
