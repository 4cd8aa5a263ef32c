#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macd/symfunc.hpp"

using namespace macd;

namespace {

QtRational one() { return QtRational(1); }
QtRational half() { return QtRational(1) / QtRational(2); }
QtRational t() { return QtRational::t(); }

SymFunc random_symfunc(std::mt19937_64& rng, int D, SymBasis basis) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, D);
  SymFunc f(D, basis);
  for (int i = 0; i < 4; ++i) {
    auto parts = partitions_of(deg(rng));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(parts.size()) - 1);
    f.add_term(parts[pick(rng)], QtRational(coeff(rng)));
  }
  return f;
}

VkElem random_vk(std::mt19937_64& rng, int k, int D) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> ydeg(0, 2);
  VkElem v(k, D);
  for (int i = 0; i < 4; ++i) {
    auto parts = partitions_of(deg(rng));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(parts.size()) - 1);
    ExpVec y(k);
    for (auto& e : y) e = ydeg(rng);
    v.add_term(parts[pick(rng)], y, QtRational(coeff(rng)));
  }
  return v;
}

}  // namespace

TEST_CASE("degree one bases coincide") {
  SymFunc e1 = SymFunc::e_k(4, 1);
  SymFunc p1 = SymFunc::p_k(4, 1);
  SymFunc m1 = SymFunc::basis_element(4, SymBasis::monomial, {1});
  CHECK(e1.convert(SymBasis::monomial) == m1);
  CHECK(p1.convert(SymBasis::monomial) == m1);
  CHECK(e1 == p1);
}

TEST_CASE("classical conversions") {
  // p_2 = m_(2) ... with no m_(1,1) term
  SymFunc p2 = SymFunc::p_k(4, 2).convert(SymBasis::monomial);
  CHECK(p2.coeffs().size() == 1);
  CHECK(p2.coeffs().at({2}) == one());

  // e_2 = (p_1^2 - p_2)/2
  SymFunc e2 = SymFunc::e_k(4, 2).convert(SymBasis::powersum);
  CHECK(e2.coeffs().at({1, 1}) == half());
  CHECK(e2.coeffs().at({2}) == -half());

  // m_(1,1) = e_2
  SymFunc m11 = SymFunc::basis_element(4, SymBasis::monomial, {1, 1});
  CHECK(m11.convert(SymBasis::elementary) ==
        SymFunc::basis_element(4, SymBasis::elementary, {2}));
}

TEST_CASE("conversion roundtrips up to degree 8") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    SymFunc f = random_symfunc(rng, 8, SymBasis::monomial);
    CHECK(f.convert(SymBasis::powersum).convert(SymBasis::monomial) == f);
    CHECK(f.convert(SymBasis::elementary).convert(SymBasis::monomial) == f);
    CHECK(f.convert(SymBasis::elementary).convert(SymBasis::powersum)
              .convert(SymBasis::monomial) == f);
  }
}

TEST_CASE("finite variable lift and specialization") {
  int D = 4;
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    SymFunc f = random_symfunc(rng, D, SymBasis::monomial);
    XPoly spec = f.specialize(D);
    CHECK(from_finite_variables(spec, D) == f);
  }

  // x_1 + ... + x_m lifts to m_(1)
  for (int m = 1; m <= 3; ++m) {
    XPoly s(m);
    for (int i = 1; i <= m; ++i) s = s + XPoly::variable(m, i);
    CHECK(from_finite_variables(s, 1) ==
          SymFunc::basis_element(1, SymBasis::monomial, {1}));
  }

  // sum_{i<j} x_i x_j lifts to m_(1,1) = e_2
  XPoly e2poly(3);
  e2poly.add_term({1, 1, 0}, one());
  e2poly.add_term({1, 0, 1}, one());
  e2poly.add_term({0, 1, 1}, one());
  CHECK(from_finite_variables(e2poly, 2) ==
        SymFunc::e_k(2, 2).convert(SymBasis::monomial));

  // asymmetric input is rejected
  CHECK_THROWS_AS(from_finite_variables(XPoly::variable(3, 1), 1), MathError);
  // too few variables for uniqueness is rejected
  CHECK_THROWS_AS(from_finite_variables(XPoly::constant(1, one()), 2),
                  MathError);
}

TEST_CASE("e1 multiplication matches finite variables") {
  std::mt19937_64 rng(107);
  int D = 5;
  for (int trial = 0; trial < 10; ++trial) {
    // bound D with degrees <= D-1 so the product fits
    SymFunc f(D, SymBasis::monomial);
    {
      SymFunc small = random_symfunc(rng, D - 1, SymBasis::monomial);
      for (const auto& [p, c] : small.coeffs()) f.add_term(p, c);
    }
    SymFunc g = (f * SymFunc::e_k(D, 1)).convert(SymBasis::monomial);
    // recompute in D variables
    int v = D;
    XPoly e1(v);
    for (int i = 1; i <= v; ++i) e1 = e1 + XPoly::variable(v, i);
    SymFunc expect = from_finite_variables(f.specialize(v) * e1, D);
    CHECK(g == expect);
  }
}

TEST_CASE("alphabet scale") {
  // p_1 under X/(1-t) becomes p_1/(1-t)
  auto rule = [](int i) {
    return (one() - QtRational::t(1).pow(i)).inverse();
  };
  SymFunc p1 = SymFunc::p_k(4, 1);
  SymFunc scaled = p1.alphabet_scale(rule);
  CHECK(scaled.convert(SymBasis::powersum).coeffs().at({1}) ==
        (one() - t()).inverse());

  SymFunc c = SymFunc::constant(4, QtRational(7), SymBasis::powersum);
  CHECK(c.alphabet_scale(rule) == c);

  auto inverse_rule = [](int i) { return one() - QtRational::t(1).pow(i); };
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    SymFunc f = random_symfunc(rng, 6, SymBasis::monomial);
    CHECK(f.alphabet_scale(rule).alphabet_scale(inverse_rule) == f);
  }
}

TEST_CASE("alphabet shift") {
  // p_1 |-> p_1 + (t-1) y_1
  VkElem f = VkElem::from_symfunc(SymFunc::p_k(4, 1), 0);
  VkElem shifted = f.alphabet_shift(true, 1);
  VkElem expect(1, 4);
  expect.add_term({1}, {0}, one());
  expect.add_term({}, {1}, t() - one());
  CHECK(shifted == expect);

  VkElem c = VkElem::constant(0, 4, QtRational(3));
  CHECK(c.alphabet_shift(true, 1) == VkElem::constant(1, 4, QtRational(3)));

  // plus then minus at the same slot is the identity
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 15; ++trial) {
    VkElem v = random_vk(rng, 1, 6);
    VkElem w = v.alphabet_shift(true, 2).alphabet_shift(false, 2);
    // w lives in V_2 with no y_2 dependence; drop the slot
    VkElem back(1, 6);
    for (const auto& [key, coeff] : w.terms()) {
      REQUIRE(key.second[1] == 0);
      back.add_term(key.first, {key.second[0]}, coeff);
    }
    CHECK(back == v);
  }
}

TEST_CASE("omega pairing") {
  // d_- 1 = e_1 comes from the constant pairing
  VkElem one_elem = VkElem::constant(1, 4, one());
  VkElem got = one_elem.omega_extract();
  VkElem e1 = VkElem::from_symfunc(SymFunc::e_k(4, 1), 0);
  CHECK(got == e1);

  // y_1 pairs against -e_2
  VkElem y1(1, 4);
  y1.add_term({}, {1}, one());
  VkElem got2 = y1.omega_extract();
  VkElem expect = VkElem::from_symfunc(SymFunc::e_k(4, 2), 0)
                      .scalar_mul(QtRational(-1));
  CHECK(got2 == expect);

  // degree overflow is loud
  VkElem big(1, 2);
  big.add_term({2}, {1}, one());
  CHECK_THROWS_AS(big.omega_extract(), DegreeOverflow);
}

TEST_CASE("carlsson mellit T operators") {
  std::mt19937_64 rng(127);
  // symmetric input has eigenvalue 1
  for (int trial = 0; trial < 10; ++trial) {
    VkElem v = random_vk(rng, 2, 6);
    VkElem sym = v + v.permute_y({2, 1});
    CHECK(sym.sf_t(1) == sym);
  }

  // T_1 y_1 = y_2 - (t-1) y_1
  VkElem y1(2, 4);
  y1.add_term({}, {1, 0}, one());
  VkElem expect(2, 4);
  expect.add_term({}, {0, 1}, one());
  expect.add_term({}, {1, 0}, one() - t());
  CHECK(y1.sf_t(1) == expect);

  // quadratic relation (T-1)(T+t) = 0 and inverse roundtrip
  for (int trial = 0; trial < 20; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    VkElem v = random_vk(rng, k, 6);
    for (int i = 1; i < k; ++i) {
      VkElem tv = v.sf_t(i);
      CHECK(tv.sf_t(i) == tv.scalar_mul(one() - t()) + v.scalar_mul(t()));
      CHECK(v.sf_t(i).sf_t_inverse(i) == v);
      CHECK(v.sf_t_inverse(i).sf_t(i) == v);
      CHECK(v.dl_t(i).dl_t_inverse(i) == v);
    }
    if (k == 3) {
      CHECK(v.sf_t(1).sf_t(2).sf_t(1) == v.sf_t(2).sf_t(1).sf_t(2));
    }
  }
}
