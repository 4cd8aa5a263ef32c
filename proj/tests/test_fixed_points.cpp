#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "macd/fixed_points.hpp"

using namespace macd;

namespace {

QtRational one() { return QtRational(1); }
QtRational t() { return QtRational::t(); }
QtRational q() { return QtRational::q(); }

}  // namespace

TEST_CASE("macdonald pieri coefficient") {
  CHECK(macdonald_pieri_d({}, {0, 0}) == one());
  CHECK_THROWS_AS(macdonald_pieri_d({2, 1}, {2, 1}), MathError);

  // adding t^2 to (2,1): row boxes (0,0),(1,0), no column boxes
  QtRational d = macdonald_pieri_d({2, 1}, {2, 0});
  QtRational expect = (t() - q() * q()) / (t() * t() - q() * q()) *
                      ((one() - q()) / (t() - q()));
  CHECK(d == expect);
}

TEST_CASE("worked d plus chain") {
  // d_+ [I_{(2,1),(t,q)}] = -t^2 [I_{(3,1),(t^2,t,q)}]
  FixedPointLabel src{{2, 1}, {{1, 0}, {0, 1}}};
  FpVector v = FpVector::single(src);
  FpVector dv = dplus_geom(v);
  FixedPointLabel target{{3, 1}, {{2, 0}, {1, 0}, {0, 1}}};
  CHECK(dv.terms().size() == 1);
  CHECK(dv.coefficient_of(target) == -t() * t());

  // T_1^{-1} fixes it, T_2^{-1} expands into two terms
  FpVector t1 = tgeom_apply(1, dv, true);
  CHECK(t1 == dv);
  FpVector t2 = tgeom_apply(2, t1, true);
  FixedPointLabel swapped{{3, 1}, {{2, 0}, {0, 1}, {1, 0}}};
  CHECK(t2.coefficient_of(target) == -t() * t() * (t() - one()) / (t() - q()));
  CHECK(t2.coefficient_of(swapped) == -t() * t() * (one() - q()) / (t() - q()));

  // the full chain in the H basis gives the worked expansion
  FpVector h = FpVector::single(src);  // coefficient 1 on H_{(2,1),(t,q)}
  FpVector chain = to_h_basis(e1_geom_chain(from_h_basis(h)));
  FixedPointLabel h1{{3, 1}, {{2, 0}, {1, 0}}};
  FixedPointLabel h2{{3, 1}, {{2, 0}, {0, 1}}};
  CHECK(chain.terms().size() == 2);
  CHECK(chain.coefficient_of(h1) == (t() - one()) / (t() - q()));
  CHECK(chain.coefficient_of(h2) == (one() - q()) / (t() - q()));
}

TEST_CASE("d plus on the empty label") {
  FpVector v = FpVector::single(FixedPointLabel{{}, {}});
  FpVector dv = dplus_geom(v);
  FixedPointLabel target{{1}, {{0, 0}}};
  CHECK(dv.terms().size() == 1);
  CHECK(dv.coefficient_of(target) == -one());

  FpVector back = dminus_geom(dv);
  CHECK(back.coefficient_of(FixedPointLabel{{1}, {}}) == -one());
}

TEST_CASE("d minus drops the last removal and merges") {
  FixedPointLabel a{{3, 1}, {{2, 0}, {1, 0}, {0, 1}}};
  FpVector v = FpVector::single(a, QtRational(2));
  FpVector dv = dminus_geom(v);
  CHECK(dv.coefficient_of(FixedPointLabel{{3, 1}, {{2, 0}, {1, 0}}}) ==
        QtRational(2));

  // distinct leading parts stay distinct
  FixedPointLabel b{{3, 1}, {{2, 0}, {0, 1}, {1, 0}}};
  FpVector w = FpVector::single(a) + FpVector::single(b);
  CHECK(dminus_geom(w).terms().size() == 2);
}

TEST_CASE("geometric T relations") {
  for (int size = 2; size <= 6; ++size) {
    for (int k = 2; k <= 3; ++k) {
      if (k > size) continue;
      for (const FixedPointLabel& fp : all_fixed_points(size, k)) {
        FpVector v = FpVector::single(fp);
        for (int i = 1; i < k; ++i) {
          // inverse roundtrip
          CHECK(tgeom_apply(i, tgeom_apply(i, v, true), false) == v);
          // quadratic relation (T - 1)(T + t) = 0
          FpVector tv = tgeom_apply(i, v, false);
          FpVector lhs = tgeom_apply(i, tv, false) +
                         tv.scalar_mul(t() - one()) - v.scalar_mul(t());
          CHECK(lhs.is_zero());
        }
        if (k == 3) {
          FpVector a =
              tgeom_apply(1, tgeom_apply(2, tgeom_apply(1, v, false), false), false);
          FpVector b =
              tgeom_apply(2, tgeom_apply(1, tgeom_apply(2, v, false), false), false);
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("h normalization") {
  FixedPointLabel l21{{2, 1}, {{1, 0}, {0, 1}}};
  CHECK(h_scalar({2, 1}) == -q() * t());
  CHECK(h_scalar({3, 1}) == q() * t().pow(3));
  CHECK(h_scalar({}) == one());

  FpVector v = FpVector::single(l21);
  CHECK(from_h_basis(to_h_basis(v)) == v);
  CHECK(to_h_basis(from_h_basis(v)) == v);
}

TEST_CASE("worked y2 action") {
  // y_2 H_{(2,1),(q,t)} in the H basis
  FixedPointLabel src{{2, 1}, {{0, 1}, {1, 0}}};  // w = (q, t)
  FpVector h = FpVector::single(src);
  FpVector got = to_h_basis(y2_geom(from_h_basis(h)));

  FixedPointLabel t22{{2, 2}, {{1, 1}, {0, 1}}};   // (qt, q)
  FixedPointLabel t31a{{3, 1}, {{2, 0}, {0, 1}}};  // (t^2, q)
  FixedPointLabel t31b{{3, 1}, {{0, 1}, {2, 0}}};  // (q, t^2)
  CHECK(got.terms().size() == 3);
  CHECK(got.coefficient_of(t22) == one() / (t() - q()));
  CHECK(got.coefficient_of(t31a) ==
        (t() - one()) * t() / ((q() - t()) * (t() * t() - q())));
  CHECK(got.coefficient_of(t31b) == one() / (q() - t() * t()));

  // linearity on I-basis vectors
  FpVector a = FpVector::single(src);
  FpVector b = FpVector::single(t22, QtRational(3));
  CHECK(y2_geom(a + b) == y2_geom(a) + y2_geom(b));
}
