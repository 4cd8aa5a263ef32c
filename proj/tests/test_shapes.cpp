#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "macd/shapes.hpp"

using namespace macd;

TEST_CASE("leg and arm statistics") {
  Composition nu = {1, 3, 2, 1, 3, 0, 1};
  CHECK(leg(nu, {3, 1}) == 1);
  CHECK(leg(nu, {2, 1}) == 2);
  CHECK(leg(nu, {2, 3}) == 0);  // top box

  // Counts from the defining formulas: the u-box arm picks up the columns
  // with values 1, 0, 1 to its right plus one column on the left.
  CHECK(arm(nu, {3, 1}, ArmVariant::plain) == 4);
  CHECK(arm(nu, {2, 1}, ArmVariant::tilde) == 4);

  Composition single = {5};
  for (int j = 1; j <= 5; ++j) {
    CHECK(arm(single, {1, j}, ArmVariant::plain) == 0);
    CHECK(arm(single, {1, j}, ArmVariant::tilde) == 0);
  }

  CHECK_THROWS_AS(leg(nu, {6, 1}), MathError);
  CHECK_THROWS_AS(arm(nu, {1, 2}, ArmVariant::plain), MathError);
}

TEST_CASE("arm variants agree on weakly increasing compositions") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> part(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Composition nu;
    for (int i = 0; i < 5; ++i) nu.push_back(part(rng));
    std::sort(nu.begin(), nu.end());
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= nu[i - 1]; ++j)
        CHECK(arm(nu, {i, j}, ArmVariant::plain) ==
              arm(nu, {i, j}, ArmVariant::tilde));
  }
}

TEST_CASE("spectral vector") {
  Composition zero(4, 0);
  auto sv = spectral_vector(zero);
  for (int i = 0; i < 4; ++i) {
    CHECK(sv[i].first == 0);
    CHECK(sv[i].second == -(3 - i));
  }

  auto sv2 = spectral_vector({2, 1, 1, 1, 3});
  std::vector<std::pair<int, int>> expect = {
      {2, -1}, {1, -4}, {1, -3}, {1, -2}, {3, 0}};
  CHECK(sv2 == expect);

  CHECK(spectral_vector({3}) == std::vector<std::pair<int, int>>{{3, 0}});
}

TEST_CASE("sort and n statistic") {
  auto [s1, n1] = sort_and_n({0, 1});
  CHECK(s1 == Composition{1, 0});
  CHECK(n1 == 0);

  auto [s2, n2] = sort_and_n({1, 0, 1});
  CHECK(s2 == Composition{1, 1, 0});
  CHECK(n2 == 1);

  // transpose-aware check used by the H normalization
  CHECK(n_stat(transpose({3, 1})) == 3);
}

TEST_CASE("cyclic shift") {
  CHECK(c_shift({1, 1, 3}, {2}) == Composition{1, 2, 3});
  CHECK(c_shift({4, 7}, {1}) == Composition{5, 7});
  CHECK(c_shift({1, 1, 3}, {1, 3}) == Composition{3, 1, 2});
  CHECK_THROWS_AS(c_shift({1, 2}, {3}), MathError);
  CHECK_THROWS_AS(c_shift({1, 2}, {}), MathError);
}

TEST_CASE("j scalar") {
  CHECK(j_scalar(SplitIndex({}, {0, 0, 0}, 0)) == QtRational(1));
  QtRational one_minus_qt = QtRational(1) - QtRational::q() * QtRational::t();
  for (int m : {0, 1, 3})
    CHECK(j_scalar(SplitIndex({}, {0, 1}, m)) == one_minus_qt);
  QtRational one_minus_t = QtRational(1) - QtRational::t();
  for (int k = 0; k <= 3; ++k)
    CHECK(j_scalar(SplitIndex({1}, Composition(k, 0), 1)) == one_minus_t);

  // padding independence
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> part(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Composition lam = {part(rng), part(rng)};
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    Composition gam = {part(rng), part(rng)};
    SplitIndex a(lam, gam, 2);
    CHECK(j_scalar(a) == j_scalar(a.with_m(4)));
  }
}

TEST_CASE("phi on the worked labels") {
  FixedPointLabel fp{{2, 1}, {{1, 0}, {0, 1}}};  // (xi=(2,1), w=(t,q))
  SplitIndex idx = phi(fp);
  CHECK(idx.lambda.empty());
  CHECK(idx.gamma == Composition{0, 1});

  FixedPointLabel fp2{{2, 1}, {{0, 1}, {1, 0}}};  // w=(q,t)
  SplitIndex idx2 = phi(fp2);
  CHECK(idx2.lambda.empty());
  CHECK(idx2.gamma == Composition{1, 0});

  for (int k = 1; k <= 4; ++k) {
    FixedPointLabel row{{k}, {}};
    for (int c = k - 1; c >= 0; --c) row.w.push_back({c, 0});
    SplitIndex got = phi(row);
    CHECK(got.lambda.empty());
    CHECK(got.gamma == Composition(k, 0));
  }
}

TEST_CASE("phi inverse on the worked indices") {
  FixedPointLabel fp = phi_inverse(SplitIndex({}, {0, 1}, 0));
  CHECK(fp.xi == Composition{2, 1});
  CHECK(fp.w == std::vector<PlaneBox>{{1, 0}, {0, 1}});

  FixedPointLabel fp2 = phi_inverse(SplitIndex({1}, {0, 1}, 1));
  CHECK(fp2.xi == Composition{3, 1});
  CHECK(fp2.w == std::vector<PlaneBox>{{2, 0}, {0, 1}});
  CHECK(fp2.valid());

  FixedPointLabel fp3 = phi_inverse(SplitIndex({}, {0, 0, 0}, 0));
  CHECK(fp3.xi == Composition{3});
  CHECK(fp3.w == std::vector<PlaneBox>{{2, 0}, {1, 0}, {0, 0}});
}

TEST_CASE("phi roundtrip is exhaustive") {
  for (int size = 0; size <= 8; ++size) {
    for (int k = 0; k <= std::min(3, size); ++k) {
      auto labels = all_fixed_points(size, k);
      std::set<std::pair<Composition, Composition>> seen;
      for (const auto& fp : labels) {
        REQUIRE(fp.valid());
        SplitIndex idx = phi(fp);
        CHECK(idx.size() + idx.k() == size);
        FixedPointLabel back = phi_inverse(idx);
        CHECK(back == fp);
        seen.insert(idx.key());

        // multiset of column heights decomposes into lambda and gamma+1
        std::vector<int> hs = column_heights(fp.xi);
        std::vector<int> parts = idx.lambda;
        for (int g : idx.gamma) parts.push_back(g + 1);
        std::sort(hs.begin(), hs.end());
        std::sort(parts.begin(), parts.end());
        CHECK(hs == parts);
      }
      CHECK(seen.size() == labels.size());
    }
  }
}

TEST_CASE("special arm leg law") {
  // For gamma_i > gamma_{i+1}: w_i / w_{i+1} = q^{l(u)+1} t^{-a(u)} with
  // u = (m+i, gamma_{i+1}+1) in dg(lambda^- | gamma).
  for (int total = 0; total <= 6; ++total) {
    for (int k = 2; k <= 3; ++k) {
      for (int lamsize = 0; lamsize + k <= total + k && lamsize <= total;
           ++lamsize) {
        for (const Composition& lam : partitions_of(lamsize)) {
          for (const Composition& gam : compositions_of(total - lamsize, k)) {
            int m = static_cast<int>(lam.size());
            SplitIndex idx(lam, gam, m);
            FixedPointLabel fp = phi_inverse(idx);
            auto ws = fp.w_weights();
            Composition nu = idx.combined_asc();
            for (int i = 1; i < k; ++i) {
              if (gam[i - 1] <= gam[i]) continue;
              DiagBox u{m + i, gam[i] + 1};
              int l = leg(nu, u);
              int a = arm(nu, u, ArmVariant::plain);
              CHECK(ws[i - 1] / ws[i] ==
                    QtRational::monomial(1, l + 1, -2 * a));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("addable boxes") {
  auto empty = addable_boxes({});
  CHECK(empty == std::vector<PlaneBox>{{0, 0}});

  auto two_one = addable_boxes({2, 1});
  CHECK(two_one == std::vector<PlaneBox>{{2, 0}, {1, 1}, {0, 2}});

  auto row = addable_boxes({4});
  CHECK(row == std::vector<PlaneBox>{{4, 0}, {0, 1}});

  CHECK(add_box({2, 1}, {2, 0}) == Composition{3, 1});
  CHECK(add_box({2, 1}, {0, 2}) == Composition{2, 1, 1});
  CHECK_THROWS_AS(add_box({2, 1}, {2, 1}), MathError);
}

TEST_CASE("text parsing") {
  CHECK(parse_composition("1,0,2") == Composition{1, 0, 2});
  CHECK(parse_composition("") == Composition{});
  auto w = parse_strip("q^0*t^1,q^1*t^0");
  CHECK(w == std::vector<PlaneBox>{{1, 0}, {0, 1}});
  auto w2 = parse_strip("(2,0),(0,1)");
  CHECK(w2 == std::vector<PlaneBox>{{2, 0}, {0, 1}});
  auto w3 = parse_strip("t^2,t,q");
  CHECK(w3 == std::vector<PlaneBox>{{2, 0}, {1, 0}, {0, 1}});
}
