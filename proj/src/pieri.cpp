#include "macd/pieri.hpp"

#include "macd/polyrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>

namespace macd {

namespace {

QtRational one() { return QtRational(1); }
QtRational t_pow(int e) { return QtRational::t(1).pow(e); }

std::vector<int> t_sequence(const std::vector<int>& I1, int k) {
  std::vector<int> t;
  t.push_back(0);
  t.insert(t.end(), I1.begin(), I1.end());
  t.push_back(k + 1);
  return t;
}

// Integral forms are cached as stable lifts and specialized per variable
// count; stability makes the lift-and-specialize route agree with a direct
// construction at any m >= degree.
using JKey = std::pair<Composition, Composition>;
std::map<JKey, VkElem> j_lift_cache;
std::shared_mutex j_cache_mutex;

XPoly cached_J(const SplitIndex& idx, int n) {
  JKey key = idx.key();
  int m = n - idx.k();
  {
    std::shared_lock lock(j_cache_mutex);
    auto it = j_lift_cache.find(key);
    if (it != j_lift_cache.end()) return specialize_vk(it->second, m);
  }
  VkElem lift = build_J_vk(idx, std::max(idx.size(), 1));
  XPoly out = specialize_vk(lift, m);
  std::unique_lock lock(j_cache_mutex);
  j_lift_cache.emplace(std::move(key), std::move(lift));
  return out;
}

// True when sorted(mu, eta) arises from sorted(lambda, gamma) by adding one
// box; only such indices can carry a nonzero expansion coefficient, and a
// wrong pruning would surface as an inconsistent solve.
bool one_box_above(const SplitIndex& target, const SplitIndex& src) {
  Composition a = src.lambda;
  for (int g : src.gamma) a.push_back(g);
  Composition b = target.lambda;
  for (int g : target.gamma) b.push_back(g);
  std::size_t len = std::max(a.size(), b.size()) + 1;
  a.resize(len, 0);
  b.resize(len, 0);
  std::multiset<int> ma(a.begin(), a.end()), mb(b.begin(), b.end());
  for (auto it = ma.begin(); it != ma.end();) {
    auto jt = mb.find(*it);
    if (jt != mb.end()) {
      mb.erase(jt);
      it = ma.erase(it);
    } else {
      ++it;
    }
  }
  return ma.size() == 1 && mb.size() == 1 && *mb.begin() == *ma.begin() + 1;
}

}  // namespace

std::vector<SplitIndex> all_split_indices(int total, int k) {
  std::vector<SplitIndex> out;
  for (int lamsize = total; lamsize >= 0; --lamsize)
    for (const Composition& lam : partitions_of(lamsize))
      for (const Composition& gam : compositions_of(total - lamsize, k))
        out.emplace_back(lam, gam, static_cast<int>(lam.size()));
  return out;
}

std::vector<PieriDatum> enumerate_support(const SplitIndex& src, int n) {
  int k = src.k();
  int m = n - k;
  if (m < static_cast<int>(src.lambda.size()))
    throw MathError("pieri: not enough symmetric slots");
  SplitIndex padded = src.with_m(m);
  Composition lambda = padded.padded_lambda();
  const Composition& gamma = src.gamma;

  std::set<int> values(lambda.begin(), lambda.end());
  std::map<std::pair<Composition, Composition>, PieriDatum> found;

  for (int v : values) {
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> I1;
      for (int i = 1; i <= k; ++i)
        if (mask & (1 << (i - 1))) I1.push_back(i);
      int r = static_cast<int>(I1.size());
      std::vector<int> t = t_sequence(I1, k);

      // eta: cycle the chosen value through the I1 positions
      Composition eta = gamma;
      for (int j = 1; j <= r; ++j)
        eta[t[j] - 1] = (j == 1) ? v : gamma[t[j - 1] - 1];
      int c_new = (r == 0 ? v : gamma[t[r] - 1]) + 1;

      // maximality
      bool maximal = true;
      for (int u = 1; u <= r && maximal; ++u)
        for (int j = t[u - 1] + 1; j < t[u] && maximal; ++j)
          if (eta[j - 1] == eta[t[u] - 1]) maximal = false;
      for (int j = t[r] + 1; j <= k && maximal; ++j)
        if (eta[j - 1] == c_new - 1) maximal = false;
      if (!maximal) continue;

      // mu~: remaining lambda entries with the new column right-justified
      Composition others = lambda;
      others.erase(std::find(others.begin(), others.end(), v));
      Composition left, right;
      for (int e : others) (e == c_new ? right : left).push_back(e);
      right.push_back(c_new);
      std::sort(left.begin(), left.end());
      Composition mu_tilde = left;
      mu_tilde.insert(mu_tilde.end(), right.begin(), right.end());
      int h = static_cast<int>(left.size()) + 1;

      PieriDatum d;
      d.source = padded;
      d.chosen_value = v;
      d.I1 = I1;
      d.eta = eta;
      d.mu_tilde = mu_tilde;
      d.h = h;
      d.lambda_tilde = Composition(mu_tilde.begin(), mu_tilde.end() - 1);
      d.lambda_tilde.push_back(v);
      d.target = SplitIndex(sorted_desc(mu_tilde), eta, m);

      auto key = d.target.key();
      auto [it, inserted] = found.emplace(std::move(key), d);
      if (!inserted &&
          (it->second.I1 != d.I1 || it->second.chosen_value != d.chosen_value))
        throw InternalError(
            "pieri: two distinct maximal cycles reach one target");
    }
  }
  std::vector<PieriDatum> out;
  out.reserve(found.size());
  for (auto& [key, d] : found) out.push_back(std::move(d));
  return out;
}

QtRational coefficient_A(const PieriDatum& datum) {
  const SplitIndex& src = datum.source;
  int m = src.m;
  int k = src.k();
  int v = datum.chosen_value;
  int r = static_cast<int>(datum.I1.size());
  std::vector<int> t = t_sequence(datum.I1, k);
  Composition nu_asc = src.combined_asc();  // (lambda^- | gamma)
  Composition lambda_asc(nu_asc.begin(), nu_asc.begin() + m);

  // row product over the symmetric boxes at height v+1
  QtRational row(1);
  for (int i = 1; i <= m; ++i) {
    if (lambda_asc[i - 1] < v + 1) continue;
    DiagBox box{i, v + 1};
    int l = leg(nu_asc, box);
    int a = arm(nu_asc, box, ArmVariant::plain);
    QtRational factor = QtRational::monomial(1, l + 1, 2 * (a + 1));
    row *= (QtRational::t() - factor) / (one() - factor);
  }

  // j_C over the rightmost lambda^- column of height v. The numerator boxes
  // carry the symmetric-part arm and the denominator boxes the
  // nonsymmetric-part arm; the gamma columns of height j-1 that separate the
  // two variants account for the migration of the column across the split.
  QtRational jc(1);
  if (v > 0) {
    int col = -1;
    for (int i = m; i >= 1; --i)
      if (lambda_asc[i - 1] == v) {
        col = i;
        break;
      }
    if (col < 0)
      throw InternalError("pieri: chosen value missing from lambda");
    for (int j = 1; j <= v; ++j) {
      DiagBox box{col, j};
      int l = leg(nu_asc, box);
      int at = arm(nu_asc, box, ArmVariant::tilde);
      int ap = arm(nu_asc, box, ArmVariant::plain);
      QtRational num = one() - QtRational::monomial(1, l, 2 * (at + 1));
      QtRational den = one() - QtRational::monomial(1, l + 1, 2 * (ap + 1));
      jc *= num / den;
    }
  }

  // p'_{I1} in the eigenvalues of (mu~ | eta)
  Composition mu_eta = datum.mu_tilde;
  mu_eta.insert(mu_eta.end(), datum.eta.begin(), datum.eta.end());
  auto eta_bar = [&](int j) { return spectral_value(mu_eta, m + j); };
  QtRational omega_h = spectral_value(mu_eta, datum.h);
  QtRational qinv = QtRational::q(-1);
  QtRational tr = QtRational::t();

  QtRational p(1);
  if (r >= 1) {
    p *= (tr - one()) * qinv * omega_h / (qinv * omega_h - eta_bar(t[r]));
    for (int u = 1; u <= r - 1; ++u)
      p *= (tr - one()) * eta_bar(t[u + 1]) /
           (eta_bar(t[u + 1]) - eta_bar(t[u]));
    for (int u = 1; u <= r; ++u)
      for (int j = t[u - 1] + 1; j < t[u]; ++j)
        p *= (tr * eta_bar(t[u]) - eta_bar(j)) / (eta_bar(t[u]) - eta_bar(j));
  }
  for (int j = t[r] + 1; j <= k; ++j)
    p *= (qinv * tr * omega_h - eta_bar(j)) / (qinv * omega_h - eta_bar(j));

  // spectral value of (lambda~ | gamma) at slot m
  Composition lt_gamma = datum.lambda_tilde;
  lt_gamma.insert(lt_gamma.end(), src.gamma.begin(), src.gamma.end());
  QtRational spec = spectral_value(lt_gamma, m);

  int mu_h = datum.mu_tilde[datum.h - 1];
  return row * jc * p * (one() - tr).inverse() * QtRational::q(1 - mu_h) *
         spec;
}

QtRational p_tilde(const QtRational& x, const std::vector<QtRational>& w,
                   const std::vector<int>& I1) {
  int k = static_cast<int>(w.size());
  int r = static_cast<int>(I1.size());
  std::vector<int> t = t_sequence(I1, k);
  QtRational tinv = QtRational::t(-1);
  QtRational out(1);
  if (r >= 1) {
    out *= (one() - tinv) * x / (x - w[I1[0] - 1]);
    for (int u = 1; u <= r - 1; ++u)
      out *= (one() - tinv) * w[t[u] - 1] / (w[t[u] - 1] - w[t[u + 1] - 1]);
    for (int j = 1; j < t[1]; ++j)
      out *= (tinv * x - w[j - 1]) / (x - w[j - 1]);
    for (int u = 1; u <= r; ++u)
      for (int j = t[u] + 1; j < t[u + 1]; ++j)
        out *= (tinv * w[t[u] - 1] - w[j - 1]) / (w[t[u] - 1] - w[j - 1]);
  } else {
    for (int j = 1; j <= k; ++j)
      out *= (tinv * x - w[j - 1]) / (x - w[j - 1]);
  }
  return out;
}

FixedPointLabel pieri_target_label(const FixedPointLabel& src_label,
                                   const PlaneBox& x,
                                   const std::vector<int>& I1) {
  int k = src_label.k();
  std::vector<PlaneBox> tuple;
  tuple.push_back(x);
  tuple.insert(tuple.end(), src_label.w.begin(), src_label.w.end());
  for (int l = 1; l <= k; ++l)
    if (std::find(I1.begin(), I1.end(), l) == I1.end())
      std::swap(tuple[l - 1], tuple[l]);
  tuple.pop_back();
  FixedPointLabel out;
  out.xi = add_box(src_label.xi, x);
  out.w = std::move(tuple);
  return out;
}

QtRational coefficient_C_closed(const FixedPointLabel& src_label,
                                const PlaneBox& x,
                                const std::vector<int>& I1) {
  const Composition& xi = src_label.xi;
  Composition xi_plus = add_box(xi, x);
  std::vector<int> heights = column_heights(xi);
  std::vector<int> heights_plus = column_heights(xi_plus);

  int rl = 0;
  for (const PlaneBox& b : src_label.w) {
    if (b.c == x.c)
      throw MathError("pieri: added box shares a column with the strip");
    if (b.c > x.c) ++rl;
  }

  // symmetric-row product over unlabeled boxes in the row of x
  QtRational row(1);
  if (x.r < static_cast<int>(xi.size())) {
    for (int c = 0; c < xi[x.r]; ++c) {
      bool labeled = false;
      for (const PlaneBox& b : src_label.w) labeled |= b.c == c;
      if (labeled) continue;
      int armv = xi[x.r] - c - 1;
      int legv = heights[c] - x.r - 1;
      row *= (QtRational::t(armv) - QtRational::q(legv + 1)) /
             (QtRational::t(armv + 1) - QtRational::q(legv + 1));
    }
  }

  // column product in xi + x with the labeled-box corrections b(box)
  QtRational col(1);
  int col_height = x.c < static_cast<int>(heights.size()) ? heights[x.c] : 0;
  for (int rr = 0; rr < col_height; ++rr) {
    int armv = xi_plus[rr] - x.c - 1;
    int legv = heights_plus[x.c] - rr - 1;
    int b = 0;
    for (const PlaneBox& w : src_label.w)
      if (w.r == rr && w.c > x.c) ++b;
    col *= (QtRational::t(armv + 1 - b) - QtRational::q(legv - 1)) /
           (QtRational::t(armv + 1) - QtRational::q(legv));
  }

  return p_tilde(box_weight(x), src_label.w_weights(), I1) * t_pow(rl) * row *
         col;
}

QtRational coefficient_C_operator(const FixedPointLabel& src_label,
                                  const FixedPointLabel& target_label) {
  FpVector h = FpVector::single(src_label);
  FpVector chain = to_h_basis(e1_geom_chain(from_h_basis(h)));
  return chain.coefficient_of(target_label);
}

MatchReport match_check(const PieriDatum& datum) {
  MatchReport rep;
  rep.source = datum.source;
  rep.target = datum.target;
  rep.A = coefficient_A(datum);

  FixedPointLabel src_label = phi_inverse(datum.source);
  FixedPointLabel target_label = phi_inverse(datum.target);

  // locate the added box: the unique addable box whose swap word lands on
  // the target label
  std::optional<PlaneBox> added;
  for (const PlaneBox& cand : addable_boxes(src_label.xi)) {
    FixedPointLabel lab = pieri_target_label(src_label, cand, datum.I1);
    if (lab.valid() && lab == target_label) {
      added = cand;
      break;
    }
  }
  if (!added)
    throw InternalError("pieri: no addable box reaches the target label");

  rep.C_closed = coefficient_C_closed(src_label, *added, datum.I1);
  rep.C_operator = coefficient_C_operator(src_label, target_label);

  int r = static_cast<int>(datum.I1.size());
  rep.c_r_column = r == 0 ? added->c : src_label.w[datum.I1[r - 1] - 1].c;

  Composition src_all = datum.source.lambda;
  for (int g : datum.source.gamma) src_all.push_back(g);
  Composition tgt_all = datum.target.lambda;
  for (int g : datum.target.gamma) tgt_all.push_back(g);
  rep.c_r_nstat = sort_and_n(tgt_all).second - sort_and_n(src_all).second;
  rep.c_r_consistent = rep.c_r_nstat == rep.c_r_column;

  QtRational predicted =
      (t_pow(rep.c_r_column) * rep.A * (one() - QtRational::t())).star();
  rep.matched = rep.C_closed == predicted && rep.C_closed == rep.C_operator;
  return rep;
}

std::vector<std::pair<SplitIndex, QtRational>> brute_force_expand(
    const SplitIndex& src, int n) {
  int k = src.k();
  int m = n - k;
  XPoly jsrc = cached_J(src, n);
  XPoly e1(n);
  for (int i = 1; i <= m; ++i) e1 = e1 + XPoly::variable(n, i);
  XPoly lhs = e1 * jsrc;

  std::vector<XPoly> basis;
  std::vector<SplitIndex> kept;
  for (const SplitIndex& c : all_split_indices(src.size() + 1, k)) {
    if (static_cast<int>(c.lambda.size()) > m) continue;
    if (!one_box_above(c, src)) continue;
    basis.push_back(cached_J(c, n));
    kept.push_back(c);
  }
  int cols = static_cast<int>(basis.size());

  // Row-by-row elimination over the monomial coordinates, stopping once the
  // rank fills up; the candidate solution is then certified by an exact
  // polynomial identity check.
  std::set<ExpVec, std::greater<ExpVec>> coord_set;
  for (const auto& [e, c] : lhs.terms()) coord_set.insert(e);
  for (const XPoly& b : basis)
    for (const auto& [e, c] : b.terms()) coord_set.insert(e);

  std::vector<std::vector<QtRational>> reduced;  // rows in echelon form
  std::vector<int> pivot_of_row;
  auto eliminate = [&](std::vector<QtRational> row) {
    for (std::size_t rr = 0; rr < reduced.size(); ++rr) {
      const QtRational& lead = row[pivot_of_row[rr]];
      if (!lead.is_zero()) {
        QtRational f = lead;
        for (int c = 0; c <= cols; ++c) row[c] -= f * reduced[rr][c];
      }
    }
    int pivot = -1;
    for (int c = 0; c < cols; ++c)
      if (!row[c].is_zero()) {
        pivot = c;
        break;
      }
    if (pivot < 0) {
      if (!row[cols].is_zero())
        throw MathError("pieri: oracle system is inconsistent");
      return;
    }
    QtRational inv = row[pivot].inverse();
    for (int c = 0; c <= cols; ++c) row[c] *= inv;
    for (std::size_t rr = 0; rr < reduced.size(); ++rr) {
      QtRational f = reduced[rr][pivot];
      if (f.is_zero()) continue;
      for (int c = 0; c <= cols; ++c) reduced[rr][c] -= f * row[c];
    }
    reduced.push_back(std::move(row));
    pivot_of_row.push_back(pivot);
  };

  for (const ExpVec& e : coord_set) {
    if (static_cast<int>(reduced.size()) == cols) break;
    std::vector<QtRational> row(cols + 1, QtRational(0));
    for (int jcol = 0; jcol < cols; ++jcol) row[jcol] = basis[jcol].coefficient_of(e);
    row[cols] = lhs.coefficient_of(e);
    eliminate(std::move(row));
  }
  if (static_cast<int>(reduced.size()) != cols)
    throw MathError("pieri: oracle expansion is not unique");

  std::vector<QtRational> sol(cols, QtRational(0));
  for (std::size_t rr = 0; rr < reduced.size(); ++rr)
    sol[pivot_of_row[rr]] = reduced[rr][cols];

  // certify: the solved combination must reproduce e_1 J exactly
  XPoly check = lhs;
  for (int jcol = 0; jcol < cols; ++jcol)
    check = check - basis[jcol].scalar_mul(sol[jcol]);
  if (!check.is_zero())
    throw MathError("pieri: oracle system is inconsistent");

  std::vector<std::pair<SplitIndex, QtRational>> out;
  for (int jcol = 0; jcol < cols; ++jcol)
    if (!sol[jcol].is_zero()) out.emplace_back(kept[jcol], sol[jcol]);
  return out;
}

}  // namespace macd
