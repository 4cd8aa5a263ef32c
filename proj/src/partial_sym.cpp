#include "macd/partial_sym.hpp"

#include <algorithm>
#include <numeric>

namespace macd {

XPoly hecke_symmetrize(const XPoly& f, int m) {
  if (m > f.var_count()) throw MathError("partial_sym: block exceeds n");
  // P^+_m = C_2 C_3 ... C_m with C_r = 1 + T_{r-1} + T_{r-1}T_{r-2} + ...
  // + T_{r-1}...T_1, applied right to left. Each C_r is evaluated in the
  // nested form g = f + T_{r-1}(f + T_{r-2}(f + ...)).
  XPoly out = f;
  for (int r = m; r >= 2; --r) {
    XPoly g = out;
    for (int i = 1; i <= r - 1; ++i) g = out + dl_apply(i, g);
    out = g;
  }
  return out;
}

namespace {

void permutations_rec(int m, std::vector<int>& cur, std::vector<bool>& used,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= m; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(v);
    permutations_rec(m, cur, used, out);
    cur.pop_back();
    used[v] = false;
  }
}

// Reduced word for a permutation given in one-line notation (1-based).
std::vector<int> reduced_word(std::vector<int> perm) {
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < static_cast<int>(perm.size()); ++i) {
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back(i + 1);
        changed = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

XPoly hecke_symmetrize_enumerate(const XPoly& f, int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> cur;
  std::vector<bool> used(m + 1, false);
  permutations_rec(m, cur, used, perms);
  XPoly out(f.var_count());
  for (const auto& perm : perms) {
    std::vector<int> word = reduced_word(perm);
    XPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      g = dl_apply(*it, g);
    out = out + g;
  }
  return out;
}

QtRational stabilizer_poincare(const Composition& padded_lambda) {
  // product of t-factorials over multiplicities of equal parts
  std::map<int, int> mult;
  for (int v : padded_lambda) ++mult[v];
  QtRational out(1);
  for (const auto& [v, m] : mult) {
    for (int i = 2; i <= m; ++i) {
      QtRational bracket(0);
      for (int j = 0; j < i; ++j) bracket += QtRational::t(1).pow(j);
      out *= bracket;
    }
  }
  return out;
}

PartiallySymmetricPoly build_P(const SplitIndex& idx, int n) {
  int k = idx.k();
  int m = n - k;
  if (m < static_cast<int>(idx.lambda.size()) || m < 0)
    throw MathError("partial_sym: not enough symmetric slots");
  SplitIndex padded = idx.with_m(m);
  XPoly e = compute_E(padded.combined());
  XPoly sym = hecke_symmetrize(e, m);
  QtRational s = stabilizer_poincare(padded.padded_lambda());
  PartiallySymmetricPoly out;
  out.index = padded;
  out.n = n;
  out.body = sym.scalar_mul(s.inverse());
  out.form = PolyForm::P;
  return out;
}

bool is_integral(const XPoly& f) {
  for (const auto& [e, c] : f.terms())
    if (!c.is_integral_poly()) return false;
  return true;
}

PartiallySymmetricPoly build_J(const SplitIndex& idx, int n) {
  PartiallySymmetricPoly p = build_P(idx, n);
  p.body = p.body.scalar_mul(j_scalar(p.index));
  p.form = PolyForm::J;
  for (const auto& [e, c] : p.body.terms())
    if (!c.is_integral_poly())
      throw InternalError("partial_sym: non-integral J coefficient " +
                          c.str() + " at " + p.index.str());
  return p;
}

TjExpansion tj_action(const SplitIndex& idx, int i) {
  const Composition& gamma = idx.gamma;
  if (i < 1 || i >= idx.k())
    throw MathError("partial_sym: slot index out of range");
  if (gamma[i - 1] <= gamma[i])
    throw MathError(
        "partial_sym: tj_action needs gamma_i > gamma_{i+1}; use the "
        "eigenvalue or Hecke relation instead");
  Composition nu = idx.combined();
  DiagBox u{idx.m + i, gamma[i] + 1};
  int l = leg(nu, u);
  int a = arm(nu, u, ArmVariant::plain);
  QtRational la = QtRational::monomial(1, l + 1, 2 * a);
  QtRational la1 = QtRational::monomial(1, l + 1, 2 * (a + 1));
  TjExpansion out;
  out.swapped = (QtRational(1) - la1) / (QtRational(1) - la);
  out.same = -(QtRational(1) - QtRational::t()) / (QtRational(1) - la);
  return out;
}

bool stability_probe(const SplitIndex& idx, int m, int m_plus) {
  if (m_plus <= m || m < static_cast<int>(idx.lambda.size()))
    throw MathError("partial_sym: bad slot counts");
  int k = idx.k();
  PartiallySymmetricPoly small = build_P(idx.with_m(m), m + k);
  PartiallySymmetricPoly big = build_P(idx.with_m(m_plus), m_plus + k);
  XPoly cut = big.body;
  for (int i = m + 1; i <= m_plus; ++i) cut = cut.set_variable_zero(i);
  std::vector<int> keep;
  for (int i = 1; i <= m; ++i) keep.push_back(i);
  for (int i = m_plus + 1; i <= m_plus + k; ++i) keep.push_back(i);
  return cut.restrict_variables(keep) == small.body;
}

XPoly w0_twist_finite(const XPoly& f, int m, int k) {
  if (m + k != f.var_count())
    throw MathError("partial_sym: block sizes do not match n");
  if (k <= 1) return f;
  // T_{w_0} over a reduced word for the longest element of the y-block
  XPoly out = f;
  for (int len = 1; len < k; ++len)
    for (int j = len; j >= 1; --j) out = dl_apply(m + j, out);
  // the permutation w_0 reverses the y-block
  std::vector<int> sigma(m + k);
  std::iota(sigma.begin(), sigma.end(), 1);
  for (int j = 1; j <= k; ++j) sigma[m + j - 1] = m + k - j + 1;
  out = out.permute_variables(sigma);
  long lw0 = static_cast<long>(k) * (k - 1) / 2;
  return out.scalar_mul(QtRational::t(1).pow(-lw0));
}

}  // namespace macd
