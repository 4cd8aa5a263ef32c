#include "macd/nonsym.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace macd {

XPoly dl_apply(int i, const XPoly& f) {
  int n = f.var_count();
  if (i < 1 || i >= n) throw MathError("nonsym: operator index out of range");
  XPoly sf = f.swap_variables(i, i + 1);
  QtRational t = QtRational::t();
  if (sf == f) return f.scalar_mul(t);  // symmetric kernel, eigenvalue t
  XPoly h = (f - sf).divide_by_var_difference(i, i + 1);
  return sf.scalar_mul(t) + h.mul_variable_power(i + 1, 1).scalar_mul(t - QtRational(1));
}

XPoly dl_inverse_apply(int i, const XPoly& f) {
  QtRational t = QtRational::t();
  XPoly g = dl_apply(i, f) + f.scalar_mul(QtRational(1) - t);
  return g.scalar_mul(t.inverse());
}

int word_permutation_length(const std::vector<int>& word, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i : word) {
    if (i < 1 || i >= n) throw MathError("nonsym: word letter out of range");
    std::swap(perm[i - 1], perm[i]);
  }
  int inv = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

XPoly t_word_apply(const std::vector<int>& word, const XPoly& f) {
  if (word_permutation_length(word, f.var_count()) !=
      static_cast<int>(word.size()))
    throw MathError("nonsym: word is not reduced");
  XPoly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = dl_apply(*it, out);
  return out;
}

namespace {

std::map<Composition, XPoly> e_cache;
std::shared_mutex e_cache_mutex;

// (1-t) / (1 - q^{l+1} t^{a}) for the descent box of sigma at position i.
QtRational descent_coefficient(const Composition& sigma, int i) {
  DiagBox box{i, sigma[i] + 1};  // (i, sigma_{i+1}+1), 1-based column i
  int l = leg(sigma, box);
  int a = arm(sigma, box, ArmVariant::plain);
  return (QtRational(1) - QtRational::t()) /
         (QtRational(1) - QtRational::monomial(1, l + 1, 2 * a));
}

XPoly compute_E_impl(const Composition& nu) {
  int n = static_cast<int>(nu.size());
  if (comp_size(nu) == 0) return XPoly::constant(n, QtRational(1));

  // Ascent step: for sigma with sigma_i > sigma_{i+1} we have
  // E_{s_i sigma} = T_i E_sigma + (1-t)/(1-q^{l+1}t^{a}) E_sigma
  // with the box (i, sigma_{i+1}+1) in dg(sigma).
  for (int i = 1; i < n; ++i) {
    if (nu[i - 1] < nu[i]) {
      Composition sigma = nu;
      std::swap(sigma[i - 1], sigma[i]);
      XPoly base = compute_E(sigma);
      return dl_apply(i, base) + base.scalar_mul(descent_coefficient(sigma, i));
    }
  }

  // nu is a partition: rotate one box off the front.
  // E_nu(x_1..x_n) = q^{nu_1 - 1} x_1 E_mu(x_2,...,x_n, q^{-1} x_1)
  // with mu = (nu_2,...,nu_n, nu_1 - 1).
  Composition mu(nu.begin() + 1, nu.end());
  mu.push_back(nu[0] - 1);
  XPoly base = compute_E(mu);
  std::vector<int> sigma(n);
  for (int j = 1; j < n; ++j) sigma[j - 1] = j + 1;  // variable j -> x_{j+1}
  sigma[n - 1] = 1;                                  // variable n -> x_1
  XPoly rotated = base.permute_variables(sigma);
  // variable n of base became x_1 and still needs the q^{-1} factor
  XPoly shifted(n);
  for (const auto& [e, c] : rotated.terms())
    shifted.add_term(e, c * QtRational::q(-e[0]));
  return shifted.mul_variable_power(1, 1).scalar_mul(QtRational::q(nu[0] - 1));
}

}  // namespace

XPoly compute_E(const Composition& nu) {
  {
    std::shared_lock lock(e_cache_mutex);
    auto it = e_cache.find(nu);
    if (it != e_cache.end()) return it->second;
  }
  XPoly result = compute_E_impl(nu);
  {
    std::unique_lock lock(e_cache_mutex);
    e_cache.emplace(nu, result);
  }
  return result;
}

void clear_E_cache() {
  std::unique_lock lock(e_cache_mutex);
  e_cache.clear();
}

EvaluationReport evaluation_check(const Composition& lam) {
  int n = static_cast<int>(lam.size());
  if (n == 0) throw MathError("nonsym: empty composition");

  // lhs: E_lambda at x_i = t^{-rho_i}, rho = ((n-1)/2, (n-3)/2, ...).
  XPoly e = compute_E(lam);
  std::vector<QtExp> point;
  point.reserve(n);
  for (int i = 1; i <= n; ++i) point.push_back(QtExp{0, -(n - 2 * i + 1)});
  QtRational lhs = e.evaluate_monomials(point);

  // rhs: t^{<rho, lambda_->} prod over Inv(m_lambda).
  Composition asc = sorted_asc(lam);
  // stable sorting permutation u with u(lambda) = lambda_-; u^{-1}(i) is the
  // position of the entry of lambda moved to slot i.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lam[a] < lam[b]; });

  int rho_pair = 0;  // 2 * <rho, lambda_->
  for (int i = 1; i <= n; ++i) rho_pair += (n - 2 * i + 1) * asc[i - 1];
  QtRational rhs = QtRational::t_half(rho_pair);

  // negative roots alpha = e_b - e_a for a < b; <alpha, rho> = a - b
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      int pairing = asc[b - 1] - asc[a - 1];  // <lambda_-, alpha>
      // u^{-1}(alpha) = e_{u^{-1}(b)} - e_{u^{-1}(a)} is positive iff
      // u^{-1}(b) < u^{-1}(a)
      bool positive = order[b - 1] < order[a - 1];
      int kmax = positive ? pairing - 1 : pairing;
      for (int k = 1; k <= kmax; ++k) {
        // (1 - q^k t^{1 - <alpha,rho>}) / (1 - q^k t^{-<alpha,rho>})
        QtRational num =
            QtRational(1) - QtRational::monomial(1, k, 2 * (1 - (a - b)));
        QtRational den =
            QtRational(1) - QtRational::monomial(1, k, 2 * (b - a));
        if (den.is_zero())
          throw MathError("nonsym: evaluation factor vanishes");
        rhs *= num / den;
      }
    }
  }
  return EvaluationReport{lhs, rhs, lhs == rhs};
}

}  // namespace macd
