#include "macd/polyrep.hpp"

#include <algorithm>
#include <numeric>

namespace macd {

VkElem sfT_apply(int i, const VkElem& f) { return f.sf_t(i); }

VkElem sfT_inverse_apply(int i, const VkElem& f) { return f.sf_t_inverse(i); }

VkElem sfY_apply(int i, const VkElem& f) { return f.mul_y(i); }

VkElem dplus_poly(const VkElem& f) {
  int k = f.k();
  VkElem out = f.alphabet_shift(true, k + 1);
  for (int i = k; i >= 1; --i) out = out.sf_t(i);
  return out;
}

VkElem dminus_poly(const VkElem& f) {
  if (f.k() == 0) throw MathError("polyrep: d_minus needs k >= 1");
  return f.alphabet_shift(false, f.k()).omega_extract();
}

VkElem e1_chain(const VkElem& f) {
  int k = f.k();
  VkElem out = dplus_poly(f);
  for (int i = 1; i <= k; ++i) out = out.sf_t_inverse(i);
  return dminus_poly(out);
}

VkElem e1_multiply(const VkElem& f) {
  return f.mul_symfunc(SymFunc::e_k(f.degree_bound(), 1));
}

VkElem w0_twist(const VkElem& f) {
  int k = f.k();
  if (k <= 1) return f;
  VkElem out = f;
  for (int len = 1; len < k; ++len)
    for (int j = len; j >= 1; --j) out = out.dl_t(j);
  std::vector<int> sigma(k);
  for (int j = 1; j <= k; ++j) sigma[j - 1] = k - j + 1;
  out = out.permute_y(sigma);
  long lw0 = static_cast<long>(k) * (k - 1) / 2;
  return out.scalar_mul(QtRational::t(1).pow(-lw0));
}

VkElem star_t_apply(int i, const VkElem& f) {
  return f.star_coeffs().dl_t(i).star_coeffs().scalar_mul(QtRational::t());
}

VkElem star_t_word_w0(const VkElem& f, bool inverse) {
  // T*_w = t^{l(w)} (star . T_w . star); for the inverse the inner word
  // inverts letterwise in the reversed order.
  int k = f.k();
  long lw0 = static_cast<long>(k) * (k - 1) / 2;
  VkElem out = f.star_coeffs();
  if (!inverse) {
    for (int len = 1; len < k; ++len)
      for (int j = len; j >= 1; --j) out = out.dl_t(j);
  } else {
    for (int len = k - 1; len >= 1; --len)
      for (int j = 1; j <= len; ++j) out = out.dl_t_inverse(j);
  }
  out = out.star_coeffs();
  return out.scalar_mul(QtRational::t(1).pow(inverse ? -lw0 : lw0));
}

VkElem conjugated_star_t(int i, const VkElem& f) {
  // w0 T*_{w0} T*_i (w0 T*_{w0})^{-1} f
  int k = f.k();
  std::vector<int> w0(k);
  for (int j = 1; j <= k; ++j) w0[j - 1] = k - j + 1;
  VkElem out = f.permute_y(w0);           // w0^{-1} = w0
  out = star_t_word_w0(out, true);        // (T*_{w0})^{-1}
  out = star_t_apply(i, out);             // T*_i
  out = star_t_word_w0(out, false);       // T*_{w0}
  return out.permute_y(w0);               // w0
}

VkElem lift_partially_symmetric(const XPoly& f, int m, int k, int D) {
  if (m + k != f.var_count())
    throw MathError("polyrep: block sizes do not match n");
  // split terms by the y-monomial (variables m+1 .. m+k)
  std::map<ExpVec, XPoly> by_y;
  for (const auto& [e, c] : f.terms()) {
    ExpVec y(e.begin() + m, e.end());
    ExpVec x(e.begin(), e.begin() + m);
    auto it = by_y.find(y);
    if (it == by_y.end()) it = by_y.emplace(std::move(y), XPoly(m)).first;
    it->second.add_term(x, c);
  }
  VkElem out(k, D);
  for (const auto& [y, xpart] : by_y) {
    SymFunc lifted = from_finite_variables(xpart, D);
    for (const auto& [p, c] : lifted.coeffs()) out.add_term(p, y, c);
  }
  return out;
}

XPoly specialize_vk(const VkElem& f, int m) {
  int k = f.k();
  XPoly out(m + k);
  for (const auto& [key, c] : f.terms()) {
    SymFunc part = SymFunc::basis_element(f.degree_bound(),
                                          SymBasis::monomial, key.first, c);
    XPoly xp = part.specialize(m);
    for (const auto& [e, co] : xp.terms()) {
      ExpVec full = e;
      full.insert(full.end(), key.second.begin(), key.second.end());
      out.add_term(full, co);
    }
  }
  return out;
}

VkElem build_J_vk(const SplitIndex& idx, int D) {
  if (idx.size() > D)
    throw DegreeOverflow("polyrep: index degree exceeds the bound");
  int k = idx.k();
  PartiallySymmetricPoly j = build_J(idx.with_m(D), D + k);
  return lift_partially_symmetric(j.body, D, k, D);
}

VkElem build_Htilde(const SplitIndex& idx, int D) {
  VkElem j = build_J_vk(idx, D);
  VkElem twisted = w0_twist(j);
  // plethysm X / (t^{-1} - 1): p_i picks up 1/(t^{-i} - 1) = -t^i/(t^i - 1)
  VkElem scaled = twisted.alphabet_scale([](int i) {
    return (QtRational::t(1).pow(-i) - QtRational(1)).inverse();
  });
  VkElem starred = scaled.star_coeffs();
  Composition all = idx.lambda;
  for (int g : idx.gamma) all.push_back(g);
  long expo = sort_and_n(all).second + idx.size();
  return starred.scalar_mul(QtRational::t(1).pow(expo));
}

std::vector<QtRational> expand_in_basis(const VkElem& f,
                                        const std::vector<VkElem>& basis) {
  // coordinates: union of (partition, y-exponent) keys
  std::map<VkElem::Key, int> coords;
  auto note = [&](const VkElem& v) {
    for (const auto& [key, c] : v.terms())
      coords.emplace(key, static_cast<int>(coords.size()));
  };
  note(f);
  for (const VkElem& b : basis) note(b);
  int rows = static_cast<int>(coords.size());
  int cols = static_cast<int>(basis.size());
  std::vector<std::vector<QtRational>> a(
      rows, std::vector<QtRational>(cols + 1, QtRational(0)));
  for (int j = 0; j < cols; ++j)
    for (const auto& [key, c] : basis[j].terms()) a[coords.at(key)][j] = c;
  for (const auto& [key, c] : f.terms()) a[coords.at(key)][cols] = c;

  // exact Gaussian elimination
  std::vector<int> pivot_col(rows, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    QtRational inv = a[rank][col].inverse();
    for (int c = col; c <= cols; ++c) a[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      QtRational fmul = a[r][col];
      for (int c = col; c <= cols; ++c) a[r][c] -= fmul * a[rank][c];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!a[r][cols].is_zero())
      throw MathError("polyrep: expansion system is inconsistent");
  std::vector<QtRational> out(cols, QtRational(0));
  for (int r = 0; r < rank; ++r) out[pivot_col[r]] = a[r][cols];
  // verify uniqueness: every basis column must be a pivot or unused
  for (int j = 0; j < cols; ++j) {
    bool used = false;
    for (int r = 0; r < rank; ++r) used |= pivot_col[r] == j;
    if (!used) {
      // column j never entered a pivot; acceptable only if its coefficient
      // is forced to zero (basis independent of the solution)
      bool appears = !basis[j].is_zero();
      if (appears) {
        // re-check solvability without this column was already implied;
        // a genuinely dependent spanning set would make the solution
        // non-unique, which we refuse.
        throw MathError("polyrep: expansion is not unique");
      }
    }
  }
  return out;
}

}  // namespace macd
