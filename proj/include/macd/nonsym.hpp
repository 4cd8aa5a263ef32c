#ifndef MACD_NONSYM_HPP
#define MACD_NONSYM_HPP

#include <map>
#include <shared_mutex>
#include <vector>

#include "macd/shapes.hpp"
#include "macd/xpoly.hpp"

namespace macd {

// Demazure-Lusztig operator T_i f = t s_i f + (t-1) x_{i+1} (f - s_i f) /
// (x_{i+1} - x_i); the division is exact for every polynomial input.
XPoly dl_apply(int i, const XPoly& f);

// T_i^{-1} = t^{-1} (T_i + 1 - t), from (T_i - t)(T_i + 1) = 0.
XPoly dl_inverse_apply(int i, const XPoly& f);

// T_{i_1} ... T_{i_l} f for a reduced word; errors on non-reduced words.
XPoly t_word_apply(const std::vector<int>& word, const XPoly& f);

// Permutation length and reducedness helpers.
int word_permutation_length(const std::vector<int>& word, int n);

// Nonsymmetric Macdonald polynomial E_nu in len(nu) variables, monic with
// coefficient 1 on x^nu. Memoized; safe for concurrent use.
XPoly compute_E(const Composition& nu);
void clear_E_cache();

struct EvaluationReport {
  QtRational lhs;
  QtRational rhs;
  bool equal = false;
};

// Compares E_lambda(t^{-rho}) with the closed inversion-set product.
EvaluationReport evaluation_check(const Composition& lam);

}  // namespace macd

#endif  // MACD_NONSYM_HPP
