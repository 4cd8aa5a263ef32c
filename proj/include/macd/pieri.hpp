#ifndef MACD_PIERI_HPP
#define MACD_PIERI_HPP

#include <optional>
#include <vector>

#include "macd/fixed_points.hpp"
#include "macd/partial_sym.hpp"
#include "macd/shapes.hpp"

namespace macd {

// Data attached to one target of the e_1 expansion of J_{(lambda|gamma)}.
struct PieriDatum {
  SplitIndex source;
  SplitIndex target;
  int chosen_value = 0;         // the lambda entry fed into the cycle
  std::vector<int> I1;          // 1-based positions in [1, k], may be empty
  Composition eta;              // cycled gamma
  Composition mu_tilde;         // rearranged target symmetric part
  Composition lambda_tilde;     // rearranged source symmetric part
  int h = 0;                    // first position of the new column in mu_tilde
};

// All targets (mu | eta) of e_1 J_src with their construction data; one
// entry per target, built from the unique maximal I1.
std::vector<PieriDatum> enumerate_support(const SplitIndex& src, int n);

// Closed-form coefficient of J_target in e_1 J_src.
QtRational coefficient_A(const PieriDatum& datum);

// p~_{I1}: the coefficient the T-inverse word contributes on the summand
// labeled by I1, in terms of the weights x and w of the geometric side.
QtRational p_tilde(const QtRational& x, const std::vector<QtRational>& w,
                   const std::vector<int>& I1);

// Geometric chain coefficient of H_{xi+x, (v(xw))'} in
// (d_- T_k^{-1} ... T_1^{-1} d_+) H_{xi, w}, computed by the closed
// row/column product formula.
QtRational coefficient_C_closed(const FixedPointLabel& src_label,
                                const PlaneBox& x, const std::vector<int>& I1);

// Same coefficient by literal operator composition.
QtRational coefficient_C_operator(const FixedPointLabel& src_label,
                                  const FixedPointLabel& target_label);

// The geometric target label reached from (xi, w) by adding x and applying
// the swaps outside I1, dropping the last entry.
FixedPointLabel pieri_target_label(const FixedPointLabel& src_label,
                                   const PlaneBox& x,
                                   const std::vector<int>& I1);

struct MatchReport {
  SplitIndex source;
  SplitIndex target;
  QtRational A;            // closed-form Pieri coefficient
  QtRational C_closed;     // geometric coefficient, closed formula
  QtRational C_operator;   // geometric coefficient, literal composition
  int c_r_column = 0;      // column index of w_{t_r} (or of x when I1 empty)
  long c_r_nstat = 0;      // n(sort(mu,eta)) - n(sort(lambda,gamma))
  bool c_r_consistent = false;
  bool matched = false;    // C == [t^{c_r} A (1-t)]^*
};

// Evaluates Theorem-style matching for one support target.
MatchReport match_check(const PieriDatum& datum);

// Independent oracle: expands e_1(x_1..x_m) J_src exactly in the J basis
// over all candidate targets of the right degree.
std::vector<std::pair<SplitIndex, QtRational>> brute_force_expand(
    const SplitIndex& src, int n);

// All split indices with |lambda|+|gamma| = total and k nonsymmetric slots.
std::vector<SplitIndex> all_split_indices(int total, int k);

}  // namespace macd

#endif  // MACD_PIERI_HPP
