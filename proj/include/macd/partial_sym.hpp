#ifndef MACD_PARTIAL_SYM_HPP
#define MACD_PARTIAL_SYM_HPP

#include <map>

#include "macd/nonsym.hpp"
#include "macd/shapes.hpp"
#include "macd/xpoly.hpp"

namespace macd {

enum class PolyForm { P, J, Jw0 };

struct PartiallySymmetricPoly {
  SplitIndex index;
  int n = 0;
  XPoly body;
  PolyForm form = PolyForm::P;
};

// Sum of T_w over S_m acting on the first m variables, computed through the
// factored chain products; O(m^2) operator applications.
XPoly hecke_symmetrize(const XPoly& f, int m);

// Same sum by direct enumeration over S_m; reference for tests.
XPoly hecke_symmetrize_enumerate(const XPoly& f, int m);

// S_lambda(t): Poincare polynomial of the stabilizer of lambda in S_m.
QtRational stabilizer_poincare(const Composition& padded_lambda);

// P_{(lambda|gamma)} = P^+_m E_{(lambda|gamma)} / S_lambda(t) in n variables.
PartiallySymmetricPoly build_P(const SplitIndex& idx, int n);

// J = j_{(lambda|gamma)} P; every cleared coefficient must lie in Z[q,t].
PartiallySymmetricPoly build_J(const SplitIndex& idx, int n);

struct TjExpansion {
  QtRational swapped;  // coefficient of J_{(lambda | s_i gamma)}
  QtRational same;     // coefficient of J_{(lambda | gamma)}
};

// Action of T_{m+i} on the integral form for gamma_i > gamma_{i+1}.
TjExpansion tj_action(const SplitIndex& idx, int i);

// Compares P_{(lambda,0|gamma)} at m_plus symmetric slots, extra variables
// set to zero, against P at m slots.
bool stability_probe(const SplitIndex& idx, int m, int m_plus);

// t^{-l(w0)} w0 T_{w0} acting on the trailing k variables of a
// partially-symmetric polynomial in n variables.
XPoly w0_twist_finite(const XPoly& f, int m, int k);

// True when every coefficient of f lies in Z[q,t].
bool is_integral(const XPoly& f);

}  // namespace macd

#endif  // MACD_PARTIAL_SYM_HPP
