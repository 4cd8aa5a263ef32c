#ifndef MACD_POLYREP_HPP
#define MACD_POLYREP_HPP

#include "macd/partial_sym.hpp"
#include "macd/symfunc.hpp"

namespace macd {

// Operators of the polynomial representation on V = bigoplus_k V_k.
VkElem sfT_apply(int i, const VkElem& f);
VkElem sfT_inverse_apply(int i, const VkElem& f);
VkElem sfY_apply(int i, const VkElem& f);
VkElem dplus_poly(const VkElem& f);
VkElem dminus_poly(const VkElem& f);

// d_- T_k^{-1} ... T_1^{-1} d_+, which must equal multiplication by e_1(X).
VkElem e1_chain(const VkElem& f);
VkElem e1_multiply(const VkElem& f);

// t^{-l(w0)} w0 T_{w0} acting in the y-block with Demazure-Lusztig T's.
VkElem w0_twist(const VkElem& f);

// T_i^* = t (star . T_i . star) and the conjugated operator
// w0 T*_{w0} T*_i (w0 T*_{w0})^{-1}, which agrees with sfT_apply.
VkElem star_t_apply(int i, const VkElem& f);
VkElem star_t_word_w0(const VkElem& f, bool inverse);
VkElem conjugated_star_t(int i, const VkElem& f);

// Lifts a polynomial in m + k variables, symmetric in the first m, to
// Lambda tensor K[y_1..y_k] with degree bound D (requires m >= D).
VkElem lift_partially_symmetric(const XPoly& f, int m, int k, int D);

// Specializes the x-part to m variables; the result has m + k variables.
XPoly specialize_vk(const VkElem& f, int m);

// J_{(lambda|gamma)} as an element of Lambda tensor K[y], built in D
// symmetric variables.
VkElem build_J_vk(const SplitIndex& idx, int D);

// Modified partially-symmetric Macdonald function:
// t^{n(sort(lambda,gamma)) + |lambda|+|gamma|} *
//     (w0-twisted J)(X/(t^{-1}-1) | y) with t -> t^{-1}.
VkElem build_Htilde(const SplitIndex& idx, int D);

// Exact expansion of f in the given spanning set by linear solve; throws if
// the system is singular or inconsistent.
std::vector<QtRational> expand_in_basis(const VkElem& f,
                                        const std::vector<VkElem>& basis);

}  // namespace macd

#endif  // MACD_POLYREP_HPP
