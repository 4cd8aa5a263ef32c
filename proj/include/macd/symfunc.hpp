#ifndef MACD_SYMFUNC_HPP
#define MACD_SYMFUNC_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macd/shapes.hpp"
#include "macd/xpoly.hpp"

namespace macd {

struct DegreeOverflow : MathError {
  explicit DegreeOverflow(const std::string& what) : MathError(what) {}
};

enum class SymBasis { monomial, powersum, elementary };

// Truncated symmetric function over Q(q,t): coefficients on basis elements
// indexed by partitions of size at most the degree bound D.
class SymFunc {
 public:
  using CoeffMap = std::map<Composition, QtRational>;

  SymFunc() = default;
  SymFunc(int degree_bound, SymBasis basis)
      : d_(degree_bound), basis_(basis) {}

  static SymFunc zero(int D, SymBasis basis = SymBasis::monomial);
  static SymFunc constant(int D, QtRational c,
                          SymBasis basis = SymBasis::monomial);
  static SymFunc basis_element(int D, SymBasis basis, Composition partition,
                               QtRational c = QtRational(1));
  static SymFunc e_k(int D, int k);
  static SymFunc p_k(int D, int k);

  int degree_bound() const { return d_; }
  SymBasis basis() const { return basis_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(Composition partition, const QtRational& c);

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  bool operator==(const SymFunc& o) const;

  SymFunc scalar_mul(const QtRational& c) const;
  SymFunc convert(SymBasis target) const;

  // Multiplies the coefficient structure in the powersum basis so each
  // p_i-letter picks up rule(i); returns in the original basis.
  SymFunc alphabet_scale(const std::function<QtRational(int)>& rule) const;

  // Expansion in v variables.
  XPoly specialize(int v) const;

  std::string str() const;

 private:
  int d_ = 0;
  SymBasis basis_ = SymBasis::monomial;
  CoeffMap coeffs_;
};

// The unique symmetric function of degree <= D restricting to f, which must
// be symmetric in all of its m >= D variables.
SymFunc from_finite_variables(const XPoly& f, int D);

// Element of Lambda tensor K[y_1..y_k], x-part held in the monomial basis.
class VkElem {
 public:
  using Key = std::pair<Composition, ExpVec>;
  using TermMap = std::map<Key, QtRational>;

  VkElem() = default;
  VkElem(int k, int D) : k_(k), d_(D) {}

  static VkElem constant(int k, int D, QtRational c);
  static VkElem from_symfunc(const SymFunc& f, int k);

  int k() const { return k_; }
  int degree_bound() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Composition& partition, const ExpVec& yexp,
                const QtRational& c);

  VkElem operator+(const VkElem& o) const;
  VkElem operator-(const VkElem& o) const;
  bool operator==(const VkElem& o) const;

  VkElem scalar_mul(const QtRational& c) const;
  VkElem mul_y(int i) const;               // multiply by y_i
  VkElem mul_symfunc(const SymFunc& s) const;
  VkElem star_coeffs() const;
  VkElem alphabet_scale(const std::function<QtRational(int)>& rule) const;

  // p_i |-> p_i +/- (t^i - 1) y_slot^i; for the plus shift intended for a
  // new variable, pass k+1 as slot and the result lives in V_{k+1}.
  VkElem alphabet_shift(bool plus, int slot) const;

  // Pairs the y_{k}-components of *this with elementary symmetric functions:
  // sum_j (-1)^j e_{j+1} G_j where G_j is the y_k^j part. Result in V_{k-1}.
  VkElem omega_extract() const;

  // y-block operators. sf_t is the Carlsson-Mellit T_i; dl_t is the
  // Demazure-Lusztig T_i acting in the y variables.
  VkElem sf_t(int i) const;
  VkElem sf_t_inverse(int i) const;
  VkElem dl_t(int i) const;
  VkElem dl_t_inverse(int i) const;
  VkElem permute_y(const std::vector<int>& sigma) const;

  std::string str() const;

 private:
  // Gathers terms by x-partition into y-polynomials, applies fn, scatters.
  VkElem map_y_polys(const std::function<XPoly(const XPoly&)>& fn) const;

  int k_ = 0;
  int d_ = 0;
  TermMap terms_;
};

}  // namespace macd

#endif  // MACD_SYMFUNC_HPP
