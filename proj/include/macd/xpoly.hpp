#ifndef MACD_XPOLY_HPP
#define MACD_XPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "macd/qt.hpp"

namespace macd {

using ExpVec = std::vector<std::int32_t>;

// Sparse polynomial in x_1..x_n over Q(q, t^(1/2)). Exponent vectors all have
// length n and no stored coefficient is zero.
class XPoly {
 public:
  using TermMap = std::map<ExpVec, QtRational, std::greater<ExpVec>>;

  XPoly() : n_(0) {}
  explicit XPoly(int n) : n_(n) {}
  static XPoly constant(int n, QtRational c);
  static XPoly variable(int n, int i);  // x_i, 1-based
  static XPoly monomial(int n, ExpVec e, QtRational c);

  int var_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;

  void add_term(const ExpVec& e, const QtRational& c);

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly operator-() const;
  bool operator==(const XPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  XPoly scalar_mul(const QtRational& c) const;
  QtRational coefficient_of(const ExpVec& e) const;

  // Applies a permutation of the variables: the result's coefficient at
  // sigma(e) equals this->coefficient_of(e). sigma maps 1-based positions.
  XPoly permute_variables(const std::vector<int>& sigma) const;
  XPoly swap_variables(int i, int j) const;

  // x_i |-> c * x_j (a monomial times a single variable).
  XPoly substitute_variable(int i, int j, const QtRational& c) const;

  // x_i |-> 0.
  XPoly set_variable_zero(int i) const;

  // Keeps only the given 1-based positions, in order; every dropped variable
  // must be absent from all terms.
  XPoly restrict_variables(const std::vector<int>& keep) const;

  // Multiplies every term by x_i^k.
  XPoly mul_variable_power(int i, int k) const;

  // Evaluates with x_i := q^{qe[i]} t^{th[i]/2}.
  QtRational evaluate_monomials(const std::vector<QtExp>& point) const;

  // Quotient of *this by (x_j - x_i); the division must be exact and aborts
  // loudly otherwise.
  XPoly divide_by_var_difference(int i, int j) const;

  std::string str() const;

 private:
  void check_same(const XPoly& o) const;

  int n_;
  TermMap terms_;
};

}  // namespace macd

#endif  // MACD_XPOLY_HPP
