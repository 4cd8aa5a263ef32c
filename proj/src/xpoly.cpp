#include "macd/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macd {

XPoly XPoly::constant(int n, QtRational c) {
  XPoly p(n);
  p.add_term(ExpVec(n, 0), c);
  return p;
}

XPoly XPoly::variable(int n, int i) {
  if (i < 1 || i > n) throw MathError("xpoly: variable index out of range");
  ExpVec e(n, 0);
  e[i - 1] = 1;
  return monomial(n, std::move(e), QtRational(1));
}

XPoly XPoly::monomial(int n, ExpVec e, QtRational c) {
  if (static_cast<int>(e.size()) != n)
    throw MathError("xpoly: exponent vector length mismatch");
  XPoly p(n);
  p.add_term(e, c);
  return p;
}

int XPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void XPoly::add_term(const ExpVec& e, const QtRational& c) {
  if (static_cast<int>(e.size()) != n_)
    throw MathError("xpoly: exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void XPoly::check_same(const XPoly& o) const {
  if (n_ != o.n_) throw MathError("xpoly: variable count mismatch");
}

XPoly XPoly::operator+(const XPoly& o) const {
  check_same(o);
  XPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

XPoly XPoly::operator-(const XPoly& o) const {
  check_same(o);
  XPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

XPoly XPoly::operator-() const {
  XPoly out(n_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

XPoly XPoly::operator*(const XPoly& o) const {
  check_same(o);
  XPoly out(n_);
  ExpVec e(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

XPoly XPoly::scalar_mul(const QtRational& c) const {
  XPoly out(n_);
  if (c.is_zero()) return out;
  for (const auto& [e, co] : terms_) out.terms_[e] = co * c;
  return out;
}

QtRational XPoly::coefficient_of(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QtRational(0) : it->second;
}

XPoly XPoly::permute_variables(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != n_)
    throw MathError("xpoly: permutation length mismatch");
  XPoly out(n_);
  ExpVec f(n_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i) f[sigma[i] - 1] = e[i];
    out.add_term(f, c);
  }
  return out;
}

XPoly XPoly::swap_variables(int i, int j) const {
  XPoly out(n_);
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    std::swap(f[i - 1], f[j - 1]);
    out.add_term(f, c);
  }
  return out;
}

XPoly XPoly::substitute_variable(int i, int j, const QtRational& c) const {
  XPoly out(n_);
  for (const auto& [e, co] : terms_) {
    ExpVec f = e;
    int k = f[i - 1];
    f[i - 1] = 0;
    f[j - 1] += k;
    out.add_term(f, co * c.pow(k));
  }
  return out;
}

XPoly XPoly::set_variable_zero(int i) const {
  XPoly out(n_);
  for (const auto& [e, c] : terms_)
    if (e[i - 1] == 0) out.add_term(e, c);
  return out;
}

XPoly XPoly::restrict_variables(const std::vector<int>& keep) const {
  XPoly out(static_cast<int>(keep.size()));
  std::vector<bool> kept(n_, false);
  for (int i : keep) kept[i - 1] = true;
  ExpVec f(keep.size());
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < n_; ++i)
      if (e[i] != 0 && !kept[i])
        throw MathError("xpoly: dropped variable occurs in a term");
    for (std::size_t k = 0; k < keep.size(); ++k) f[k] = e[keep[k] - 1];
    out.add_term(f, c);
  }
  return out;
}

XPoly XPoly::mul_variable_power(int i, int k) const {
  XPoly out(n_);
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    f[i - 1] += k;
    out.terms_[f] = c;
  }
  return out;
}

QtRational XPoly::evaluate_monomials(const std::vector<QtExp>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw MathError("xpoly: evaluation point length mismatch");
  QtRational acc(0);
  for (const auto& [e, c] : terms_) {
    std::int32_t qe = 0, th = 0;
    for (int i = 0; i < n_; ++i) {
      qe += point[i].q * e[i];
      th += point[i].th * e[i];
    }
    acc += c * QtRational::monomial(1, qe, th);
  }
  return acc;
}

XPoly XPoly::divide_by_var_difference(int i, int j) const {
  // Synthetic division by (x_j - x_i), viewing the polynomial in x_j with
  // coefficients in the remaining variables.
  if (i == j) throw MathError("xpoly: degenerate variable difference");
  std::map<int, XPoly> by_deg;  // x_j-degree -> coefficient poly (x_j-free)
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    int d = f[j - 1];
    f[j - 1] = 0;
    auto it = by_deg.find(d);
    if (it == by_deg.end()) it = by_deg.emplace(d, XPoly(n_)).first;
    it->second.add_term(f, c);
  }
  if (by_deg.empty()) return XPoly(n_);
  int dmax = by_deg.rbegin()->first;
  XPoly out(n_);
  XPoly carry(n_);  // quotient coefficient for the current degree
  for (int d = dmax; d >= 1; --d) {
    auto it = by_deg.find(d);
    XPoly cd = it == by_deg.end() ? XPoly(n_) : it->second;
    carry = carry.mul_variable_power(i, 1) + cd;
    out = out + carry.mul_variable_power(j, d - 1);
  }
  auto it0 = by_deg.find(0);
  XPoly rem = carry.mul_variable_power(i, 1) + (it0 == by_deg.end() ? XPoly(n_) : it0->second);
  if (!rem.is_zero())
    throw InternalError("xpoly: division by variable difference is not exact");
  return out;
}

std::string XPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << i + 1;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace macd
