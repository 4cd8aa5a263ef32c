#ifndef MACD_QT_HPP
#define MACD_QT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace macd {

using Int = mpz_class;

struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on violated internal invariants (exactness of a division that the
// theory guarantees, labels that cannot occur, ...). Reaching one of these
// means a formula was transcribed wrong, not that the input was bad.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Exponent pair of a q^a * t^(h/2) monomial. `th` counts half-units of the
// t-exponent, so t itself is {0, 2} and t^(1/2) is {0, 1}.
struct QtExp {
  std::int32_t q = 0;
  std::int32_t th = 0;

  friend bool operator==(const QtExp&, const QtExp&) = default;
};

// Canonical term order: q-exponent descending, then t-exponent descending.
struct QtExpBefore {
  bool operator()(const QtExp& a, const QtExp& b) const {
    if (a.q != b.q) return a.q > b.q;
    return a.th > b.th;
  }
};

// Sparse Laurent polynomial in q and t^(1/2) with Int coefficients.
class QtPoly {
 public:
  using TermMap = std::map<QtExp, Int, QtExpBefore>;

  QtPoly() = default;
  explicit QtPoly(long c) {
    if (c != 0) terms_[QtExp{0, 0}] = c;
  }
  explicit QtPoly(Int c) {
    if (c != 0) terms_[QtExp{0, 0}] = std::move(c);
  }

  static QtPoly monomial(Int c, std::int32_t qe, std::int32_t th) {
    QtPoly p;
    if (c != 0) p.terms_[QtExp{qe, th}] = std::move(c);
    return p;
  }
  static QtPoly q(std::int32_t e = 1) { return monomial(1, e, 0); }
  // t-exponent in half units: t_half(2) == t, t_half(1) == t^(1/2).
  static QtPoly t_half(std::int32_t th) { return monomial(1, 0, th); }
  static QtPoly one() { return QtPoly(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Leading term under the canonical order; poly must be nonzero.
  const std::pair<const QtExp, Int>& leading() const;

  std::int32_t min_q() const;
  std::int32_t min_th() const;
  std::int32_t max_q() const;
  std::int32_t max_th() const;

  void add_term(const QtExp& e, const Int& c);

  QtPoly operator-() const;
  QtPoly operator+(const QtPoly& o) const;
  QtPoly operator-(const QtPoly& o) const;
  QtPoly operator*(const QtPoly& o) const;
  bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }

  QtPoly mul_monomial(const Int& c, std::int32_t qe, std::int32_t th) const;
  QtPoly mul_int(const Int& c) const;

  // t |-> t^{-1}: negates every t-exponent (result is Laurent in general).
  QtPoly star() const;

  // Substitutes t := q^e. Requires every t-exponent to be integral.
  QtPoly substitute_t_q_power(std::int32_t e) const;

  // gcd of all integer coefficients, nonnegative; 0 for the zero poly.
  Int content() const;

  // Exact division; nullopt when `d` does not divide *this. Both operands
  // must have nonnegative exponents.
  std::optional<QtPoly> divided_exactly_by(const QtPoly& d) const;

  // gcd over Z[q, t^(1/2)] including integer content, with positive leading
  // coefficient. Operands must have nonnegative exponents.
  static QtPoly gcd(const QtPoly& a, const QtPoly& b);
  static QtPoly gcd_uncached(const QtPoly& a, const QtPoly& b);

  // Terms joined by "+", each "c*q^a*t^b" with exponent-0 factors omitted and
  // half exponents printed as "t^(p/2)".
  std::string str() const;

 private:
  TermMap terms_;
};

// Exact element of Q(q, t^(1/2)) kept in canonical form: numerator and
// denominator coprime in Z[q,t^(1/2)] (polynomial part, integer content and
// monomial content all reduced), denominator nonzero with positive leading
// coefficient, zero represented as 0/1.
class QtRational {
 public:
  QtRational() : num_(), den_(QtPoly::one()) {}
  QtRational(long c) : num_(QtPoly(c)), den_(QtPoly::one()) {}  // NOLINT
  QtRational(QtPoly n, QtPoly d);
  static QtRational from_poly(QtPoly n);
  static QtRational q(std::int32_t e = 1);
  static QtRational t(std::int32_t e = 1);
  static QtRational t_half(std::int32_t th);
  // c * q^qe * t^(th/2)
  static QtRational monomial(Int c, std::int32_t qe, std::int32_t th);
  static QtRational one_minus(const QtRational& x) { return QtRational(1) - x; }

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // True when the value lies in Z[q,t] (denominator 1, integral nonnegative
  // t-exponents).
  bool is_integral_poly() const;

  QtRational operator+(const QtRational& o) const;
  QtRational operator-(const QtRational& o) const;
  QtRational operator*(const QtRational& o) const;
  QtRational operator/(const QtRational& o) const;
  QtRational operator-() const;
  QtRational& operator+=(const QtRational& o) { return *this = *this + o; }
  QtRational& operator-=(const QtRational& o) { return *this = *this - o; }
  QtRational& operator*=(const QtRational& o) { return *this = *this * o; }
  QtRational& operator/=(const QtRational& o) { return *this = *this / o; }
  bool operator==(const QtRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QtRational& o) const { return !(*this == o); }

  QtRational inverse() const;
  // The involution q |-> q, t |-> t^{-1}.
  QtRational star() const;
  QtRational pow(long e) const;

  // Substitutes t := q^e exactly. Errors if the denominator vanishes at the
  // point (the message names the offending factor) or if a half-integral
  // t-exponent is present.
  QtRational substitute_t_q_power(std::int32_t e) const;

  // Canonical "NUM / DEN" serialization.
  std::string str() const;

 private:
  void canonicalize();

  QtPoly num_;
  QtPoly den_;
};

}  // namespace macd

#endif  // MACD_QT_HPP
