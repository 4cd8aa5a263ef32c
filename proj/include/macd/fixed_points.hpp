#ifndef MACD_FIXED_POINTS_HPP
#define MACD_FIXED_POINTS_HPP

#include <map>

#include "macd/shapes.hpp"

namespace macd {

// Formal Q(q,t)-linear combination of fixed-point labels with a common
// strip length k.
class FpVector {
 public:
  using TermMap = std::map<FixedPointLabel, QtRational>;

  FpVector() = default;
  explicit FpVector(int k) : k_(k) {}
  static FpVector single(const FixedPointLabel& label,
                         QtRational c = QtRational(1));

  int k() const { return k_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QtRational coefficient_of(const FixedPointLabel& label) const;

  void add_term(const FixedPointLabel& label, const QtRational& c);

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector scalar_mul(const QtRational& c) const;
  bool operator==(const FpVector& o) const {
    return k_ == o.k_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  int k_ = 0;
  TermMap terms_;
};

// Macdonald-Pieri coefficient d_{xi+x, xi} for an addable box.
QtRational macdonald_pieri_d(const Composition& xi, const PlaneBox& box);

// Geometric operators on the [I]-basis.
FpVector dplus_geom(const FpVector& v);
FpVector dminus_geom(const FpVector& v);
FpVector tgeom_apply(int i, const FpVector& v, bool inverse);

// Conversion between the [I]-basis and the H-basis
// H_{mu,w} = (-1)^{|mu|} q^{n(mu)} t^{n(mu')} [I_{mu,w}].
QtRational h_scalar(const Composition& xi);
FpVector to_h_basis(const FpVector& v_in_I);
FpVector from_h_basis(const FpVector& v_in_H);

// y_2 = T_1^{-1} (d_+ d_- - d_- d_+)/(t-1) on strip length 2.
FpVector y2_geom(const FpVector& v);

// The full Pieri chain d_- T_k^{-1} ... T_1^{-1} d_+.
FpVector e1_geom_chain(const FpVector& v);

}  // namespace macd

#endif  // MACD_FIXED_POINTS_HPP
