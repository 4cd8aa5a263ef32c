#include "macd/fixed_points.hpp"

#include <sstream>

namespace macd {

FpVector FpVector::single(const FixedPointLabel& label, QtRational c) {
  FpVector v(label.k());
  v.add_term(label, c);
  return v;
}

QtRational FpVector::coefficient_of(const FixedPointLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? QtRational(0) : it->second;
}

void FpVector::add_term(const FixedPointLabel& label, const QtRational& c) {
  if (label.k() != k_) throw MathError("fp: strip length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FpVector FpVector::operator+(const FpVector& o) const {
  if (k_ != o.k_) throw MathError("fp: strip length mismatch");
  FpVector out = *this;
  for (const auto& [l, c] : o.terms_) out.add_term(l, c);
  return out;
}

FpVector FpVector::operator-(const FpVector& o) const {
  return *this + o.scalar_mul(QtRational(-1));
}

FpVector FpVector::scalar_mul(const QtRational& c) const {
  FpVector out(k_);
  if (c.is_zero()) return out;
  for (const auto& [l, co] : terms_) out.terms_[l] = co * c;
  return out;
}

std::string FpVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << l.str();
  }
  return os.str();
}

QtRational macdonald_pieri_d(const Composition& xi, const PlaneBox& box) {
  add_box(xi, box);  // validates addability
  std::vector<int> heights = column_heights(xi);
  auto arm_leg = [&](int c, int r) {
    int armv = xi[r] - c - 1;
    int legv = heights[c] - r - 1;
    return std::pair<int, int>{armv, legv};
  };
  QtRational out(1);
  // boxes of xi in the row of the added corner
  if (box.r < static_cast<int>(xi.size())) {
    for (int c = 0; c < xi[box.r]; ++c) {
      auto [armv, legv] = arm_leg(c, box.r);
      QtRational num = QtRational::t(armv) - QtRational::q(legv + 1);
      QtRational den = QtRational::t(armv + 1) - QtRational::q(legv + 1);
      out *= num / den;
    }
  }
  // boxes of xi in the column of the added corner
  if (box.c < static_cast<int>(heights.size())) {
    for (int r = 0; r < heights[box.c]; ++r) {
      auto [armv, legv] = arm_leg(box.c, r);
      QtRational num = QtRational::t(armv + 1) - QtRational::q(legv);
      QtRational den = QtRational::t(armv + 1) - QtRational::q(legv + 1);
      out *= num / den;
    }
  }
  return out;
}

FpVector dplus_geom(const FpVector& v) {
  int k = v.k();
  FpVector out(k + 1);
  QtRational minus_tk = -QtRational::t(1).pow(k);
  for (const auto& [label, coeff] : v.terms()) {
    std::vector<QtRational> ws = label.w_weights();
    for (const PlaneBox& box : addable_boxes(label.xi)) {
      QtRational x = box_weight(box);
      QtRational factor(1);
      bool vanished = false;
      for (const QtRational& w : ws) {
        QtRational num = x - QtRational::q() * w;
        if (num.is_zero()) {
          vanished = true;
          break;
        }
        QtRational den = x - QtRational::q() * QtRational::t() * w;
        if (den.is_zero())
          throw InternalError("fp: vanishing denominator in d_plus");
        factor *= num / den;
      }
      if (vanished) continue;
      FixedPointLabel target;
      target.xi = add_box(label.xi, box);
      target.w.push_back(box);
      target.w.insert(target.w.end(), label.w.begin(), label.w.end());
      QtRational c =
          minus_tk * x * macdonald_pieri_d(label.xi, box) * factor * coeff;
      if (!target.valid())
        throw InternalError("fp: d_plus emitted an invalid label " +
                            target.str());
      out.add_term(target, c);
    }
  }
  return out;
}

FpVector dminus_geom(const FpVector& v) {
  if (v.k() == 0) throw MathError("fp: d_minus needs a strip");
  FpVector out(v.k() - 1);
  for (const auto& [label, coeff] : v.terms()) {
    FixedPointLabel target;
    target.xi = label.xi;
    target.w.assign(label.w.begin(), label.w.end() - 1);
    out.add_term(target, coeff);
  }
  return out;
}

FpVector tgeom_apply(int i, const FpVector& v, bool inverse) {
  int k = v.k();
  if (i < 1 || i >= k) throw MathError("fp: T index out of range");
  QtRational t = QtRational::t();
  FpVector out(k);
  for (const auto& [label, coeff] : v.terms()) {
    QtRational a = box_weight(label.w[i - 1]);
    QtRational b = box_weight(label.w[i]);
    QtRational diff = a - b;
    QtRational keep, swap;
    if (!inverse) {
      keep = (t - QtRational(1)) * b / diff;
      swap = (a - t * b) / diff;
    } else {
      keep = (QtRational(1) - t.inverse()) * a / diff;
      swap = (t.inverse() * a - b) / diff;
    }
    out.add_term(label, keep * coeff);
    if (swap.is_zero()) continue;
    FixedPointLabel swapped = label;
    std::swap(swapped.w[i - 1], swapped.w[i]);
    if (!swapped.valid())
      throw InternalError("fp: nonzero coefficient on invalid swap " +
                          swapped.str());
    out.add_term(swapped, swap * coeff);
  }
  return out;
}

QtRational h_scalar(const Composition& xi) {
  long sign = comp_size(xi) % 2 == 0 ? 1 : -1;
  return QtRational::monomial(sign, static_cast<std::int32_t>(n_stat(xi)),
                              2 * static_cast<std::int32_t>(n_stat(transpose(xi))));
}

FpVector to_h_basis(const FpVector& v) {
  FpVector out(v.k());
  for (const auto& [label, coeff] : v.terms())
    out.add_term(label, coeff / h_scalar(label.xi));
  return out;
}

FpVector from_h_basis(const FpVector& v) {
  FpVector out(v.k());
  for (const auto& [label, coeff] : v.terms())
    out.add_term(label, coeff * h_scalar(label.xi));
  return out;
}

FpVector y2_geom(const FpVector& v) {
  if (v.k() != 2) throw MathError("fp: y_2 commutator form needs k = 2");
  FpVector comm = dplus_geom(dminus_geom(v)) - dminus_geom(dplus_geom(v));
  FpVector phi = comm.scalar_mul((QtRational::t() - QtRational(1)).inverse());
  return tgeom_apply(1, phi, true);
}

FpVector e1_geom_chain(const FpVector& v) {
  int k = v.k();
  FpVector out = dplus_geom(v);
  for (int i = 1; i <= k; ++i) out = tgeom_apply(i, out, true);
  return dminus_geom(out);
}

}  // namespace macd
