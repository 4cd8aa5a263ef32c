#ifndef MACD_SHAPES_HPP
#define MACD_SHAPES_HPP

#include <string>
#include <utility>
#include <vector>

#include "macd/qt.hpp"

namespace macd {

// A composition is a finite tuple of nonnegative integers, possibly with
// zeros. Its diagram dg(nu) has columns of heights nu_i; box (i, j) sits in
// column i (1-based) at height j (1-based).
using Composition = std::vector<int>;

int comp_size(const Composition& nu);
bool is_partition(const Composition& nu);
Composition sorted_desc(Composition nu);
Composition sorted_asc(Composition nu);

// n(nu) = sum_i (i-1) nu_i.
long n_stat(const Composition& nu);

// (sort(nu), n(sort(nu))).
std::pair<Composition, long> sort_and_n(const Composition& nu);

// 1-based box of a composition diagram.
struct DiagBox {
  int col = 0;
  int row = 0;
};

enum class ArmVariant { plain, tilde };

// l_nu(box) = nu_i - j.
int leg(const Composition& nu, DiagBox box);

// a: #{r<i : j <= nu_r <= nu_i} + #{r>i : j-1 <= nu_r < nu_i}
// a~: #{r<i : j <= nu_r <= nu_i} + #{r>i : j   <= nu_r < nu_i}
int arm(const Composition& nu, DiagBox box, ArmVariant variant);

// l'_nu(i) = #{j<i : nu_j > nu_i} + #{j>i : nu_j >= nu_i}; entry i of the
// spectral vector is the monomial q^{nu_i} t^{-l'_nu(i)}.
int coleg(const Composition& nu, int i);
std::vector<std::pair<int, int>> spectral_vector(const Composition& nu);
QtRational spectral_value(const Composition& nu, int i);

// Cyclic shift: entries outside I fixed, the entry at t_k takes the value
// from t_{k+1}, and the entry at t_r becomes lambda_{t_1} + 1. I is 1-based,
// strictly increasing and nonempty.
Composition c_shift(const Composition& lambda, const std::vector<int>& I);

// Index (lambda | gamma): lambda a partition padded with zeros to m slots,
// gamma a composition of length k.
struct SplitIndex {
  Composition lambda;  // weakly decreasing, may end in zeros
  Composition gamma;
  int m = 0;

  SplitIndex() = default;
  SplitIndex(Composition lam, Composition gam, int m_slots);

  int k() const { return static_cast<int>(gamma.size()); }
  int n() const { return m + k(); }
  int size() const { return comp_size(lambda) + comp_size(gamma); }

  // lambda padded to m entries.
  Composition padded_lambda() const;
  // (lambda | gamma) as one composition of length n.
  Composition combined() const;
  // (lambda^- | gamma) with the symmetric block weakly increasing.
  Composition combined_asc() const;
  // A copy with the same gamma and lambda re-padded to m slots.
  SplitIndex with_m(int m_slots) const;
  // Key with zero-stripped lambda; equal indices padded differently agree.
  std::pair<Composition, Composition> key() const;

  bool operator==(const SplitIndex& o) const { return key() == o.key(); }
  bool operator<(const SplitIndex& o) const { return key() < o.key(); }

  std::string str() const;
};

// j_{(lambda|gamma)}: product over the symmetric boxes of
// (1 - q^{l} t^{a~+1}) and over the gamma boxes of (1 - q^{l+1} t^{a+1}),
// all statistics in dg(lambda^- | gamma).
QtRational j_scalar(const SplitIndex& idx);

// 0-based plane box at column c, row r; its torus weight is q^r t^c.
struct PlaneBox {
  int c = 0;
  int r = 0;

  friend bool operator==(const PlaneBox&, const PlaneBox&) = default;
  friend auto operator<=>(const PlaneBox&, const PlaneBox&) = default;
};

QtRational box_weight(const PlaneBox& b);

// A partition xi (row lengths, French convention) together with an ordered
// horizontal strip w of removable boxes: removing w_1, w_2, ... in order
// always removes a corner, and the w-columns are pairwise distinct.
struct FixedPointLabel {
  Composition xi;
  std::vector<PlaneBox> w;

  int k() const { return static_cast<int>(w.size()); }
  bool valid() const;
  std::vector<QtRational> w_weights() const;

  bool operator==(const FixedPointLabel& o) const;
  bool operator<(const FixedPointLabel& o) const;

  std::string str() const;
};

// Transpose of a partition.
Composition transpose(const Composition& xi);

// All addable corners of dg'(xi) as 0-based plane boxes.
std::vector<PlaneBox> addable_boxes(const Composition& xi);
Composition add_box(const Composition& xi, const PlaneBox& b);

// Column heights of dg'(xi), indexed by 0-based column.
std::vector<int> column_heights(const Composition& xi);

// The bijection between fixed-point labels and split indices.
SplitIndex phi(const FixedPointLabel& fp);
FixedPointLabel phi_inverse(const SplitIndex& idx);

// All fixed-point labels with |xi| = size and strip length k.
std::vector<FixedPointLabel> all_fixed_points(int size, int k);
// All partitions of given size.
std::vector<Composition> partitions_of(int size);
// All compositions of given size and length.
std::vector<Composition> compositions_of(int size, int length);

// Text parsing for the CLI: comma-separated integers; empty string is the
// empty composition.
Composition parse_composition(const std::string& text);
// w entries either "(c,r)" pairs or monomials "q^r*t^c".
std::vector<PlaneBox> parse_strip(const std::string& text);
std::string composition_str(const Composition& nu);

}  // namespace macd

#endif  // MACD_SHAPES_HPP
