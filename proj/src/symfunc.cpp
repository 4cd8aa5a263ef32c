#include "macd/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace macd {

namespace {

Composition normalize_partition(Composition p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Transition tables per homogeneous degree: expansions of p_lambda and
// e_lambda in the monomial basis and their inverses.
struct DegreeTables {
  std::vector<Composition> parts;
  std::map<Composition, int> index;
  // to_m[i] = expansion of basis element i in the monomial basis
  std::vector<std::map<Composition, QtRational>> p_to_m;
  std::vector<std::map<Composition, QtRational>> e_to_m;
  // from_m[j] = expansion of m_j in the p / e basis
  std::vector<std::map<Composition, QtRational>> m_to_p;
  std::vector<std::map<Composition, QtRational>> m_to_e;
};

XPoly expand_pk(int k, int v) {
  XPoly out(v);
  for (int i = 1; i <= v; ++i) {
    ExpVec e(v, 0);
    e[i - 1] = k;
    out.add_term(e, QtRational(1));
  }
  return out;
}

XPoly expand_ek(int k, int v) {
  XPoly out(v);
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      ExpVec e(v, 0);
      for (int i : idx) e[i] = 1;
      out.add_term(e, QtRational(1));
      return;
    }
    for (int i = start; i < v; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (k <= v) rec(rec, 0, 0);
  return out;
}

std::map<Composition, QtRational> monomial_coeffs(const XPoly& f) {
  std::map<Composition, QtRational> out;
  for (const auto& [e, c] : f.terms()) {
    bool sorted = std::is_sorted(e.begin(), e.end(), std::greater<int>());
    if (!sorted) continue;
    Composition p(e.begin(), e.end());
    while (!p.empty() && p.back() == 0) p.pop_back();
    out[p] = c;
  }
  return out;
}

// Solves for the inverse transition: expansions of m_j in the given basis.
std::vector<std::map<Composition, QtRational>> invert_to_m(
    const std::vector<Composition>& parts,
    const std::vector<std::map<Composition, QtRational>>& to_m) {
  int n = static_cast<int>(parts.size());
  // dense matrix A[i][j] = coefficient of m_{parts[j]} in basis element i
  std::vector<std::vector<QtRational>> a(
      n, std::vector<QtRational>(2 * n, QtRational(0)));
  std::map<Composition, int> index;
  for (int j = 0; j < n; ++j) index[parts[j]] = j;
  for (int i = 0; i < n; ++i) {
    for (const auto& [p, c] : to_m[i]) a[i].at(index.at(p)) = c;
    a[i][n + i] = QtRational(1);
  }
  // Gauss-Jordan over the exact field
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw InternalError("symfunc: singular transition matrix");
    std::swap(a[col], a[pivot]);
    QtRational inv = a[col][col].inverse();
    for (int c = 0; c < 2 * n; ++c) a[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QtRational f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  // With basis = A m as function vectors, m = A^{-1} basis, so
  // m_{parts[j]} = sum_i inv[j][i] basis_i.
  std::vector<std::map<Composition, QtRational>> out(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const QtRational& c = a[j][n + i];
      if (!c.is_zero()) out[j][parts[i]] = c;
    }
  return out;
}

std::map<int, DegreeTables> table_cache;
std::shared_mutex table_mutex;

const DegreeTables& tables_for_degree(int d) {
  {
    std::shared_lock lock(table_mutex);
    auto it = table_cache.find(d);
    if (it != table_cache.end()) return it->second;
  }
  DegreeTables t;
  t.parts = partitions_of(d);
  std::sort(t.parts.begin(), t.parts.end());
  for (int i = 0; i < static_cast<int>(t.parts.size()); ++i)
    t.index[t.parts[i]] = i;
  int v = std::max(d, 1);
  for (const Composition& lam : t.parts) {
    XPoly prod_p = XPoly::constant(v, QtRational(1));
    XPoly prod_e = XPoly::constant(v, QtRational(1));
    for (int part : lam) {
      prod_p = prod_p * expand_pk(part, v);
      prod_e = prod_e * expand_ek(part, v);
    }
    t.p_to_m.push_back(monomial_coeffs(prod_p));
    t.e_to_m.push_back(monomial_coeffs(prod_e));
  }
  t.m_to_p = invert_to_m(t.parts, t.p_to_m);
  t.m_to_e = invert_to_m(t.parts, t.e_to_m);
  std::unique_lock lock(table_mutex);
  auto [it, inserted] = table_cache.emplace(d, std::move(t));
  return it->second;
}

}  // namespace

SymFunc SymFunc::zero(int D, SymBasis basis) { return SymFunc(D, basis); }

SymFunc SymFunc::constant(int D, QtRational c, SymBasis basis) {
  SymFunc f(D, basis);
  f.add_term({}, c);
  return f;
}

SymFunc SymFunc::basis_element(int D, SymBasis basis, Composition partition,
                               QtRational c) {
  SymFunc f(D, basis);
  f.add_term(std::move(partition), c);
  return f;
}

SymFunc SymFunc::e_k(int D, int k) {
  return basis_element(D, SymBasis::elementary, k == 0 ? Composition{} : Composition{k});
}

SymFunc SymFunc::p_k(int D, int k) {
  return basis_element(D, SymBasis::powersum, k == 0 ? Composition{} : Composition{k});
}

void SymFunc::add_term(Composition partition, const QtRational& c) {
  partition = normalize_partition(std::move(partition));
  if (comp_size(partition) > d_)
    throw DegreeOverflow("symfunc: degree bound " + std::to_string(d_) +
                         " exceeded; rerun with a larger bound");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(std::move(partition), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc other = o.basis() == basis_ ? o : o.convert(basis_);
  SymFunc out = *this;
  for (const auto& [p, c] : other.coeffs_) out.add_term(p, c);
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  return *this + o.scalar_mul(QtRational(-1));
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc a = convert(SymBasis::powersum);
  SymFunc b = o.convert(SymBasis::powersum);
  SymFunc out(d_, SymBasis::powersum);
  for (const auto& [p1, c1] : a.coeffs_) {
    for (const auto& [p2, c2] : b.coeffs_) {
      Composition merged = p1;
      merged.insert(merged.end(), p2.begin(), p2.end());
      out.add_term(std::move(merged), c1 * c2);
    }
  }
  return out.convert(basis_);
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (basis_ == o.basis_) return coeffs_ == o.coeffs_;
  return coeffs_ == o.convert(basis_).coeffs();
}

SymFunc SymFunc::scalar_mul(const QtRational& c) const {
  SymFunc out(d_, basis_);
  if (c.is_zero()) return out;
  for (const auto& [p, co] : coeffs_) out.coeffs_[p] = co * c;
  return out;
}

SymFunc SymFunc::convert(SymBasis target) const {
  if (target == basis_) return *this;
  SymFunc out(d_, target);
  for (const auto& [lam, c] : coeffs_) {
    int d = comp_size(lam);
    const DegreeTables& t = tables_for_degree(d);
    int i = t.index.at(lam);
    auto emit = [&](const std::map<Composition, QtRational>& expansion) {
      for (const auto& [p, x] : expansion) out.add_term(p, c * x);
    };
    if (basis_ == SymBasis::monomial) {
      emit(target == SymBasis::powersum ? t.m_to_p[i] : t.m_to_e[i]);
    } else if (target == SymBasis::monomial) {
      emit(basis_ == SymBasis::powersum ? t.p_to_m[i] : t.e_to_m[i]);
    } else {
      // via the monomial basis
      const auto& to_m = basis_ == SymBasis::powersum ? t.p_to_m[i] : t.e_to_m[i];
      for (const auto& [p, x] : to_m) {
        int j = t.index.at(p);
        const auto& from_m =
            target == SymBasis::powersum ? t.m_to_p[j] : t.m_to_e[j];
        for (const auto& [pp, y] : from_m) out.add_term(pp, c * x * y);
      }
    }
  }
  return out;
}

SymFunc SymFunc::alphabet_scale(
    const std::function<QtRational(int)>& rule) const {
  SymFunc p = convert(SymBasis::powersum);
  SymFunc out(d_, SymBasis::powersum);
  for (const auto& [lam, c] : p.coeffs()) {
    QtRational factor(1);
    for (int part : lam) factor *= rule(part);
    out.add_term(lam, c * factor);
  }
  return out.convert(basis_);
}

XPoly SymFunc::specialize(int v) const {
  SymFunc m = convert(SymBasis::monomial);
  XPoly out(v);
  for (const auto& [lam, c] : m.coeffs()) {
    if (static_cast<int>(lam.size()) > v)
      continue;  // monomial basis elements vanish with too few variables
    ExpVec padded(lam.begin(), lam.end());
    padded.resize(v, 0);
    std::sort(padded.begin(), padded.end());
    do {
      out.add_term(padded, c);
    } while (std::next_permutation(padded.begin(), padded.end()));
  }
  return out;
}

std::string SymFunc::str() const {
  std::ostringstream os;
  const char* tag = basis_ == SymBasis::monomial   ? "m"
                    : basis_ == SymBasis::powersum ? "p"
                                                   : "e";
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << tag << "[" << composition_str(p) << "]";
  }
  return first ? "0" : os.str();
}

SymFunc from_finite_variables(const XPoly& f, int D) {
  int m = f.var_count();
  if (m < D)
    throw MathError("symfunc: need at least D variables for a unique lift");
  if (f.total_degree() > D)
    throw DegreeOverflow("symfunc: polynomial degree exceeds the bound");
  for (int i = 1; i < m; ++i)
    if (!(f.swap_variables(i, i + 1) == f))
      throw MathError("symfunc: input is not symmetric");
  SymFunc out(D, SymBasis::monomial);
  for (const auto& [p, c] : monomial_coeffs(f)) out.add_term(p, c);
  return out;
}

VkElem VkElem::constant(int k, int D, QtRational c) {
  VkElem v(k, D);
  v.add_term({}, ExpVec(k, 0), c);
  return v;
}

VkElem VkElem::from_symfunc(const SymFunc& f, int k) {
  VkElem v(k, f.degree_bound());
  SymFunc m = f.convert(SymBasis::monomial);
  for (const auto& [p, c] : m.coeffs()) v.add_term(p, ExpVec(k, 0), c);
  return v;
}

void VkElem::add_term(const Composition& partition, const ExpVec& yexp,
                      const QtRational& c) {
  if (static_cast<int>(yexp.size()) != k_)
    throw MathError("vk: y-exponent length mismatch");
  Composition p = normalize_partition(partition);
  if (comp_size(p) > d_)
    throw DegreeOverflow("vk: x-degree bound " + std::to_string(d_) +
                         " exceeded; rerun with a larger bound");
  if (c.is_zero()) return;
  Key key{std::move(p), yexp};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VkElem VkElem::operator+(const VkElem& o) const {
  if (k_ != o.k_) throw MathError("vk: mixing different y-counts");
  VkElem out = *this;
  for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
  return out;
}

VkElem VkElem::operator-(const VkElem& o) const {
  return *this + o.scalar_mul(QtRational(-1));
}

bool VkElem::operator==(const VkElem& o) const {
  return k_ == o.k_ && terms_ == o.terms_;
}

VkElem VkElem::scalar_mul(const QtRational& c) const {
  VkElem out(k_, d_);
  if (c.is_zero()) return out;
  for (const auto& [key, co] : terms_) out.terms_[key] = co * c;
  return out;
}

VkElem VkElem::mul_y(int i) const {
  if (i < 1 || i > k_) throw MathError("vk: y index out of range");
  VkElem out(k_, d_);
  for (const auto& [key, c] : terms_) {
    ExpVec y = key.second;
    y[i - 1] += 1;
    out.terms_[Key{key.first, std::move(y)}] = c;
  }
  return out;
}

VkElem VkElem::mul_symfunc(const SymFunc& s) const {
  VkElem out(k_, d_);
  for (const auto& [key, c] : terms_) {
    SymFunc part = SymFunc::basis_element(d_, SymBasis::monomial, key.first, c);
    SymFunc prod = (part * s).convert(SymBasis::monomial);
    for (const auto& [p, x] : prod.coeffs()) out.add_term(p, key.second, x);
  }
  return out;
}

VkElem VkElem::star_coeffs() const {
  VkElem out(k_, d_);
  for (const auto& [key, c] : terms_) out.terms_[key] = c.star();
  return out;
}

VkElem VkElem::alphabet_scale(
    const std::function<QtRational(int)>& rule) const {
  // convert x-parts to the powersum basis, scale diagonally, convert back
  std::map<ExpVec, SymFunc> by_y;
  for (const auto& [key, c] : terms_) {
    auto it = by_y.find(key.second);
    if (it == by_y.end())
      it = by_y.emplace(key.second, SymFunc(d_, SymBasis::monomial)).first;
    it->second.add_term(key.first, c);
  }
  VkElem out(k_, d_);
  for (const auto& [y, f] : by_y) {
    SymFunc scaled = f.alphabet_scale(rule).convert(SymBasis::monomial);
    for (const auto& [p, c] : scaled.coeffs()) out.add_term(p, y, c);
  }
  return out;
}

VkElem VkElem::alphabet_shift(bool plus, int slot) const {
  int kk = std::max(k_, slot);
  VkElem out(kk, d_);
  QtRational sign = plus ? QtRational(1) : QtRational(-1);
  for (const auto& [key, c] : terms_) {
    SymFunc f = SymFunc::basis_element(d_, SymBasis::monomial, key.first, c);
    SymFunc p = f.convert(SymBasis::powersum);
    for (const auto& [lam, co] : p.coeffs()) {
      // expand the product over parts of (p_i +/- (t^i - 1) y_slot^i)
      int r = static_cast<int>(lam.size());
      for (int mask = 0; mask < (1 << r); ++mask) {
        Composition keep;
        QtRational factor = co;
        int ydeg = 0;
        for (int b = 0; b < r; ++b) {
          if (mask & (1 << b)) {
            factor *= sign * (QtRational::t(1).pow(lam[b]) - QtRational(1));
            ydeg += lam[b];
          } else {
            keep.push_back(lam[b]);
          }
        }
        ExpVec y = key.second;
        y.resize(kk, 0);
        y[slot - 1] += ydeg;
        SymFunc back = SymFunc::basis_element(d_, SymBasis::powersum,
                                              std::move(keep), factor)
                           .convert(SymBasis::monomial);
        for (const auto& [pmono, cmono] : back.coeffs())
          out.add_term(pmono, y, cmono);
      }
    }
  }
  return out;
}

VkElem VkElem::omega_extract() const {
  if (k_ == 0) throw MathError("vk: no trailing y variable to extract");
  VkElem out(k_ - 1, d_);
  for (const auto& [key, c] : terms_) {
    int j = key.second[k_ - 1];
    ExpVec y(key.second.begin(), key.second.end() - 1);
    int target = comp_size(key.first) + j + 1;
    if (target > d_)
      throw DegreeOverflow(
          "vk: omega pairing needs degree bound at least " +
          std::to_string(target));
    SymFunc part =
        SymFunc::basis_element(d_, SymBasis::monomial, key.first, c);
    SymFunc prod =
        (part * SymFunc::e_k(d_, j + 1)).convert(SymBasis::monomial);
    QtRational sgn = (j % 2 == 0) ? QtRational(1) : QtRational(-1);
    for (const auto& [p, x] : prod.coeffs()) out.add_term(p, y, x * sgn);
  }
  return out;
}

VkElem VkElem::map_y_polys(
    const std::function<XPoly(const XPoly&)>& fn) const {
  std::map<Composition, XPoly> by_part;
  for (const auto& [key, c] : terms_) {
    auto it = by_part.find(key.first);
    if (it == by_part.end()) it = by_part.emplace(key.first, XPoly(k_)).first;
    it->second.add_term(key.second, c);
  }
  VkElem out(k_, d_);
  for (const auto& [p, poly] : by_part) {
    XPoly mapped = fn(poly);
    for (const auto& [e, c] : mapped.terms()) out.add_term(p, e, c);
  }
  return out;
}

VkElem VkElem::sf_t(int i) const {
  if (i < 1 || i >= k_) throw MathError("vk: T index out of range");
  QtRational t = QtRational::t();
  return map_y_polys([&](const XPoly& f) {
    XPoly sf = f.swap_variables(i, i + 1);
    // ((t-1) y_i f + (y_{i+1} - t y_i) s_i f) / (y_{i+1} - y_i)
    XPoly num = f.mul_variable_power(i, 1).scalar_mul(t - QtRational(1)) +
                sf.mul_variable_power(i + 1, 1) -
                sf.mul_variable_power(i, 1).scalar_mul(t);
    return num.divide_by_var_difference(i, i + 1);
  });
}

VkElem VkElem::sf_t_inverse(int i) const {
  // (T_i - 1)(T_i + t) = 0 gives T_i^{-1} = t^{-1} (T_i + t - 1)
  QtRational t = QtRational::t();
  VkElem out = sf_t(i) + scalar_mul(t - QtRational(1));
  return out.scalar_mul(t.inverse());
}

VkElem VkElem::dl_t(int i) const {
  if (i < 1 || i >= k_) throw MathError("vk: T index out of range");
  QtRational t = QtRational::t();
  return map_y_polys([&](const XPoly& f) {
    XPoly sf = f.swap_variables(i, i + 1);
    XPoly h = (f - sf).divide_by_var_difference(i, i + 1);
    return sf.scalar_mul(t) +
           h.mul_variable_power(i + 1, 1).scalar_mul(t - QtRational(1));
  });
}

VkElem VkElem::dl_t_inverse(int i) const {
  QtRational t = QtRational::t();
  VkElem out = dl_t(i) + scalar_mul(QtRational(1) - t);
  return out.scalar_mul(t.inverse());
}

VkElem VkElem::permute_y(const std::vector<int>& sigma) const {
  return map_y_polys(
      [&](const XPoly& f) { return f.permute_variables(sigma); });
}

std::string VkElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*m[" << composition_str(key.first) << "]*y^("
       << composition_str(Composition(key.second.begin(), key.second.end()))
       << ")";
  }
  return first ? "0" : os.str();
}

}  // namespace macd
