#include "macd/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macd {

int comp_size(const Composition& nu) {
  return std::accumulate(nu.begin(), nu.end(), 0);
}

bool is_partition(const Composition& nu) {
  return std::is_sorted(nu.begin(), nu.end(), std::greater<int>());
}

Composition sorted_desc(Composition nu) {
  std::sort(nu.begin(), nu.end(), std::greater<int>());
  return nu;
}

Composition sorted_asc(Composition nu) {
  std::sort(nu.begin(), nu.end());
  return nu;
}

long n_stat(const Composition& nu) {
  long s = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) s += static_cast<long>(i) * nu[i];
  return s;
}

std::pair<Composition, long> sort_and_n(const Composition& nu) {
  Composition s = sorted_desc(nu);
  long n = n_stat(s);
  return {std::move(s), n};
}

namespace {

void check_box(const Composition& nu, DiagBox box) {
  if (box.col < 1 || box.col > static_cast<int>(nu.size()) || box.row < 1 ||
      box.row > nu[box.col - 1])
    throw MathError("shapes: box outside diagram");
}

}  // namespace

int leg(const Composition& nu, DiagBox box) {
  check_box(nu, box);
  return nu[box.col - 1] - box.row;
}

int arm(const Composition& nu, DiagBox box, ArmVariant variant) {
  check_box(nu, box);
  int i = box.col, j = box.row;
  int vi = nu[i - 1];
  int lo = variant == ArmVariant::plain ? j - 1 : j;
  int count = 0;
  for (int r = 1; r < i; ++r)
    if (j <= nu[r - 1] && nu[r - 1] <= vi) ++count;
  for (int r = i + 1; r <= static_cast<int>(nu.size()); ++r)
    if (lo <= nu[r - 1] && nu[r - 1] < vi) ++count;
  return count;
}

int coleg(const Composition& nu, int i) {
  int count = 0;
  for (int j = 1; j <= static_cast<int>(nu.size()); ++j) {
    if (j < i && nu[j - 1] > nu[i - 1]) ++count;
    if (j > i && nu[j - 1] >= nu[i - 1]) ++count;
  }
  return count;
}

std::vector<std::pair<int, int>> spectral_vector(const Composition& nu) {
  std::vector<std::pair<int, int>> out;
  out.reserve(nu.size());
  for (int i = 1; i <= static_cast<int>(nu.size()); ++i)
    out.emplace_back(nu[i - 1], -coleg(nu, i));
  return out;
}

QtRational spectral_value(const Composition& nu, int i) {
  return QtRational::monomial(1, nu[i - 1], -2 * coleg(nu, i));
}

Composition c_shift(const Composition& lambda, const std::vector<int>& I) {
  if (I.empty()) throw MathError("shapes: empty shift set");
  for (std::size_t u = 0; u < I.size(); ++u) {
    if (I[u] < 1 || I[u] > static_cast<int>(lambda.size()))
      throw MathError("shapes: shift position out of range");
    if (u > 0 && I[u] <= I[u - 1])
      throw MathError("shapes: shift set not strictly increasing");
  }
  Composition out = lambda;
  for (std::size_t u = 0; u + 1 < I.size(); ++u)
    out[I[u] - 1] = lambda[I[u + 1] - 1];
  out[I.back() - 1] = lambda[I.front() - 1] + 1;
  return out;
}

SplitIndex::SplitIndex(Composition lam, Composition gam, int m_slots)
    : lambda(std::move(lam)), gamma(std::move(gam)), m(m_slots) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (!is_partition(lambda))
    throw MathError("shapes: lambda part is not a partition");
  if (static_cast<int>(lambda.size()) > m)
    throw MathError("shapes: lambda longer than m slots");
}

Composition SplitIndex::padded_lambda() const {
  Composition out = lambda;
  out.resize(m, 0);
  return out;
}

Composition SplitIndex::combined() const {
  Composition out = padded_lambda();
  out.insert(out.end(), gamma.begin(), gamma.end());
  return out;
}

Composition SplitIndex::combined_asc() const {
  Composition out = padded_lambda();
  std::sort(out.begin(), out.end());
  out.insert(out.end(), gamma.begin(), gamma.end());
  return out;
}

SplitIndex SplitIndex::with_m(int m_slots) const {
  return SplitIndex(lambda, gamma, m_slots);
}

std::pair<Composition, Composition> SplitIndex::key() const {
  return {lambda, gamma};
}

std::string SplitIndex::str() const {
  return "(" + composition_str(lambda) + "|" + composition_str(gamma) + ")";
}

QtRational j_scalar(const SplitIndex& idx) {
  Composition nu = idx.combined_asc();
  int m = idx.m;
  QtRational out(1);
  for (int i = 1; i <= static_cast<int>(nu.size()); ++i) {
    for (int j = 1; j <= nu[i - 1]; ++j) {
      DiagBox box{i, j};
      int l = leg(nu, box);
      if (i <= m) {
        int a = arm(nu, box, ArmVariant::tilde);
        out *= QtRational(1) - QtRational::monomial(1, l, 2 * (a + 1));
      } else {
        int a = arm(nu, box, ArmVariant::plain);
        out *= QtRational(1) - QtRational::monomial(1, l + 1, 2 * (a + 1));
      }
    }
  }
  return out;
}

QtRational box_weight(const PlaneBox& b) {
  return QtRational::monomial(1, b.r, 2 * b.c);
}

Composition transpose(const Composition& xi) {
  Composition out;
  if (xi.empty()) return out;
  out.resize(xi[0], 0);
  for (int len : xi)
    for (int c = 0; c < len; ++c) ++out[c];
  return out;
}

std::vector<int> column_heights(const Composition& xi) {
  return transpose(xi);
}

namespace {

bool is_corner(const Composition& xi, const PlaneBox& b) {
  int rows = static_cast<int>(xi.size());
  if (b.r < 0 || b.r >= rows) return false;
  if (xi[b.r] != b.c + 1) return false;
  if (b.r + 1 < rows && xi[b.r + 1] > b.c) return false;
  return true;
}

Composition remove_corner(Composition xi, const PlaneBox& b) {
  xi[b.r] -= 1;
  while (!xi.empty() && xi.back() == 0) xi.pop_back();
  return xi;
}

}  // namespace

bool FixedPointLabel::valid() const {
  Composition cur = xi;
  std::vector<int> cols;
  for (const auto& b : w) {
    if (!is_corner(cur, b)) return false;
    cols.push_back(b.c);
    cur = remove_corner(std::move(cur), b);
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

std::vector<QtRational> FixedPointLabel::w_weights() const {
  std::vector<QtRational> out;
  out.reserve(w.size());
  for (const auto& b : w) out.push_back(box_weight(b));
  return out;
}

bool FixedPointLabel::operator==(const FixedPointLabel& o) const {
  return xi == o.xi && w == o.w;
}

bool FixedPointLabel::operator<(const FixedPointLabel& o) const {
  if (xi != o.xi) return xi < o.xi;
  return w < o.w;
}

std::string FixedPointLabel::str() const {
  std::ostringstream os;
  os << "(" << composition_str(xi) << ";";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << "q^" << w[i].r << "*t^" << w[i].c;
  }
  os << ")";
  return os.str();
}

std::vector<PlaneBox> addable_boxes(const Composition& xi) {
  std::vector<PlaneBox> out;
  int rows = static_cast<int>(xi.size());
  for (int r = 0; r < rows; ++r)
    if (r == 0 || xi[r - 1] > xi[r]) out.push_back(PlaneBox{xi[r], r});
  out.push_back(PlaneBox{0, rows});
  return out;
}

Composition add_box(const Composition& xi, const PlaneBox& b) {
  Composition out = xi;
  if (b.r == static_cast<int>(out.size()))
    out.push_back(1);
  else
    out[b.r] += 1;
  if (b.r >= static_cast<int>(xi.size()) + 1 || out[b.r] != b.c + 1 ||
      (b.r > 0 && out[b.r - 1] < out[b.r]))
    throw MathError("shapes: box is not addable");
  return out;
}

SplitIndex phi(const FixedPointLabel& fp) {
  if (!fp.valid()) throw MathError("shapes: invalid fixed-point label");
  Composition gamma;
  std::vector<int> labeled_cols;
  for (const auto& b : fp.w) {
    gamma.push_back(b.r);
    labeled_cols.push_back(b.c);
  }
  std::vector<int> heights = column_heights(fp.xi);
  Composition lambda;
  for (int c = 0; c < static_cast<int>(heights.size()); ++c)
    if (std::find(labeled_cols.begin(), labeled_cols.end(), c) ==
        labeled_cols.end())
      lambda.push_back(heights[c]);
  // Remaining column heights are weakly decreasing already.
  int m = static_cast<int>(lambda.size());
  return SplitIndex(std::move(lambda), std::move(gamma), m);
}

FixedPointLabel phi_inverse(const SplitIndex& idx) {
  const Composition& lambda = idx.lambda;
  const Composition& gamma = idx.gamma;
  int k = idx.k();
  FixedPointLabel fp;
  fp.w.resize(k);

  // Column positions follow the tie-breaking rule: each labeled column sits
  // right of unlabeled columns of the same height, and equal-height labeled
  // columns carry increasing labels right to left.
  std::vector<std::pair<int, int>> cols;  // (height, label or 0)
  for (int v : lambda)
    if (v > 0) cols.emplace_back(v, 0);
  for (int i = 1; i <= k; ++i) cols.emplace_back(gamma[i - 1] + 1, i);
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if ((a.second == 0) != (b.second == 0)) return a.second == 0;
    return a.second > b.second;
  });

  Composition heights;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    heights.push_back(cols[c].first);
    if (cols[c].second > 0)
      fp.w[cols[c].second - 1] = PlaneBox{c, cols[c].first - 1};
  }
  fp.xi = transpose(heights);
  if (!fp.valid())
    throw InternalError("shapes: phi_inverse produced an invalid label");
  return fp;
}

std::vector<Composition> partitions_of(int size) {
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, size, size);
  return out;
}

std::vector<Composition> compositions_of(int size, int length) {
  std::vector<Composition> out;
  Composition cur(length, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == length) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, size);
  return out;
}

std::vector<FixedPointLabel> all_fixed_points(int size, int k) {
  std::vector<FixedPointLabel> out;
  for (const Composition& xi : partitions_of(size)) {
    std::vector<FixedPointLabel> frontier = {FixedPointLabel{xi, {}}};
    for (int step = 0; step < k; ++step) {
      std::vector<FixedPointLabel> next;
      for (const auto& fp : frontier) {
        Composition cur = fp.xi;
        for (const auto& b : fp.w) cur = remove_corner(std::move(cur), b);
        int rows = static_cast<int>(cur.size());
        for (int r = 0; r < rows; ++r) {
          if (cur[r] == 0) continue;
          PlaneBox b{cur[r] - 1, r};
          if (!is_corner(cur, b)) continue;
          bool col_used = false;
          for (const auto& prev : fp.w) col_used |= prev.c == b.c;
          if (col_used) continue;
          FixedPointLabel ext = fp;
          ext.w.push_back(b);
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
    for (auto& fp : frontier) out.push_back(std::move(fp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition parse_composition(const std::string& text) {
  Composition out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (v < 0) throw MathError("shapes: negative composition entry");
    out.push_back(v);
  }
  return out;
}

std::vector<PlaneBox> parse_strip(const std::string& text) {
  std::vector<PlaneBox> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    PlaneBox b;
    if (token.front() == '(') {
      // "(c" followed by "r)" in the next token, since we split on commas
      std::string second;
      if (!std::getline(is, second, ','))
        throw MathError("shapes: malformed box pair");
      b.c = std::stoi(token.substr(1));
      b.r = std::stoi(second.substr(0, second.find(')')));
    } else {
      // "q^r*t^c" with either factor optional and bare q or t meaning
      // exponent 1
      int qe = 0, te = 0;
      std::size_t qpos = token.find("q^");
      std::size_t tpos = token.find("t^");
      if (qpos != std::string::npos)
        qe = std::stoi(token.substr(qpos + 2));
      else if (token.find('q') != std::string::npos)
        qe = 1;
      if (tpos != std::string::npos)
        te = std::stoi(token.substr(tpos + 2));
      else if (token.find('t') != std::string::npos)
        te = 1;
      if (qe == 0 && te == 0 && token != "1" && token != "q^0" &&
          token != "t^0" && token != "q^0*t^0")
        throw MathError("shapes: malformed weight monomial");
      b.r = qe;
      b.c = te;
    }
    out.push_back(b);
  }
  return out;
}

std::string composition_str(const Composition& nu) {
  std::ostringstream os;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) os << ",";
    os << nu[i];
  }
  return os.str();
}

}  // namespace macd
