#include "macd/qt.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <sstream>
#include <vector>

namespace macd {

namespace {

// Coefficient denominators are drawn from a small pool of binomial products,
// so gcd operands repeat heavily; a cache keyed by the operand pair pays for
// itself many times over. Lookups hash the operands in place and only copy
// on insertion.
struct GcdCacheKey {
  QtPoly::TermMap a;
  QtPoly::TermMap b;
};

struct GcdPairView {
  const QtPoly::TermMap* a;
  const QtPoly::TermMap* b;
};

std::size_t hash_terms(const QtPoly::TermMap& m, std::size_t seed) {
  std::size_t h = seed;
  for (const auto& [e, c] : m) {
    h = h * 1099511628211ULL ^ static_cast<std::size_t>(e.q);
    h = h * 1099511628211ULL ^ static_cast<std::size_t>(e.th + 40009);
    h = h * 1099511628211ULL ^ mpz_fdiv_ui(c.get_mpz_t(), 2147483647u);
    h = h * 1099511628211ULL ^ static_cast<std::size_t>(sgn(c) + 2);
  }
  return h;
}

struct GcdCacheHash {
  using is_transparent = void;
  std::size_t operator()(const GcdCacheKey& k) const {
    return hash_terms(k.b, hash_terms(k.a, 14695981039346656037ULL));
  }
  std::size_t operator()(const GcdPairView& v) const {
    return hash_terms(*v.b, hash_terms(*v.a, 14695981039346656037ULL));
  }
};

struct GcdCacheEq {
  using is_transparent = void;
  bool operator()(const GcdCacheKey& x, const GcdCacheKey& y) const {
    return x.a == y.a && x.b == y.b;
  }
  bool operator()(const GcdPairView& x, const GcdCacheKey& y) const {
    return *x.a == y.a && *x.b == y.b;
  }
  bool operator()(const GcdCacheKey& x, const GcdPairView& y) const {
    return x.a == *y.a && x.b == *y.b;
  }
};

std::unordered_map<GcdCacheKey, QtPoly, GcdCacheHash, GcdCacheEq> gcd_cache;
std::shared_mutex gcd_cache_mutex;

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// ---- modular coprimality probe ------------------------------------------
//
// Specializing t^(1/2) := beta over F_p maps a common divisor G of (A, B) to
// a common divisor of the images. Since lc_q(G) divides lc_q(A) in
// Z[t^(1/2)], a point where lc_q(A) survives keeps deg_q(G) intact, so an
// image gcd of q-degree zero certifies deg_q(G) = 0 and the bivariate gcd
// reduces to a cheap univariate content gcd.

constexpr std::uint64_t kProbePrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kProbePrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Image of p as a univariate polynomial in q at t^(1/2) := beta, dense by
// q-degree. Requires nonnegative exponents.
std::vector<std::uint64_t> q_image(const QtPoly& p, std::uint64_t beta) {
  std::vector<std::uint64_t> img(p.max_q() + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    std::uint64_t cv = mpz_fdiv_ui(c.get_mpz_t(), kProbePrime);
    img[e.q] = (img[e.q] + mulmod(cv, powmod(beta, e.th))) % kProbePrime;
  }
  while (!img.empty() && img.back() == 0) img.pop_back();
  return img;
}

// Dense view for the PRS: rows are dense T-polynomials (coefficient vectors
// indexed by half-unit exponent), one row per q-degree.
using DRow = std::vector<Int>;
using Dense = std::vector<DRow>;

void d_trim(DRow& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

bool d_is_zero(const DRow& r) { return r.empty(); }

void dense_trim(Dense& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Dense to_dense(const QtPoly& p) {
  Dense out(p.max_q() + 1);
  std::int32_t mth = p.max_th();
  for (auto& r : out) r.assign(mth + 1, Int(0));
  for (const auto& [e, c] : p.terms()) out[e.q][e.th] = c;
  for (auto& r : out) d_trim(r);
  dense_trim(out);
  return out;
}

QtPoly dense_to_poly(const Dense& p) {
  QtPoly out;
  for (std::size_t qe = 0; qe < p.size(); ++qe)
    for (std::size_t th = 0; th < p[qe].size(); ++th)
      if (p[qe][th] != 0)
        out.add_term(QtExp{static_cast<std::int32_t>(qe),
                           static_cast<std::int32_t>(th)},
                     p[qe][th]);
  return out;
}

DRow d_mul(const DRow& a, const DRow& b) {
  if (a.empty() || b.empty()) return {};
  DRow out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  d_trim(out);
  return out;
}

Int d_content(const DRow& r) {
  Int g = 0;
  for (const Int& c : r) g = int_gcd(g, c);
  return g;
}

// Primitive PRS gcd of two dense T-polynomials over Z.
DRow d_gcd(DRow a, DRow b) {
  d_trim(a);
  d_trim(b);
  auto flip = [](DRow& p) {
    if (!p.empty() && p.back() < 0)
      for (auto& c : p) c = -c;
  };
  if (a.empty()) {
    flip(b);
    return b;
  }
  if (b.empty()) {
    flip(a);
    return a;
  }
  Int cont = int_gcd(d_content(a), d_content(b));
  auto prim = [](DRow p) {
    Int c = d_content(p);
    if (c > 1)
      for (auto& x : p) x /= c;
    if (!p.empty() && p.back() < 0)
      for (auto& x : p) x = -x;
    return p;
  };
  a = prim(std::move(a));
  b = prim(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    while (a.size() >= b.size() && !a.empty()) {
      std::size_t sh = a.size() - b.size();
      Int la = a.back();
      Int lb = b.back();
      DRow shifted(sh, Int(0));
      shifted.insert(shifted.end(), b.begin(), b.end());
      std::size_t sz = std::max(a.size(), shifted.size());
      a.resize(sz, Int(0));
      for (auto& x : a) x *= lb;
      for (std::size_t i = 0; i < shifted.size(); ++i) a[i] -= la * shifted[i];
      d_trim(a);
    }
    DRow r = prim(std::move(a));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x *= cont;
  return a;
}

// Exact division of every row by a T-polynomial divisor.
DRow d_divexact(const DRow& num, const DRow& div) {
  if (num.empty()) return {};
  if (div.empty()) throw InternalError("qt: dense division by zero");
  DRow rem = num;
  DRow quo(num.size() - div.size() + 1, Int(0));
  while (!rem.empty()) {
    if (rem.size() < div.size())
      throw InternalError("qt: dense content division failed");
    std::size_t sh = rem.size() - div.size();
    Int lc = rem.back() / div.back();
    if (lc * div.back() != rem.back())
      throw InternalError("qt: dense content division failed");
    quo[sh] = lc;
    for (std::size_t i = 0; i < div.size(); ++i) rem[sh + i] -= lc * div[i];
    d_trim(rem);
  }
  d_trim(quo);
  return quo;
}

DRow dense_content(const Dense& p) {
  DRow g;
  for (const DRow& r : p)
    if (!r.empty()) g = d_gcd(std::move(g), r);
  return g;
}

Dense dense_primitive(Dense p) {
  DRow c = dense_content(p);
  if (c.size() == 1 && c[0] == 1) return p;
  if (c.empty()) return p;
  for (DRow& r : p)
    if (!r.empty()) r = d_divexact(r, c);
  return p;
}

// ---- modular gcd ----------------------------------------------------------
//
// Brown-style single-prime gcd: interpolate scaled univariate image gcds at
// t^(1/2) := beta_j over F_p into a candidate, then certify it by exact trial
// division. Returns nullopt when the prime or the points were unlucky; the
// caller falls back to the primitive PRS.

struct QImage {
  std::uint64_t beta;
  std::vector<std::uint64_t> coeffs;  // by q-degree
};

std::vector<std::uint64_t> u_mod_gcd(std::vector<std::uint64_t> a,
                                     std::vector<std::uint64_t> b) {
  while (!b.empty()) {
    std::uint64_t invlb = powmod(b.back(), kProbePrime - 2);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mulmod(a.back(), invlb);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(f, b[i]);
        a[off + i] = (a[off + i] + kProbePrime - sub) % kProbePrime;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a;
}

std::uint64_t eval_row_mod(const DRow& r, std::uint64_t beta) {
  // Horner in tau = t^(1/2)
  std::uint64_t acc = 0;
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    acc = mulmod(acc, beta);
    std::uint64_t c = mpz_fdiv_ui(it->get_mpz_t(), kProbePrime);
    acc = (acc + c) % kProbePrime;
  }
  return acc;
}

Int lift_symmetric(std::uint64_t x) {
  if (x > kProbePrime / 2) {
    Int v(static_cast<unsigned long>(kProbePrime - x));
    return -v;
  }
  return Int(static_cast<unsigned long>(x));
}

std::optional<QtPoly> modular_gcd(const QtPoly& a, const QtPoly& b,
                                  const Dense& da, const Dense& db) {
  DRow content_a = dense_content(da);
  DRow content_b = dense_content(db);
  DRow qcontent = d_gcd(content_a, content_b);

  DRow gamma = d_gcd(da.back(), db.back());  // gcd of leading q-coefficients
  int npoints = static_cast<int>(
      std::min(a.max_th(), b.max_th()) + gamma.size() + 1);

  std::vector<QImage> images;
  int gcd_qdeg = INT32_MAX;
  std::uint64_t beta = 2;
  int failures = 0;
  while (static_cast<int>(images.size()) < npoints) {
    if (++failures > npoints + 64) return std::nullopt;
    std::uint64_t pt = beta++;
    std::vector<std::uint64_t> ia = q_image(a, pt);
    std::vector<std::uint64_t> ib = q_image(b, pt);
    if (static_cast<int>(ia.size()) - 1 != a.max_q() ||
        static_cast<int>(ib.size()) - 1 != b.max_q())
      continue;  // a leading coefficient vanished at this point
    std::vector<std::uint64_t> g = u_mod_gcd(std::move(ia), std::move(ib));
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > gcd_qdeg) continue;  // unlucky point
    if (dg < gcd_qdeg) {
      images.clear();  // all previous points were unlucky
      gcd_qdeg = dg;
    }
    if (gcd_qdeg == 0) break;
    // normalize monic and scale by gamma(pt)
    std::uint64_t scale =
        mulmod(powmod(g.back(), kProbePrime - 2), eval_row_mod(gamma, pt));
    for (auto& c : g) c = mulmod(c, scale);
    images.push_back(QImage{pt, std::move(g)});
  }

  if (gcd_qdeg == 0) {
    QtPoly out;
    for (std::size_t th = 0; th < qcontent.size(); ++th)
      if (qcontent[th] != 0)
        out.add_term(QtExp{0, static_cast<std::int32_t>(th)}, qcontent[th]);
    return out;
  }

  // Lagrange interpolation of each q-coefficient as a polynomial in tau.
  int n = static_cast<int>(images.size());
  Dense cand(gcd_qdeg + 1);
  std::vector<std::vector<std::uint64_t>> basis(n);
  for (int j = 0; j < n; ++j) {
    // ell_j(tau) = prod_{i != j} (tau - beta_i) / (beta_j - beta_i)
    std::vector<std::uint64_t> ell = {1};
    std::uint64_t denom = 1;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      std::vector<std::uint64_t> next(ell.size() + 1, 0);
      for (std::size_t d = 0; d < ell.size(); ++d) {
        next[d + 1] = (next[d + 1] + ell[d]) % kProbePrime;
        std::uint64_t sub = mulmod(ell[d], images[i].beta);
        next[d] = (next[d] + kProbePrime - sub) % kProbePrime;
      }
      ell = std::move(next);
      std::uint64_t diff =
          (images[j].beta + kProbePrime - images[i].beta) % kProbePrime;
      denom = mulmod(denom, diff);
    }
    std::uint64_t inv = powmod(denom, kProbePrime - 2);
    for (auto& c : ell) c = mulmod(c, inv);
    basis[j] = std::move(ell);
  }
  for (int qd = 0; qd <= gcd_qdeg; ++qd) {
    std::vector<std::uint64_t> coeff(n, 0);
    for (int j = 0; j < n; ++j) {
      std::uint64_t y = qd < static_cast<int>(images[j].coeffs.size())
                            ? images[j].coeffs[qd]
                            : 0;
      for (std::size_t d = 0; d < basis[j].size(); ++d)
        coeff[d] = (coeff[d] + mulmod(y, basis[j][d])) % kProbePrime;
    }
    DRow row(n, Int(0));
    for (int d = 0; d < n; ++d) row[d] = lift_symmetric(coeff[d]);
    d_trim(row);
    cand[qd] = std::move(row);
  }
  dense_trim(cand);
  if (cand.empty() || static_cast<int>(cand.size()) - 1 != gcd_qdeg)
    return std::nullopt;

  // Strip the interpolated candidate to its q-primitive part and restore the
  // exact q-content.
  DRow cand_content = dense_content(cand);
  if (cand_content.empty()) return std::nullopt;
  for (DRow& r : cand)
    if (!r.empty()) r = d_divexact(r, cand_content);
  for (DRow& r : cand)
    if (!r.empty()) r = d_mul(r, qcontent);
  QtPoly g = dense_to_poly(cand);
  if (g.is_zero()) return std::nullopt;
  if (g.leading().second < 0) g = -g;
  if (!a.divided_exactly_by(g).has_value()) return std::nullopt;
  if (!b.divided_exactly_by(g).has_value()) return std::nullopt;
  return g;
}

// Pseudo-remainder in q over Z[t^(1/2)] with per-step primitivization.
Dense dense_prem(Dense a, const Dense& b) {
  std::size_t db = b.size();
  const DRow& lb = b.back();
  while (!a.empty() && a.size() >= db) {
    std::size_t sh = a.size() - db;
    DRow la = a.back();
    // a := a*lb - q^sh * la * b
    for (DRow& r : a) r = d_mul(r, lb);
    for (std::size_t i = 0; i < db; ++i) {
      DRow sub = d_mul(b[i], la);
      DRow& slot = a[sh + i];
      std::size_t sz = std::max(slot.size(), sub.size());
      slot.resize(sz, Int(0));
      for (std::size_t j = 0; j < sub.size(); ++j) slot[j] -= sub[j];
      d_trim(slot);
    }
    dense_trim(a);
  }
  return a;
}

}  // namespace

bool QtPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == QtExp{0, 0} &&
         terms_.begin()->second == 1;
}

const std::pair<const QtExp, Int>& QtPoly::leading() const {
  if (terms_.empty()) throw InternalError("qt: leading term of zero");
  return *terms_.begin();
}

std::int32_t QtPoly::min_q() const {
  std::int32_t m = INT32_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.q);
  return m;
}

std::int32_t QtPoly::min_th() const {
  std::int32_t m = INT32_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.th);
  return m;
}

std::int32_t QtPoly::max_q() const {
  std::int32_t m = INT32_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e.q);
  return m;
}

std::int32_t QtPoly::max_th() const {
  std::int32_t m = INT32_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e.th);
  return m;
}

void QtPoly::add_term(const QtExp& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QtPoly QtPoly::operator-() const {
  QtPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

QtPoly QtPoly::operator+(const QtPoly& o) const {
  QtPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

QtPoly QtPoly::operator-(const QtPoly& o) const {
  QtPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

QtPoly QtPoly::operator*(const QtPoly& o) const {
  QtPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      out.add_term(QtExp{e1.q + e2.q, e1.th + e2.th}, c1 * c2);
  return out;
}

QtPoly QtPoly::mul_monomial(const Int& c, std::int32_t qe,
                            std::int32_t th) const {
  QtPoly out;
  if (c == 0) return out;
  for (const auto& [e, co] : terms_)
    out.terms_[QtExp{e.q + qe, e.th + th}] = co * c;
  return out;
}

QtPoly QtPoly::mul_int(const Int& c) const { return mul_monomial(c, 0, 0); }

QtPoly QtPoly::star() const {
  QtPoly out;
  for (const auto& [e, c] : terms_) out.terms_[QtExp{e.q, -e.th}] = c;
  return out;
}

QtPoly QtPoly::substitute_t_q_power(std::int32_t e) const {
  QtPoly out;
  for (const auto& [ex, c] : terms_) {
    if (ex.th % 2 != 0)
      throw MathError("qt: cannot substitute t in a half-integral t-power");
    out.add_term(QtExp{ex.q + e * (ex.th / 2), 0}, c);
  }
  return out;
}

Int QtPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = int_gcd(g, c);
  return g;
}

std::optional<QtPoly> QtPoly::divided_exactly_by(const QtPoly& d) const {
  if (d.is_zero()) throw MathError("qt: division by zero polynomial");
  QtPoly rem = *this;
  QtPoly quo;
  const auto& [dl, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto& [rl, rc] = rem.leading();
    if (rl.q < dl.q || rl.th < dl.th) return std::nullopt;
    Int qc = rc / dc;
    if (qc * dc != rc) return std::nullopt;
    QtExp qe{rl.q - dl.q, rl.th - dl.th};
    if (qe.q < 0 || qe.th < 0) return std::nullopt;
    quo.add_term(qe, qc);
    rem = rem - d.mul_monomial(qc, qe.q, qe.th);
  }
  return quo;
}

QtPoly QtPoly::gcd(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() && b.is_zero()) return QtPoly();
  if (a.is_zero() || b.is_zero()) {
    QtPoly g = a.is_zero() ? b : a;
    if (g.leading().second < 0) g = -g;
    return g;
  }
  // Fast path: identical polynomials show up constantly.
  if (a == b) {
    QtPoly g = a;
    if (g.leading().second < 0) g = -g;
    return g;
  }
  // Monomial fast path.
  auto mono_gcd = [](const QtPoly& m, const QtPoly& p) {
    Int c = int_gcd(m.leading().second, p.content());
    std::int32_t qe = std::min(m.leading().first.q, p.min_q());
    std::int32_t th = std::min(m.leading().first.th, p.min_th());
    return QtPoly::monomial(c < 0 ? -c : c, qe, th);
  };
  if (a.term_count() == 1) return mono_gcd(a, b);
  if (b.term_count() == 1) return mono_gcd(b, a);

  GcdPairView view{&a.terms(), &b.terms()};
  {
    std::shared_lock lock(gcd_cache_mutex);
    auto it = gcd_cache.find(view);
    if (it != gcd_cache.end()) return it->second;
  }
  QtPoly result = gcd_uncached(a, b);
  {
    std::unique_lock lock(gcd_cache_mutex);
    gcd_cache.emplace(GcdCacheKey{a.terms(), b.terms()}, result);
  }
  return result;
}

QtPoly QtPoly::gcd_uncached(const QtPoly& a, const QtPoly& b) {
  if (a.is_zero() || b.is_zero() || a.term_count() == 1 ||
      b.term_count() == 1 || a == b)
    return gcd(a, b);  // trivial shapes never reach the cache
  Dense da = to_dense(a);
  Dense db = to_dense(b);

  if (auto g = modular_gcd(a, b, da, db)) return *g;

  Int cont = int_gcd(a.content(), b.content());
  DRow cg = d_gcd(dense_content(da), dense_content(db));
  Int ccg = d_content(cg);
  if (ccg > 1)
    for (auto& x : cg) x /= ccg;
  da = dense_primitive(std::move(da));
  db = dense_primitive(std::move(db));
  if (da.size() < db.size()) std::swap(da, db);
  while (!db.empty()) {
    Dense r = dense_primitive(dense_prem(std::move(da), db));
    da = std::move(db);
    db = std::move(r);
  }
  da = dense_primitive(std::move(da));
  for (DRow& r : da) r = d_mul(r, cg);
  QtPoly g = dense_to_poly(da).mul_int(cont);
  if (g.leading().second < 0) g = -g;
  return g;
}

std::string QtPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "+";
    first = false;
    os << c.get_str();
    if (e.q != 0) os << "*q^" << e.q;
    if (e.th != 0) {
      if (e.th % 2 == 0)
        os << "*t^" << e.th / 2;
      else
        os << "*t^(" << e.th << "/2)";
    }
  }
  return os.str();
}

QtRational::QtRational(QtPoly n, QtPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw MathError("qt: zero denominator");
  canonicalize();
}

QtRational QtRational::from_poly(QtPoly n) {
  QtRational r;
  r.num_ = std::move(n);
  r.den_ = QtPoly::one();
  r.canonicalize();
  return r;
}

QtRational QtRational::q(std::int32_t e) { return monomial(1, e, 0); }

QtRational QtRational::t(std::int32_t e) { return monomial(1, 0, 2 * e); }

QtRational QtRational::t_half(std::int32_t th) { return monomial(1, 0, th); }

QtRational QtRational::monomial(Int c, std::int32_t qe, std::int32_t th) {
  QtRational r;
  r.num_ = QtPoly::monomial(std::move(c), qe, th);
  r.den_ = QtPoly::one();
  r.canonicalize();
  return r;
}

bool QtRational::is_integral_poly() const {
  if (!den_.is_one()) return false;
  for (const auto& [e, c] : num_.terms())
    if (e.th % 2 != 0 || e.th < 0 || e.q < 0) return false;
  return true;
}

void QtRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = QtPoly::one();
    return;
  }
  // Shift the pair by a common monomial until both sides are exponent-free
  // of negative powers.
  std::int32_t sq = std::min(num_.min_q(), den_.min_q());
  std::int32_t sth = std::min(num_.min_th(), den_.min_th());
  if (sq < 0 || sth < 0) {
    std::int32_t aq = sq < 0 ? -sq : 0;
    std::int32_t ath = sth < 0 ? -sth : 0;
    num_ = num_.mul_monomial(1, aq, ath);
    den_ = den_.mul_monomial(1, aq, ath);
  }
  QtPoly g = QtPoly::gcd(num_, den_);
  if (!g.is_one()) {
    auto qn = num_.divided_exactly_by(g);
    auto qd = den_.divided_exactly_by(g);
    if (!qn || !qd) throw InternalError("qt: gcd does not divide operands");
    num_ = std::move(*qn);
    den_ = std::move(*qd);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QtRational QtRational::operator+(const QtRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  QtRational r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    QtPoly g = QtPoly::gcd(den_, o.den_);
    QtPoly da = g.is_one() ? den_ : *den_.divided_exactly_by(g);
    QtPoly db = g.is_one() ? o.den_ : *o.den_.divided_exactly_by(g);
    r.num_ = num_ * db + o.num_ * da;
    r.den_ = da * o.den_;
  }
  r.canonicalize();
  return r;
}

QtRational QtRational::operator-(const QtRational& o) const {
  return *this + (-o);
}

QtRational QtRational::operator*(const QtRational& o) const {
  if (is_zero() || o.is_zero()) return QtRational();
  // Cross-cancel first; it keeps the final gcd cheap.
  QtPoly g1 = QtPoly::gcd(num_, o.den_);
  QtPoly g2 = QtPoly::gcd(o.num_, den_);
  QtPoly n1 = g1.is_one() ? num_ : *num_.divided_exactly_by(g1);
  QtPoly d2 = g1.is_one() ? o.den_ : *o.den_.divided_exactly_by(g1);
  QtPoly n2 = g2.is_one() ? o.num_ : *o.num_.divided_exactly_by(g2);
  QtPoly d1 = g2.is_one() ? den_ : *den_.divided_exactly_by(g2);
  QtRational r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  r.canonicalize();
  return r;
}

QtRational QtRational::operator/(const QtRational& o) const {
  return *this * o.inverse();
}

QtRational QtRational::operator-() const {
  QtRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QtRational QtRational::inverse() const {
  if (is_zero()) throw MathError("qt: division by zero");
  QtRational r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading().second < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QtRational QtRational::star() const {
  QtRational r;
  r.num_ = num_.star();
  r.den_ = den_.star();
  r.canonicalize();
  return r;
}

QtRational QtRational::pow(long e) const {
  if (e == 0) return QtRational(1);
  QtRational base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  QtRational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base = (n >>= 1) > 0 ? base * base : base;
  }
  return acc;
}

QtRational QtRational::substitute_t_q_power(std::int32_t e) const {
  QtPoly d = den_.substitute_t_q_power(e);
  if (d.is_zero())
    throw MathError("qt: denominator factor " + den_.str() +
                    " vanishes at t = q^" + std::to_string(e));
  return QtRational(num_.substitute_t_q_power(e), std::move(d));
}

std::string QtRational::str() const { return num_.str() + " / " + den_.str(); }

}  // namespace macd
