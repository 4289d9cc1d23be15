#include "liecert/affine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liecert {

namespace {

void kpoly_trim(KPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void affine_axpy(AffineVector& dst, const AffineMonomial& m, const KPoly& c) {
  if (c.empty()) return;
  KPoly& slot = dst[m];
  slot = kpoly_add(slot, c);
  if (slot.empty()) dst.erase(m);
}

}  // namespace

KPoly kpoly_const(const Rat& c) {
  if (c == 0) return {};
  return {c};
}

KPoly kpoly_add(const KPoly& p, const KPoly& q) {
  KPoly r = p;
  if (r.size() < q.size()) r.resize(q.size(), Rat(0));
  for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  kpoly_trim(r);
  return r;
}

KPoly kpoly_scale(const KPoly& p, const Rat& c) {
  if (c == 0) return {};
  KPoly r = p;
  for (auto& x : r) x *= c;
  return r;
}

KPoly kpoly_mul(const KPoly& p, const KPoly& q) {
  if (p.empty() || q.empty()) return {};
  KPoly r(p.size() + q.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  kpoly_trim(r);
  return r;
}

std::string kpoly_to_string(const KPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(p[i]);
    if (i >= 1) os << "*k";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

AffineVector affine_add(const AffineVector& v, const AffineVector& w) {
  AffineVector r = v;
  for (const auto& [m, c] : w) affine_axpy(r, m, c);
  return r;
}

AffineVector affine_scale(const AffineVector& v, const KPoly& c) {
  AffineVector r;
  for (const auto& [m, cm] : v) affine_axpy(r, m, kpoly_mul(cm, c));
  return r;
}

AffineVector vacuum() { return AffineVector{{AffineMonomial{}, kpoly_const(Rat(1))}}; }

namespace {

/// x(n) applied to a single canonical monomial; accumulates into out.
void act_mono(const LieAlgebra& g, int x, int n, const AffineMonomial& w, const KPoly& c,
              AffineVector& out) {
  if (c.empty()) return;
  if (w.empty()) {
    if (n >= 0) return;  // nonnegative modes annihilate the vacuum
    affine_axpy(out, AffineMonomial{{-n, x}}, c);
    return;
  }
  auto [d, y] = w.front();  // leftmost letter y(-d)
  if (n < 0 && (-n > d || (-n == d && x <= y))) {
    AffineMonomial m;
    m.reserve(w.size() + 1);
    m.emplace_back(-n, x);
    m.insert(m.end(), w.begin(), w.end());
    affine_axpy(out, m, c);
    return;
  }
  AffineMonomial rest(w.begin() + 1, w.end());
  // x(n) y(-d) = y(-d) x(n) + [x,y](n-d) + n (x|y) delta_{n,d} K
  AffineVector inner;
  act_mono(g, x, n, rest, c, inner);
  for (const auto& [m2, c2] : inner) act_mono(g, y, -d, m2, c2, out);
  LieElement bx = bracket(g, LieElement{{x, Rat(1)}}, LieElement{{y, Rat(1)}});
  for (const auto& [s, bc] : bx) act_mono(g, s, n - d, rest, kpoly_scale(c, bc), out);
  if (n == d && n > 0) {
    Rat f = Rat(n) * g.form(LieElement{{x, Rat(1)}}, LieElement{{y, Rat(1)}});
    if (f != 0) affine_axpy(out, rest, kpoly_mul(c, KPoly{Rat(0), f}));
  }
}

}  // namespace

AffineVector act(const LieAlgebra& g, int symbol, int n, const AffineVector& v) {
  AffineVector out;
  for (const auto& [m, c] : v) act_mono(g, symbol, n, m, c, out);
  return out;
}

AffineVector act(const LieAlgebra& g, const LieElement& x, int n, const AffineVector& v) {
  AffineVector out;
  for (const auto& [s, xc] : x)
    for (const auto& [m, c] : v) act_mono(g, s, n, m, kpoly_scale(c, xc), out);
  return out;
}

std::optional<Vec> affine_weight(const LieAlgebra& g, const AffineVector& v) {
  std::optional<Vec> w;
  for (const auto& [m, c] : v) {
    Vec mw(g.datum->ambient_dim, Rat(0));
    for (const auto& [d, s] : m) {
      Vec r = g.symbol_root(s);
      for (std::size_t i = 0; i < mw.size(); ++i) mw[i] += r[i];
    }
    if (!w) w = mw;
    else if (*w != mw) return std::nullopt;
  }
  return w;
}

AffineVector sigma(const LieAlgebra& g, const PolyElement& p) {
  AffineVector out;
  for (const auto& [mono, c] : p) {
    int d = static_cast<int>(mono.size());
    Rat dfact(1);
    for (int i = 2; i <= d; ++i) dfact *= i;
    std::vector<int> idx(mono.size());
    std::iota(idx.begin(), idx.end(), 0);
    // Average x_{s(1)}(-1)...x_{s(d)}(-1)|0> over all d! orderings.
    do {
      AffineVector v = vacuum();
      for (std::size_t i = idx.size(); i-- > 0;) v = act(g, mono[idx[i]], -1, v);
      for (const auto& [m, cm] : v) affine_axpy(out, m, kpoly_scale(cm, c / dfact));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return out;
}

AffineVector sigma_v0(const LieAlgebra& g) {
  int n = g.mat_size;
  if (g.datum->type_label != 'A' || n < 4 || n % 2 != 0)
    throw std::invalid_argument("sigma_v0: needs sl_{2m}, m >= 2");
  int m = n / 2;
  int etheta = sl_symbol(g, 1, n);
  AffineVector out;
  for (int i = 1; i <= n - 1; ++i) {
    AffineVector v = act(g, g.h_index(i - 1), -1, act(g, etheta, -1, vacuum()));
    for (const auto& [mm, c] : v)
      affine_axpy(out, mm, kpoly_scale(c, Rat(m - i, m)));
  }
  for (int i = 1; i <= n - 2; ++i) {
    AffineVector v =
        act(g, sl_symbol(g, 1, i + 1), -1, act(g, sl_symbol(g, i + 1, n), -1, vacuum()));
    for (const auto& [mm, c] : v) affine_axpy(out, mm, c);
  }
  AffineVector tail = act(g, etheta, -2, vacuum());
  for (const auto& [mm, c] : tail)
    affine_axpy(out, mm, kpoly_scale(c, Rat(-(m - 1))));
  return out;
}

LevelSolution singular_levels(const LieAlgebra& g, const AffineVector& v) {
  if (!affine_weight(g, v))
    throw std::invalid_argument("singular_levels: not an h-hat weight vector");
  std::vector<AffineVector> images;
  for (int i = 0; i < g.datum->rank; ++i)
    images.push_back(act(g, root_symbol(g, g.datum->simple_roots[i]), 0, v));
  int th = g.datum->positive_root_index(g.datum->highest_root());
  images.push_back(act(g, g.f_index(th), 1, v));

  LevelSolution sol;
  sol.all_k = true;
  auto restrict_to = [&](const std::vector<Rat>& roots) {
    if (sol.all_k) {
      sol.all_k = false;
      sol.values = roots;
      return;
    }
    std::vector<Rat> keep;
    for (const Rat& r : sol.values)
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) keep.push_back(r);
    sol.values = std::move(keep);
  };
  for (const auto& img : images)
    for (const auto& [m, c] : img) {
      if (c.empty()) continue;
      if (c.size() == 1) {
        // Nonzero constant: no level kills this monomial.
        sol.all_k = false;
        sol.values.clear();
        return sol;
      }
      if (c.size() > 2)
        throw std::runtime_error("singular_levels: coefficient nonlinear in k: " +
                                 kpoly_to_string(c));
      restrict_to({-c[0] / c[1]});
    }
  std::sort(sol.values.begin(), sol.values.end());
  sol.values.erase(std::unique(sol.values.begin(), sol.values.end()), sol.values.end());
  return sol;
}

}  // namespace liecert
