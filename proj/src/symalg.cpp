#include "liecert/symalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace liecert {

namespace {

void poly_axpy(PolyElement& dst, const Rat& c, const PolyElement& src) {
  if (c == 0) return;
  for (const auto& [m, v] : src) {
    auto it = dst.find(m);
    if (it == dst.end()) {
      dst.emplace(m, c * v);
    } else {
      it->second += c * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

}  // namespace

PolyElement poly_add(const PolyElement& p, const PolyElement& q, const Rat& c) {
  PolyElement r = p;
  poly_axpy(r, c, q);
  return r;
}

PolyElement poly_scale(const PolyElement& p, const Rat& c) {
  PolyElement r;
  if (c == 0) return r;
  for (const auto& [m, v] : p) r[m] = c * v;
  return r;
}

PolyElement poly_monomial(Monomial m, const Rat& c) {
  std::sort(m.begin(), m.end());
  PolyElement p;
  if (c != 0) p[std::move(m)] = c;
  return p;
}

PolyElement poly_mul(const PolyElement& p, const PolyElement& q) {
  PolyElement r;
  for (const auto& [mp, cp] : p)
    for (const auto& [mq, cq] : q) {
      Monomial m = mp;
      m.insert(m.end(), mq.begin(), mq.end());
      std::sort(m.begin(), m.end());
      auto it = r.find(m);
      if (it == r.end()) r.emplace(std::move(m), cp * cq);
      else {
        it->second += cp * cq;
        if (it->second == 0) r.erase(it);
      }
    }
  return r;
}

Vec monomial_weight(const LieAlgebra& g, const Monomial& m) {
  Vec w(g.datum->ambient_dim, Rat(0));
  for (int s : m) {
    Vec r = g.symbol_root(s);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += r[i];
  }
  return w;
}

std::optional<Vec> poly_weight(const LieAlgebra& g, const PolyElement& p) {
  std::optional<Vec> w;
  for (const auto& [m, c] : p) {
    Vec mw = monomial_weight(g, m);
    if (!w) w = mw;
    else if (*w != mw) return std::nullopt;
  }
  return w;
}

int root_symbol(const LieAlgebra& g, const Vec& root) {
  int idx = g.datum->positive_root_index(root);
  if (idx >= 0) return g.e_index(idx);
  Vec neg = root;
  for (auto& x : neg) x = -x;
  idx = g.datum->positive_root_index(neg);
  if (idx < 0) throw std::invalid_argument("root_symbol: not a root");
  return g.f_index(idx);
}

int sl_symbol(const LieAlgebra& g, int i, int j) {
  Vec r(g.datum->ambient_dim, Rat(0));
  r[i - 1] = 1;
  r[j - 1] = -1;
  return root_symbol(g, r);
}

PolyElement adjoint_act(const LieAlgebra& g, const LieElement& x, const PolyElement& p) {
  PolyElement out;
  for (const auto& [m, c] : p) {
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
      // Leibniz: replace the symbol at `pos` by [x, symbol].
      LieElement b = bracket(g, x, LieElement{{m[pos], Rat(1)}});
      for (const auto& [s, bc] : b) {
        Monomial nm = m;
        nm[pos] = s;
        std::sort(nm.begin(), nm.end());
        poly_axpy(out, c * bc, PolyElement{{nm, Rat(1)}});
      }
    }
  }
  return out;
}

std::optional<Weight> is_singular(const LieAlgebra& g, const PolyElement& p) {
  if (p.empty()) throw std::invalid_argument("is_singular: zero polynomial");
  auto w = poly_weight(g, p);
  if (!w) return std::nullopt;
  for (int i = 0; i < g.datum->rank; ++i) {
    int sym = root_symbol(g, g.datum->simple_roots[i]);
    if (!adjoint_act(g, LieElement{{sym, Rat(1)}}, p).empty()) return std::nullopt;
  }
  return Weight{*w, g.datum};
}

namespace {

/// Interns monomials to column indices for row reduction.
struct MonoIndex {
  std::map<Monomial, int> to_col;
  std::vector<Monomial> from_col;
  int col(const Monomial& m) {
    auto it = to_col.find(m);
    if (it != to_col.end()) return it->second;
    int c = static_cast<int>(from_col.size());
    to_col.emplace(m, c);
    from_col.push_back(m);
    return c;
  }
};

RowSpan::SparseRow to_row(MonoIndex& ix, const PolyElement& p) {
  RowSpan::SparseRow r;
  for (const auto& [m, c] : p) r[ix.col(m)] = c;
  return r;
}

PolyElement from_row(const MonoIndex& ix, const RowSpan::SparseRow& r) {
  PolyElement p;
  for (const auto& [c, v] : r) p[ix.from_col[c]] = v;
  return p;
}

}  // namespace

SubmoduleSpan generate_submodule(const LieAlgebra& g, const PolyElement& v) {
  auto w = poly_weight(g, v);
  if (!w || v.empty())
    throw std::invalid_argument("generate_submodule: need a homogeneous weight vector");
  int degree = static_cast<int>(v.begin()->first.size());
  for (const auto& [m, c] : v)
    if (static_cast<int>(m.size()) != degree)
      throw std::invalid_argument("generate_submodule: not homogeneous");
  std::vector<LieElement> gens;
  for (int i = 0; i < g.datum->rank; ++i) {
    gens.push_back(LieElement{{root_symbol(g, g.datum->simple_roots[i]), Rat(1)}});
    Vec neg = g.datum->simple_roots[i];
    for (auto& x : neg) x = -x;
    gens.push_back(LieElement{{root_symbol(g, neg), Rat(1)}});
  }
  MonoIndex ix;
  RowSpan span;
  std::deque<PolyElement> queue;
  span.insert(to_row(ix, v));
  queue.push_back(v);
  while (!queue.empty()) {
    PolyElement p = std::move(queue.front());
    queue.pop_front();
    for (const auto& x : gens) {
      PolyElement q = adjoint_act(g, x, p);
      if (q.empty()) continue;
      if (span.insert(to_row(ix, q))) queue.push_back(std::move(q));
    }
  }
  SubmoduleSpan out;
  out.degree = degree;
  out.highest_weight = Weight{*w, g.datum};
  for (const auto& r : span.basis()) out.basis.push_back(from_row(ix, r));
  return out;
}

std::vector<PolyElement> zero_weight_space(const LieAlgebra& g, const SubmoduleSpan& w) {
  MonoIndex ix;
  RowSpan span;
  Vec zero(g.datum->ambient_dim, Rat(0));
  for (const auto& p : w.basis) {
    PolyElement proj;
    for (const auto& [m, c] : p)
      if (monomial_weight(g, m) == zero) proj[m] = c;
    if (!proj.empty()) span.insert(to_row(ix, proj));
  }
  std::vector<PolyElement> out;
  for (const auto& r : span.basis()) out.push_back(from_row(ix, r));
  return out;
}

PolyElement casimir(const LieAlgebra& g) {
  Mat inv = inverse(g.bilinear_form);
  PolyElement omega;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      if (inv[i][j] == 0) continue;
      poly_axpy(omega, inv[i][j], poly_monomial({i, j}));
    }
  return omega;
}

Rat poly_eval(const LieAlgebra& g, const PolyElement& p, const LieElement& x) {
  // Value of basis symbol s at the point (x | .) of g*.
  std::vector<Rat> val(g.dim, Rat(0));
  for (int s = 0; s < g.dim; ++s) val[s] = g.form(x, LieElement{{s, Rat(1)}});
  Rat out(0);
  for (const auto& [m, c] : p) {
    Rat t = c;
    for (int s : m) t *= val[s];
    out += t;
  }
  return out;
}

PolyElement chevalley_projection(const LieAlgebra& g, const PolyElement& p) {
  auto w = poly_weight(g, p);
  Vec zero(g.datum->ambient_dim, Rat(0));
  if (!w || *w != zero)
    throw std::invalid_argument("chevalley_projection: polynomial is not of weight 0");
  PolyElement out;
  for (const auto& [m, c] : p) {
    bool cartan = std::all_of(m.begin(), m.end(),
                              [&](int s) { return g.is_cartan_symbol(s); });
    if (cartan) out[m] = c;
  }
  return out;
}

PolyElement hc_projection_deg2(const LieAlgebra& g, const PolyElement& p) {
  auto w = poly_weight(g, p);
  Vec zero(g.datum->ambient_dim, Rat(0));
  if (!w || *w != zero)
    throw std::invalid_argument("hc_projection_deg2: polynomial is not of weight 0");
  PolyElement out;
  int np = g.n_pos();
  for (const auto& [m, c] : p) {
    if (m.size() > 2) throw std::invalid_argument("hc_projection_deg2: degree > 2");
    bool cartan = std::all_of(m.begin(), m.end(),
                              [&](int s) { return g.is_cartan_symbol(s); });
    if (cartan) {
      poly_axpy(out, c, PolyElement{{m, Rat(1)}});
      continue;
    }
    // Weight 0 and not all-Cartan forces the shape {e_alpha, f_alpha}.
    if (m.size() != 2 || m[0] >= np || m[1] < np || m[1] - np != m[0])
      throw std::logic_error("hc_projection_deg2: unexpected weight-0 monomial");
    // sym(e_alpha f_alpha) projects to h_alpha / 2.
    LieElement h_alpha = g.cartan_element(g.datum->positive_roots[m[0]]);
    for (const auto& [s, v] : h_alpha)
      poly_axpy(out, c * v / 2, PolyElement{{Monomial{s}, Rat(1)}});
  }
  return out;
}

std::vector<PolyElement> singular_space_deg2(const LieAlgebra& g, const Vec& weight) {
  // Basis of the weight space in S^2(g).
  std::vector<Monomial> monos;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i; j < g.dim; ++j) {
      Monomial m{i, j};
      if (monomial_weight(g, m) == weight) monos.push_back(m);
    }
  std::map<Monomial, int> ix;
  for (std::size_t k = 0; k < monos.size(); ++k) ix[monos[k]] = static_cast<int>(k);
  // Rows: coefficients of e_i . m over all raising operators and images.
  std::vector<Vec> rows;
  std::map<Monomial, int> img_ix;
  auto img_col = [&](const Monomial& m) {
    auto it = img_ix.find(m);
    if (it != img_ix.end()) return it->second;
    int c = static_cast<int>(img_ix.size());
    img_ix.emplace(m, c);
    return c;
  };
  std::vector<std::map<int, Rat>> cols(monos.size());
  int nrows = 0;
  for (int i = 0; i < g.datum->rank; ++i) {
    LieElement ei{{root_symbol(g, g.datum->simple_roots[i]), Rat(1)}};
    for (std::size_t k = 0; k < monos.size(); ++k) {
      PolyElement q = adjoint_act(g, ei, PolyElement{{monos[k], Rat(1)}});
      for (const auto& [m, c] : q) cols[k][i * 1000000 + img_col(m)] = c;
    }
    nrows = std::max(nrows, 1);
  }
  // Assemble the linear system: rows indexed by (raising op, image monomial).
  std::map<int, int> rowmap;
  for (const auto& col : cols)
    for (const auto& [r, c] : col)
      if (!rowmap.count(r)) {
        int nr = static_cast<int>(rowmap.size());
        rowmap[r] = nr;
      }
  if (rowmap.empty()) {
    // No raising operator has a nonzero image: the whole weight space is singular.
    std::vector<PolyElement> all;
    for (const auto& m : monos) all.push_back(poly_monomial(m));
    return all;
  }
  Mat sys = zeros(rowmap.size(), monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k)
    for (const auto& [r, c] : cols[k]) sys[rowmap[r]][k] = c;
  std::vector<PolyElement> out;
  for (const auto& sol : kernel_basis(sys)) {
    PolyElement p;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (sol[k] != 0) p[monos[k]] = sol[k];
    out.push_back(p);
  }
  return out;
}

PolyElement build_v1(const LieAlgebra& g) {
  int n = g.mat_size;
  if (g.datum->type_label != 'A' || n < 4)
    throw std::invalid_argument("build_v1: needs sl_n, n >= 4");
  int etheta = sl_symbol(g, 1, n);
  int etheta1 = sl_symbol(g, 2, n - 1);
  int ebeta = sl_symbol(g, 1, n - 1);
  int egamma = sl_symbol(g, 2, n);
  return poly_add(poly_monomial({etheta, etheta1}), poly_monomial({ebeta, egamma}),
                  Rat(-1));
}

PolyElement build_v0(const LieAlgebra& g) {
  int n = g.mat_size;
  if (g.datum->type_label != 'A' || n < 4 || n % 2 != 0)
    throw std::invalid_argument("build_v0: needs sl_{2m}, m >= 2");
  int m = n / 2;
  int etheta = sl_symbol(g, 1, n);
  PolyElement v;
  for (int i = 1; i <= n - 1; ++i)
    v = poly_add(v, poly_monomial({g.h_index(i - 1), etheta}), Rat(m - i, m));
  for (int i = 1; i <= n - 2; ++i)
    v = poly_add(v, poly_monomial({sl_symbol(g, 1, i + 1), sl_symbol(g, i + 1, n)}));
  return v;
}

PolyElement build_w1(const LieAlgebra& g) {
  if (g.datum->type_label != 'D') throw std::invalid_argument("build_w1: needs so_{2r}");
  int r = g.datum->rank;
  PolyElement w;
  for (int i = 2; i <= r; ++i) {
    Vec minus(r, Rat(0)), plus(r, Rat(0));
    minus[0] = 1;
    minus[i - 1] = -1;
    plus[0] = 1;
    plus[i - 1] = 1;
    w = poly_add(w, poly_monomial({root_symbol(g, minus), root_symbol(g, plus)}));
  }
  return w;
}

}  // namespace liecert
