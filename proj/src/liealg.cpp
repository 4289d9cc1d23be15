#include "liecert/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liecert {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  if (very_even_label) os << (*very_even_label == '1' ? "^I" : "^II");
  return os.str();
}

bool in_p1(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) mult[p]++;
  for (const auto& [p, m] : mult)
    if (p % 2 == 0 && m % 2 != 0) return false;
  return true;
}

bool is_very_even(const std::vector<int>& parts) {
  return in_p1(parts) &&
         std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

Vec LieAlgebra::symbol_root(int s) const {
  int np = n_pos();
  Vec zero(datum->ambient_dim, Rat(0));
  if (s < np) return datum->positive_roots[s];
  if (s < 2 * np) {
    Vec v = datum->positive_roots[s - np];
    for (auto& x : v) x = -x;
    return v;
  }
  return zero;
}

Mat LieAlgebra::realize(const LieElement& x) const {
  Mat m = zeros(mat_size, mat_size);
  for (const auto& [s, c] : x) {
    const Mat& b = matrix_realization[s];
    for (int i = 0; i < mat_size; ++i)
      for (int j = 0; j < mat_size; ++j)
        if (b[i][j] != 0) m[i][j] += c * b[i][j];
  }
  return m;
}

LieElement LieAlgebra::from_matrix(const Mat& m) const {
  LieElement x;
  int np = n_pos();
  char t = datum->type_label;
  int r = datum->rank;
  auto set = [&](int sym, const Rat& c) {
    if (c != 0) x[sym] = c;
  };
  for (int a = 0; a < np; ++a) {
    const Vec& root = datum->positive_roots[a];
    // Locate the defining entry of the root vector.
    int i = -1, j = -1;
    for (int k = 0; k < datum->ambient_dim; ++k) {
      if (root[k] == 1 && i < 0) i = k;
      else if (root[k] != 0) j = k;
    }
    if (t == 'A') {
      set(e_index(a), m[i][j]);
      set(f_index(a), m[j][i]);
    } else {
      int n2 = mat_size;  // 2r
      if (root[j] == -1) {  // eps_i - eps_j
        set(e_index(a), m[i][j]);
        set(f_index(a), m[j][i]);
      } else {  // eps_i + eps_j
        set(e_index(a), m[i][n2 - 1 - j]);
        set(f_index(a), m[n2 - 1 - j][i]);
      }
    }
  }
  // Cartan part from the diagonal.
  Vec diag(datum->ambient_dim, Rat(0));
  for (int k = 0; k < datum->ambient_dim; ++k) diag[k] = m[k][k];
  LieElement h = cartan_element(diag);
  for (const auto& [s, c] : h) set(s, c);
  if (realize(x) != m) throw std::invalid_argument("from_matrix: matrix not in the algebra");
  (void)r;
  return x;
}

LieElement LieAlgebra::cartan_element(const Vec& eps_coords) const {
  // Solve eps_coords = sum c_i * (coords of the simple coroot h_i).  For the
  // simply laced types here coroot coordinates equal root coordinates.
  int rk = datum->rank;
  Mat m(datum->ambient_dim, Vec(rk, Rat(0)));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < datum->ambient_dim; ++j) m[j][i] = datum->simple_roots[i][j];
  auto c = solve(m, eps_coords);
  if (!c) throw std::invalid_argument("cartan_element: coordinates outside coroot span");
  // Verify consistency (solve() returns one solution of the full system).
  Vec chk(datum->ambient_dim, Rat(0));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < datum->ambient_dim; ++j) chk[j] += (*c)[i] * datum->simple_roots[i][j];
  if (chk != eps_coords)
    throw std::invalid_argument("cartan_element: coordinates outside coroot span");
  LieElement h;
  for (int i = 0; i < rk; ++i)
    if ((*c)[i] != 0) h[h_index(i)] = (*c)[i];
  return h;
}

Vec LieAlgebra::cartan_coords(const LieElement& h) const {
  Mat m = realize(h);
  Vec v(datum->ambient_dim, Rat(0));
  for (int k = 0; k < datum->ambient_dim; ++k) v[k] = m[k][k];
  return v;
}

Rat LieAlgebra::form(const LieElement& x, const LieElement& y) const {
  Rat s(0);
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) s += ci * cj * bilinear_form[i][j];
  return s;
}

namespace {

std::shared_ptr<const LieAlgebra> build_common(std::shared_ptr<const RootDatum> datum,
                                               int mat_size, Rat trace_scale,
                                               int dual_coxeter,
                                               const std::vector<Mat>& mats) {
  auto g = std::make_shared<LieAlgebra>();
  g->datum = std::move(datum);
  g->mat_size = mat_size;
  g->matrix_realization = mats;
  g->dim = static_cast<int>(mats.size());
  g->dual_coxeter = dual_coxeter;
  g->bilinear_form = zeros(g->dim, g->dim);
  for (int i = 0; i < g->dim; ++i)
    for (int j = i; j < g->dim; ++j) {
      Rat v = trace_scale * trace_mul(mats[i], mats[j]);
      g->bilinear_form[i][j] = v;
      g->bilinear_form[j][i] = v;
    }
  // Structure constants from the matrix realization.
  g->structure_constants.assign(g->dim, {});
  for (int i = 0; i < g->dim; ++i) {
    g->structure_constants[i].resize(g->dim);
    for (int j = 0; j < g->dim; ++j) {
      if (i == j) continue;
      Mat b = bracket_mat(mats[i], mats[j]);
      LieElement x = g->from_matrix(b);
      auto& row = g->structure_constants[i][j];
      row.assign(x.begin(), x.end());
    }
  }
  // Cross-check the dual Coxeter number against 1 + (rho|theta^vee).
  Rat hv = 1 + g->datum->pair_coroot(g->datum->rho(), g->datum->highest_root());
  if (hv != dual_coxeter) throw std::logic_error("dual Coxeter number mismatch");
  return g;
}

}  // namespace

std::shared_ptr<const LieAlgebra> build_sl(int n) {
  if (n < 2) throw std::invalid_argument("build_sl: n >= 2 required");
  auto datum = build_root_datum('A', n - 1);
  std::vector<Mat> mats;
  int np = static_cast<int>(datum->positive_roots.size());
  auto elementary = [&](int i, int j) {
    Mat m = zeros(n, n);
    m[i][j] = 1;
    return m;
  };
  std::vector<std::pair<int, int>> pos;  // (i,j) per positive root
  for (const auto& root : datum->positive_roots) {
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
      if (root[k] == 1) i = k;
      if (root[k] == -1) j = k;
    }
    pos.emplace_back(i, j);
  }
  for (int a = 0; a < np; ++a) mats.push_back(elementary(pos[a].first, pos[a].second));
  for (int a = 0; a < np; ++a) mats.push_back(elementary(pos[a].second, pos[a].first));
  for (int i = 0; i + 1 < n; ++i) {
    Mat m = zeros(n, n);
    m[i][i] = 1;
    m[i + 1][i + 1] = -1;
    mats.push_back(m);
  }
  return build_common(datum, n, Rat(1), n, mats);
}

std::shared_ptr<const LieAlgebra> build_so_even(int r) {
  if (r < 3) throw std::invalid_argument("build_so_even: r >= 3 required");
  auto datum = build_root_datum('D', r);
  int n2 = 2 * r;
  auto E = [&](int i, int j) {  // 0-based
    Mat m = zeros(n2, n2);
    m[i][j] = 1;
    return m;
  };
  std::vector<Mat> mats;
  int np = static_cast<int>(datum->positive_roots.size());
  std::vector<Mat> evecs(np), fvecs(np);
  for (int a = 0; a < np; ++a) {
    const Vec& root = datum->positive_roots[a];
    int i = -1, j = -1;
    for (int k = 0; k < r; ++k) {
      if (root[k] != 0) {
        if (i < 0) i = k;
        else j = k;
      }
    }
    if (root[j] == -1) {
      // e_{eps_i - eps_j} = E_{i,j} - E_{2r+1-j,2r+1-i} (1-based indices)
      evecs[a] = mat_sub(E(i, j), E(n2 - 1 - j, n2 - 1 - i));
      fvecs[a] = mat_sub(E(j, i), E(n2 - 1 - i, n2 - 1 - j));
    } else {
      // e_{eps_i + eps_j} = E_{i,2r+1-j} - E_{j,2r+1-i}
      evecs[a] = mat_sub(E(i, n2 - 1 - j), E(j, n2 - 1 - i));
      fvecs[a] = mat_sub(E(n2 - 1 - j, i), E(n2 - 1 - i, j));
    }
  }
  for (auto& m : evecs) mats.push_back(std::move(m));
  for (auto& m : fvecs) mats.push_back(std::move(m));
  for (int i = 0; i < r; ++i) {
    // Simple coroot h_i as a diagonal matrix.
    Vec a(r, Rat(0));
    if (i + 1 < r) {
      a[i] = 1;
      a[i + 1] = -1;
    } else {
      a[r - 2] = 1;
      a[r - 1] = 1;
    }
    Mat m = zeros(n2, n2);
    for (int k = 0; k < r; ++k) {
      m[k][k] = a[k];
      m[n2 - 1 - k][n2 - 1 - k] = -a[k];
    }
    mats.push_back(m);
  }
  return build_common(datum, n2, Rat(1, 2), 2 * r - 2, mats);
}

LieElement lie_add(const LieElement& x, const LieElement& y, const Rat& c) {
  LieElement z = x;
  for (const auto& [s, v] : y) {
    Rat nv = z.count(s) ? Rat(z[s] + c * v) : Rat(c * v);
    if (nv == 0) z.erase(s);
    else z[s] = nv;
  }
  return z;
}

LieElement lie_scale(const LieElement& x, const Rat& c) {
  LieElement z;
  if (c == 0) return z;
  for (const auto& [s, v] : x) z[s] = c * v;
  return z;
}

LieElement bracket(const LieAlgebra& g, const LieElement& x, const LieElement& y) {
  LieElement z;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      if (i == j) continue;
      for (const auto& [s, c] : g.structure_constants[i][j]) {
        Rat nv = (z.count(s) ? z[s] : Rat(0)) + Rat(ci * cj * c);
        if (nv == 0) z.erase(s);
        else z[s] = nv;
      }
    }
  return z;
}

namespace {

std::vector<int> partition_from_ranks(const Mat& m, int size) {
  // parts of size >= k: rank(m^{k-1}) - rank(m^k)
  std::vector<std::size_t> ranks;
  Mat p = identity(size);
  ranks.push_back(size);
  for (int k = 1; k <= size; ++k) {
    p = mat_mul(p, m);
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_type: element is not nilpotent");
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    int blocks_ge_k = static_cast<int>(ranks[k - 1] - ranks[k]);
    for (int b = 0; b < blocks_ge_k; ++b) {
      if (static_cast<int>(parts.size()) < b + 1) parts.push_back(0);
      parts[b] += 1;
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

/// Canonical maximal isotropic subspace attached to a very even nilpotent:
/// sum over j of (im x^j  intersect  ker x^j).
std::vector<Vec> canonical_isotropic(const Mat& m, int size) {
  RowSpan span;
  Mat p = identity(size);
  for (int j = 1; j <= size; ++j) {
    p = mat_mul(p, m);
    if (is_zero_mat(p)) break;
    // columns of p spanning im x^j
    std::vector<Vec> im;
    for (int c = 0; c < size; ++c) {
      Vec col(size);
      for (int rr = 0; rr < size; ++rr) col[rr] = p[rr][c];
      im.push_back(col);
    }
    auto ker = kernel_basis(p);
    // Intersection: v = Im s = Ker t  <=>  [Im | -Ker] (s,t)^T = 0.
    Mat stacked = zeros(size, im.size() + ker.size());
    for (int rr = 0; rr < size; ++rr) {
      for (std::size_t c = 0; c < im.size(); ++c) stacked[rr][c] = im[c][rr];
      for (std::size_t c = 0; c < ker.size(); ++c) stacked[rr][im.size() + c] = -ker[c][rr];
    }
    for (const auto& sol : kernel_basis(stacked)) {
      Vec v(size, Rat(0));
      for (std::size_t c = 0; c < im.size(); ++c)
        for (int rr = 0; rr < size; ++rr) v[rr] += sol[c] * im[c][rr];
      RowSpan::SparseRow row;
      for (int rr = 0; rr < size; ++rr)
        if (v[rr] != 0) row[rr] = v[rr];
      span.insert(std::move(row));
    }
  }
  std::vector<Vec> basis;
  for (const auto& row : span.basis()) {
    Vec v(size, Rat(0));
    for (const auto& [c, val] : row) v[c] = val;
    basis.push_back(v);
  }
  return basis;
}

char very_even_label_of(const Mat& m, int r) {
  int size = 2 * r;
  auto iso = canonical_isotropic(m, size);
  if (static_cast<int>(iso.size()) != r)
    throw std::logic_error("very even label: canonical isotropic has wrong dimension");
  // L0 = span(v_1..v_{r-1}, v_{r+1}), the maximal isotropic stabilized by the
  // parabolic whose Levi uses simple roots alpha_1..alpha_{r-2}, alpha_r.
  Mat stack;
  for (const auto& v : iso) stack.push_back(v);
  for (int i = 0; i < r; ++i) {
    Vec v(size, Rat(0));
    v[i == r - 1 ? r : i] = 1;
    stack.push_back(v);
  }
  int rank_union = static_cast<int>(rank(stack));
  int dim_int = size - rank_union;
  return (dim_int % 2 == r % 2) ? '1' : '2';
}

}  // namespace

Partition jordan_type_matrix(const LieAlgebra& g, const Mat& m) {
  Partition p;
  p.parts = partition_from_ranks(m, g.mat_size);
  if (g.datum->type_label == 'D') {
    if (!in_p1(p.parts)) throw std::logic_error("jordan_type: partition outside P_1(2r)");
    if (is_very_even(p.parts)) p.very_even_label = very_even_label_of(m, g.datum->rank);
  }
  return p;
}

Partition jordan_type(const LieAlgebra& g, const LieElement& x) {
  return jordan_type_matrix(g, g.realize(x));
}

Mat outer_swap(const LieAlgebra& g, const Mat& m) {
  if (g.datum->type_label != 'D') throw std::invalid_argument("outer_swap: type D only");
  int r = g.datum->rank;
  Mat s = identity(2 * r);
  s[r - 1][r - 1] = 0;
  s[r][r] = 0;
  s[r - 1][r] = 1;
  s[r][r - 1] = 1;
  return mat_mul(mat_mul(s, m), s);
}

namespace {

TripleMatrices rep_type_a(int n, const std::vector<int>& parts) {
  // Jordan layout, then conjugate by the weight-sorting permutation.
  std::vector<Rat> weight(n);
  Mat e = zeros(n, n), f = zeros(n, n), h = zeros(n, n);
  int pos = 0;
  for (int d : parts) {
    for (int i = 1; i <= d; ++i) weight[pos + i - 1] = d + 1 - 2 * i;
    for (int i = 1; i < d; ++i) {
      e[pos + i - 1][pos + i] = 1;
      f[pos + i][pos + i - 1] = Rat(i) * (d - i);
    }
    pos += d;
  }
  for (int i = 0; i < n; ++i) h[i][i] = weight[i];
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return weight[a] > weight[b]; });
  auto permute = [&](const Mat& m) {
    Mat out = zeros(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out[a][b] = m[idx[a]][idx[b]];
    return out;
  };
  return TripleMatrices{permute(e), permute(h), permute(f)};
}

TripleMatrices rep_type_d(const LieAlgebra& g, const Partition& p) {
  int r = g.datum->rank;
  int size = 2 * r;
  if (!in_p1(p.parts)) throw std::invalid_argument("nilpotent_rep: partition not in P_1(2r)");
  // Split parts into even pairs and odd pairs.
  std::map<int, int> mult;
  for (int d : p.parts) mult[d]++;
  std::vector<std::pair<int, int>> even_pairs;  // (d,d)
  std::vector<int> odds;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    auto [d, m] = *it;
    if (d % 2 == 0) {
      for (int k = 0; k < m / 2; ++k) even_pairs.emplace_back(d, d);
    } else {
      for (int k = 0; k < m; ++k) odds.push_back(d);
    }
  }
  if (odds.size() % 2 != 0) throw std::logic_error("nilpotent_rep: odd part count must be even");

  Mat e = zeros(size, size), f = zeros(size, size), h = zeros(size, size);
  struct PairVec {
    Vec a, b;
    Rat weight;
  };
  std::vector<PairVec> pairs;
  int next = 0;
  auto unit = [&](int i) {
    Vec v(size, Rat(0));
    v[i] = 1;
    return v;
  };
  auto add_chain = [&](int base, int d, const Rat& e_sign) {
    // e: u_i -> e_sign * u_{i-1}; f: u_i -> e_sign * i(d-i) u_{i+1};
    // h: weight d+1-2i.
    for (int i = 1; i <= d; ++i) h[base + i - 1][base + i - 1] = d + 1 - 2 * i;
    for (int i = 1; i < d; ++i) {
      e[base + i - 1][base + i] = e_sign;
      f[base + i][base + i - 1] = e_sign * Rat(i) * (d - i);
    }
  };
  for (auto [d, d2] : even_pairs) {
    int u = next;
    next += d;
    int w = next;
    next += d;
    add_chain(u, d, Rat(1));
    add_chain(w, d, Rat(-1));
    // pairing (u_i, w_{d+1-i}) = 1; orient each pair so `a` has weight >= 0
    for (int i = 1; i <= d; ++i) {
      Rat wt = d + 1 - 2 * i;
      if (wt >= 0) pairs.push_back({unit(u + i - 1), unit(w + d - i), wt});
      else pairs.push_back({unit(w + d - i), unit(u + i - 1), -wt});
    }
  }
  for (std::size_t k = 0; k + 1 < odds.size(); k += 2) {
    int d1 = odds[k], d2 = odds[k + 1];
    int m1 = (d1 + 1) / 2, m2 = (d2 + 1) / 2;
    Rat sA = (m1 % 2 == 0) ? 1 : -1;   // (-1)^{m1}
    Rat sB = (m2 % 2 == 0) ? -1 : 1;   // -(-1)^{m2}
    int ua = next;
    next += d1;
    int ub = next;
    next += d2;
    add_chain(ua, d1, Rat(1));
    add_chain(ub, d2, Rat(1));
    // pairing on a self-dual block: (u_i, u_j) = s (-1)^i delta_{i+j,d+1}
    auto self_pairs = [&](int base, int d, const Rat& s) {
      int m = (d + 1) / 2;
      for (int i = 1; i < m; ++i) {
        Rat val = s * ((i % 2 == 0) ? 1 : -1);
        Vec b = unit(base + d - i);
        for (auto& x : b) x /= val;
        pairs.push_back({unit(base + i - 1), b, Rat(d + 1 - 2 * i)});
      }
    };
    self_pairs(ua, d1, sA);
    self_pairs(ub, d2, sB);
    // middles: norms +1 and -1 by the choice of sA, sB
    Vec wA = unit(ua + m1 - 1), wB = unit(ub + m2 - 1);
    Vec pvec(size, Rat(0)), qvec(size, Rat(0));
    for (int i = 0; i < size; ++i) {
      pvec[i] = wA[i] + wB[i];
      qvec[i] = (wA[i] - wB[i]) / 2;
    }
    pairs.push_back({pvec, qvec, Rat(0)});
  }
  if (static_cast<int>(pairs.size()) != r) throw std::logic_error("nilpotent_rep: pairing bug");
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const PairVec& x, const PairVec& y) { return x.weight > y.weight; });
  Mat P = zeros(size, size);
  for (int t = 0; t < r; ++t)
    for (int i = 0; i < size; ++i) {
      P[i][t] = pairs[t].a[i];
      P[i][size - 1 - t] = pairs[t].b[i];
    }
  Mat Pi = inverse(P);
  auto conj = [&](const Mat& m) { return mat_mul(mat_mul(Pi, m), P); };
  TripleMatrices tri{conj(e), conj(h), conj(f)};
  if (is_very_even(p.parts)) {
    char want = p.very_even_label.value_or('1');
    Partition got = jordan_type_matrix(g, tri.e);
    if (got.very_even_label != want) {
      tri.e = outer_swap(g, tri.e);
      tri.h = outer_swap(g, tri.h);
      tri.f = outer_swap(g, tri.f);
    }
  }
  return tri;
}

}  // namespace

TripleMatrices nilpotent_rep(const LieAlgebra& g, const Partition& p) {
  if (p.total() != g.mat_size)
    throw std::invalid_argument("nilpotent_rep: partition total mismatch");
  if (g.datum->type_label == 'A') return rep_type_a(g.mat_size, p.parts);
  return rep_type_d(g, p);
}

}  // namespace liecert
