#include "liecert/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liecert/symalg.hpp"

namespace liecert {

namespace {

std::vector<int> pad(const std::vector<int>& v, std::size_t len) {
  std::vector<int> r = v;
  r.resize(std::max(len, r.size()), 0);
  return r;
}

std::shared_ptr<const LieAlgebra> so_cache(int r) {
  static std::map<int, std::shared_ptr<const LieAlgebra>> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, build_so_even(r)).first;
  return it->second;
}

/// Coordinates of a root in the simple-root basis.
Vec simple_coords(const RootDatum& d, const Vec& root) {
  Mat a(d.ambient_dim, Vec(d.rank, Rat(0)));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.ambient_dim; ++j) a[j][i] = d.simple_roots[i][j];
  auto sol = solve(a, root);
  if (!sol) throw std::logic_error("simple_coords: root outside simple span");
  return *sol;
}

/// Bitmask of simple roots appearing in each positive root.
std::vector<unsigned> support_masks(const RootDatum& d) {
  std::vector<unsigned> masks;
  for (const auto& r : d.positive_roots) {
    Vec c = simple_coords(d, r);
    unsigned m = 0;
    for (int i = 0; i < d.rank; ++i)
      if (c[i] != 0) m |= 1u << i;
    masks.push_back(m);
  }
  return masks;
}

unsigned subset_mask(const LeviDatum& levi) {
  unsigned m = 0;
  for (int i : levi.simple_subset) m |= 1u << i;
  return m;
}

/// Basis symbols of the standard Levi (all h plus root vectors in the span).
std::vector<int> levi_symbols(const LieAlgebra& g, const LeviDatum& levi) {
  std::vector<unsigned> masks = support_masks(*g.datum);
  unsigned sm = subset_mask(levi);
  std::vector<int> syms;
  for (int a = 0; a < g.n_pos(); ++a)
    if ((masks[a] & ~sm) == 0) {
      syms.push_back(g.e_index(a));
      syms.push_back(g.f_index(a));
    }
  for (int i = 0; i < g.datum->rank; ++i) syms.push_back(g.h_index(i));
  return syms;
}

/// dim of the orbit of x (a nilpotent LieElement) via the ad-kernel.
int element_orbit_dim(const LieAlgebra& g, const LieElement& x) {
  Mat ad = zeros(g.dim, g.dim);
  for (int j = 0; j < g.dim; ++j) {
    LieElement col = bracket(g, x, LieElement{{j, Rat(1)}});
    for (const auto& [s, c] : col) ad[s][j] = c;
  }
  return rank(ad);
}

/// dim of the Levi and of the Levi orbit of el (which must lie in the Levi).
std::pair<int, int> levi_dims(const LieAlgebra& g, const LeviDatum& levi,
                              const LieElement& el) {
  std::vector<int> syms = levi_symbols(g, levi);
  std::map<int, int> local;
  for (std::size_t i = 0; i < syms.size(); ++i) local[syms[i]] = static_cast<int>(i);
  Mat ad = zeros(syms.size(), syms.size());
  for (std::size_t j = 0; j < syms.size(); ++j) {
    LieElement col = bracket(g, el, LieElement{{syms[j], Rat(1)}});
    for (const auto& [s, c] : col) {
      auto it = local.find(s);
      if (it == local.end()) throw std::logic_error("levi_dims: bracket left the Levi");
      ad[it->second][j] = c;
    }
  }
  return {static_cast<int>(syms.size()), rank(ad)};
}

void check_partition(const Partition& p) {
  if (p.parts.empty() && p.total() == 0) return;
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
    if (p.parts[i] < p.parts[i + 1])
      throw std::invalid_argument("partition not weakly decreasing");
  if (!p.parts.empty() && p.parts.back() <= 0)
    throw std::invalid_argument("partition parts must be positive");
}

}  // namespace

Partition dual_partition(const Partition& p) {
  check_partition(p);
  Partition d;
  if (p.parts.empty()) return d;
  for (int i = 1; i <= p.parts[0]; ++i) {
    int c = 0;
    for (int part : p.parts)
      if (part >= i) ++c;
    d.parts.push_back(c);
  }
  return d;
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) throw std::invalid_argument("dominance_leq: total mismatch");
  std::size_t len = std::max(p.parts.size(), q.parts.size());
  std::vector<int> a = pad(p.parts, len), b = pad(q.parts, len);
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Parts weakly decreasing, bounded by the previous part.
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = std::min(left, maxp); d >= 1; --d) {
      cur.push_back(d);
      rec(left - d, d);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> orbit_partitions(char type, int rank_spec) {
  std::vector<Partition> out;
  if (type == 'A') {
    for (auto& parts : all_partitions(rank_spec)) out.push_back({parts, std::nullopt});
  } else if (type == 'D') {
    for (auto& parts : all_partitions(2 * rank_spec)) {
      if (!in_p1(parts)) continue;
      if (is_very_even(parts)) {
        out.push_back({parts, '1'});
        out.push_back({parts, '2'});
      } else {
        out.push_back({parts, std::nullopt});
      }
    }
  } else {
    throw std::invalid_argument("orbit_partitions: type must be A or D");
  }
  return out;
}

std::vector<Partition> minimal_dominating(const Partition& p, char type) {
  check_partition(p);
  std::vector<std::vector<int>> pool;
  for (auto& parts : all_partitions(p.total())) {
    if (type == 'D' && !in_p1(parts)) continue;
    pool.push_back(parts);
  }
  std::vector<std::vector<int>> strict;
  for (auto& q : pool) {
    Partition qq{q, std::nullopt};
    if (q != p.parts && dominance_leq(p, qq)) strict.push_back(q);
  }
  std::vector<Partition> out;
  for (auto& q : strict) {
    bool minimal = true;
    for (auto& q2 : strict)
      if (q2 != q && dominance_leq(Partition{q2, std::nullopt}, Partition{q, std::nullopt}))
        minimal = false;
    if (minimal) out.push_back({q, std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitDatum make_orbit(const LieAlgebra& g, const Partition& p) {
  OrbitDatum o;
  o.type = g.datum->type_label;
  o.rank = g.datum->rank;
  o.partition = p;
  bool zero = std::all_of(p.parts.begin(), p.parts.end(), [](int d) { return d == 1; });
  if (zero) {
    o.dimension = 0;
    return o;
  }
  auto tri = nilpotent_rep(g, p);
  o.dimension = element_orbit_dim(g, g.from_matrix(tri.e));
  return o;
}

LeviFactors levi_factors(const RootDatum& datum, const LeviDatum& levi) {
  int r = datum.rank;
  std::vector<bool> in(r, false);
  for (int i : levi.simple_subset) {
    if (i < 0 || i >= r) throw std::invalid_argument("levi_factors: bad simple index");
    in[i] = true;
  }
  bool typeD = datum.type_label == 'D';
  if (!typeD && datum.type_label != 'A')
    throw std::invalid_argument("levi_factors: type must be A or D");
  // Adjacency of the Dynkin diagram (0-based nodes).
  auto adjacent = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (typeD && b == r - 1) return a == r - 3;
    return b == a + 1 && (!typeD || b <= r - 2);
  };
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int i = 0; i < r; ++i) {
    if (!in[i] || comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < r; ++b)
        if (in[b] && comp[b] < 0 && adjacent(a, b)) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  LeviFactors f;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < r; ++i)
      if (comp[i] == c) nodes.push_back(i);
    if (typeD && std::find(nodes.begin(), nodes.end(), r - 1) != nodes.end() &&
        std::find(nodes.begin(), nodes.end(), r - 2) != nodes.end()) {
      // Contains both spin nodes: type D factor on coordinates t..r.
      f.d_start = nodes.front() + 1;
      f.d_rank = r - nodes.front();
      continue;
    }
    std::vector<int> coords;
    if (typeD && nodes.back() == r - 1) {
      // Chain ending with the spin node alpha_r but not alpha_{r-1}.
      for (std::size_t k = 0; k + 1 < nodes.size(); ++k) coords.push_back(nodes[k] + 1);
      coords.push_back(r - 1);
      coords.push_back(-r);
    } else {
      for (int nidx : nodes) coords.push_back(nidx + 1);
      coords.push_back(nodes.back() + 2);
    }
    f.chains.push_back(coords);
  }
  std::sort(f.chains.begin(), f.chains.end());
  return f;
}

LeviOrbitSpec zero_levi_orbit(const LeviFactors& f) {
  LeviOrbitSpec s;
  for (const auto& c : f.chains)
    s.chain_orbits.push_back({std::vector<int>(c.size(), 1), std::nullopt});
  if (f.d_rank > 0)
    s.d_orbit = Partition{std::vector<int>(2 * f.d_rank, 1), std::nullopt};
  return s;
}

Mat levi_orbit_matrix(const LieAlgebra& g, const LeviDatum& levi,
                      const LeviOrbitSpec& spec) {
  LeviFactors f = levi_factors(*g.datum, levi);
  if (spec.chain_orbits.size() != f.chains.size() ||
      (f.d_rank > 0) != spec.d_orbit.has_value())
    throw std::invalid_argument("levi_orbit_matrix: spec shape mismatch");
  Mat m = zeros(g.mat_size, g.mat_size);
  for (std::size_t ci = 0; ci < f.chains.size(); ++ci) {
    const auto& chain = f.chains[ci];
    const Partition& mu = spec.chain_orbits[ci];
    check_partition(mu);
    if (mu.total() != static_cast<int>(chain.size()))
      throw std::invalid_argument("levi_orbit_matrix: chain partition total mismatch");
    std::size_t pos = 0;
    for (int d : mu.parts) {
      for (int q = 0; q + 1 < d; ++q) {
        int c1 = chain[pos + q], c2 = chain[pos + q + 1];
        Vec root(g.datum->ambient_dim, Rat(0));
        root[std::abs(c1) - 1] += (c1 > 0) ? 1 : -1;
        root[std::abs(c2) - 1] -= (c2 > 0) ? 1 : -1;
        m = mat_add(m, g.matrix_realization[root_symbol(g, root)]);
      }
      pos += d;
    }
  }
  if (f.d_rank > 0) {
    int r = g.datum->rank, s = f.d_rank, t = f.d_start;
    auto small = so_cache(s);
    auto tri = nilpotent_rep(*small, *spec.d_orbit);
    auto amb = [&](int i) { return (i < s) ? (t - 1 + i) : (r + i - s); };
    for (int i = 0; i < 2 * s; ++i)
      for (int j = 0; j < 2 * s; ++j)
        if (tri.e[i][j] != 0) m[amb(i)][amb(j)] = tri.e[i][j];
  }
  return m;
}

std::string levi_class_key(const RootDatum& datum, const LeviDatum& levi) {
  LeviFactors f = levi_factors(datum, levi);
  std::vector<int> sizes;
  std::set<int> covered;
  for (const auto& c : f.chains) {
    sizes.push_back(static_cast<int>(c.size()));
    for (int x : c) covered.insert(std::abs(x));
  }
  int coords = (datum.type_label == 'A') ? datum.rank + 1 : datum.rank;
  if (f.d_rank > 0)
    for (int c = f.d_start; c <= datum.rank; ++c) covered.insert(c);
  for (int c = 1; c <= coords; ++c)
    if (!covered.count(c)) sizes.push_back(1);
  std::sort(sizes.begin(), sizes.end());
  std::ostringstream os;
  for (int s : sizes) os << s << ",";
  if (datum.type_label == 'D') {
    os << "|D" << f.d_rank;
    bool all_even =
        std::all_of(sizes.begin(), sizes.end(), [](int s) { return s % 2 == 0; });
    if (f.d_rank == 0 && all_even) {
      unsigned sm = subset_mask(levi);
      bool minus = (sm & (1u << (datum.rank - 1))) && !(sm & (1u << (datum.rank - 2)));
      os << "|chi" << (minus ? 1 : 0);
    }
  }
  return os.str();
}

InduceResult induce(const LieAlgebra& g, const LeviDatum& levi, const LeviOrbitSpec& spec,
                    int max_tries, unsigned seed_base) {
  Mat em = levi_orbit_matrix(g, levi, spec);
  LieElement el = g.from_matrix(em);
  auto [dim_l, dim_ol] = levi_dims(g, levi, el);
  int target = g.dim - dim_l + dim_ol;

  std::vector<unsigned> masks = support_masks(*g.datum);
  unsigned sm = subset_mask(levi);
  std::vector<int> pu;
  for (int a = 0; a < g.n_pos(); ++a)
    if ((masks[a] & ~sm) != 0) pu.push_back(a);

  for (int t = 0; t < max_tries; ++t) {
    unsigned seed = seed_base * 1000003u + 7919u * t + 12345u;
    std::mt19937 rng(seed);
    LieElement x = el;
    for (int a : pu) x[g.e_index(a)] += Rat(1 + int(rng() % 7));
    if (element_orbit_dim(g, x) != target) continue;
    InduceResult res;
    res.orbit.type = g.datum->type_label;
    res.orbit.rank = g.datum->rank;
    res.orbit.partition = jordan_type(g, x);
    res.orbit.dimension = target;
    res.levi_dim = dim_l;
    res.levi_orbit_dim = dim_ol;
    res.seed = seed;
    return res;
  }
  throw std::runtime_error("induce: no sample met the dimension certificate");
}

Partition induce_combinatorial_A(const std::vector<std::vector<int>>& block_partitions) {
  // Componentwise sum of the padded block partitions.
  std::vector<int> sum;
  for (const auto& mu : block_partitions) {
    check_partition(Partition{mu, std::nullopt});
    if (mu.size() > sum.size()) sum.resize(mu.size(), 0);
    for (std::size_t i = 0; i < mu.size(); ++i) sum[i] += mu[i];
  }
  while (!sum.empty() && sum.back() == 0) sum.pop_back();
  return Partition{sum, std::nullopt};
}

namespace {

/// All orbit specs on the factors of a Levi.
std::vector<LeviOrbitSpec> all_levi_orbits(const LeviFactors& f) {
  std::vector<LeviOrbitSpec> out{LeviOrbitSpec{}};
  for (const auto& chain : f.chains) {
    std::vector<LeviOrbitSpec> next;
    for (const auto& parts : all_partitions(static_cast<int>(chain.size())))
      for (auto spec : out) {
        spec.chain_orbits.push_back({parts, std::nullopt});
        next.push_back(std::move(spec));
      }
    out = std::move(next);
  }
  if (f.d_rank > 0) {
    std::vector<LeviOrbitSpec> next;
    for (const auto& p : orbit_partitions('D', f.d_rank))
      for (auto spec : out) {
        spec.d_orbit = p;
        next.push_back(std::move(spec));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<LeviDatum> levi_class_representatives(const RootDatum& datum,
                                                 bool proper_only) {
  std::vector<LeviDatum> reps;
  std::set<std::string> seen;
  unsigned full = (1u << datum.rank) - 1;
  for (unsigned m = 0; m <= full; ++m) {
    if (proper_only && m == full) continue;
    LeviDatum levi;
    for (int i = 0; i < datum.rank; ++i)
      if (m & (1u << i)) levi.simple_subset.push_back(i);
    std::string key = levi_class_key(datum, levi);
    if (seen.insert(key).second) reps.push_back(levi);
  }
  return reps;
}

}  // namespace

bool is_rigid(const LieAlgebra& g, const OrbitDatum& o) {
  for (const auto& levi : levi_class_representatives(*g.datum, true)) {
    LeviFactors f = levi_factors(*g.datum, levi);
    for (const auto& spec : all_levi_orbits(f)) {
      // Dimension pre-check avoids sampling for mismatched pairs.
      Mat em = levi_orbit_matrix(g, levi, spec);
      LieElement el = g.from_matrix(em);
      auto [dim_l, dim_ol] = levi_dims(g, levi, el);
      if (g.dim - dim_l + dim_ol != o.dimension) continue;
      InduceResult res = induce(g, levi, spec);
      if (res.orbit.partition == o.partition) return false;
    }
  }
  return true;
}

std::vector<int> weighted_dynkin_diagram(const LieAlgebra& g, const OrbitDatum& o) {
  auto tri = nilpotent_rep(g, o.partition);
  int r = g.datum->rank;
  auto as_int = [](const Rat& x) {
    return static_cast<int>(numerator(x).convert_to<long>());
  };
  std::vector<int> labels(r, 0);
  std::vector<Rat> d;
  for (int i = 0; i < g.mat_size; ++i) d.push_back(tri.h[i][i]);
  if (g.datum->type_label == 'A') {
    for (int i = 0; i < r; ++i) labels[i] = as_int(d[i] - d[i + 1]);
  } else {
    for (int i = 0; i + 1 < r; ++i) labels[i] = as_int(d[i] - d[i + 1]);
    labels[r - 1] = as_int(d[r - 2] + d[r - 1]);
  }
  return labels;
}

namespace {

/// Rigid orbit partitions of so_{2s}, by a full induction sweep (memoized).
const std::vector<Partition>& rigid_orbits_D(int s) {
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  auto g = so_cache(s);
  std::set<Partition> induced;
  for (const auto& levi : levi_class_representatives(*g->datum, true)) {
    LeviFactors f = levi_factors(*g->datum, levi);
    for (const auto& spec : all_levi_orbits(f))
      induced.insert(induce(*g, levi, spec).orbit.partition);
  }
  std::vector<Partition> rigid;
  for (const auto& p : orbit_partitions('D', s))
    if (!induced.count(p)) rigid.push_back(p);
  return cache.emplace(s, std::move(rigid)).first->second;
}

}  // namespace

std::vector<SheetDatum> enumerate_sheets(const LieAlgebra& g) {
  std::vector<SheetDatum> sheets;
  for (const auto& levi : levi_class_representatives(*g.datum, false)) {
    LeviFactors f = levi_factors(*g.datum, levi);
    std::vector<LeviOrbitSpec> rigid_specs;
    LeviOrbitSpec base = zero_levi_orbit(f);
    if (f.d_rank >= 3) {
      for (const auto& p : rigid_orbits_D(f.d_rank)) {
        LeviOrbitSpec spec = base;
        spec.d_orbit = p;
        rigid_specs.push_back(spec);
      }
    } else {
      rigid_specs.push_back(base);
    }
    for (const auto& spec : rigid_specs) {
      SheetDatum s;
      s.levi = levi;
      s.rigid_orbit = spec;
      s.induced = induce(g, levi, spec).orbit;
      s.rank = g.datum->rank - static_cast<int>(levi.simple_subset.size());
      s.dimension = s.induced.dimension + s.rank;
      sheets.push_back(std::move(s));
    }
  }
  return sheets;
}

}  // namespace liecert
