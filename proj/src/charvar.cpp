#include "liecert/charvar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liecert {

namespace {

Vec lam_to_eps(const std::shared_ptr<const RootDatum>& datum, const Vec& lam) {
  auto fw = fundamental_weights(datum);
  Vec eps(datum->ambient_dim, Rat(0));
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < datum->ambient_dim; ++j) eps[j] += lam[i] * fw[i].coords[j];
  return eps;
}

Vec eps_to_lam(const RootDatum& datum, const Vec& eps) {
  Vec lam(datum.rank, Rat(0));
  for (int i = 0; i < datum.rank; ++i)
    lam[i] = datum.pair_coroot(eps, datum.simple_roots[i]);
  return lam;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

int first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

/// Canonical (base, direction) pair in lambda coordinates: direction scaled to
/// leading coefficient 1, base reduced to have zero leading coordinate.
struct CanonComp {
  Vec base, dir;
  bool operator<(const CanonComp& o) const {
    if (dir != o.dir) return dir < o.dir;
    return base < o.base;
  }
  bool operator==(const CanonComp& o) const { return base == o.base && dir == o.dir; }
};

CanonComp canonicalize(Vec base, Vec dir) {
  int p = first_nonzero(dir);
  if (p >= 0) {
    Rat lead = dir[p];
    for (auto& x : dir) x /= lead;
    Rat t = base[p];
    for (std::size_t i = 0; i < base.size(); ++i) base[i] -= t * dir[i];
  }
  return CanonComp{std::move(base), std::move(dir)};
}

bool canon_contains(const CanonComp& c, const Vec& lam) {
  int p = first_nonzero(c.dir);
  if (p < 0) return lam == c.base;
  Rat t = (lam[p] - c.base[p]) / c.dir[p];
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (lam[i] != c.base[i] + t * c.dir[i]) return false;
  return true;
}

bool canon_subset(const CanonComp& a, const CanonComp& b) {
  if (!canon_contains(b, a.base)) return false;
  if (is_zero_vec(a.dir)) return true;
  Vec shifted = a.base;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += a.dir[i];
  return canon_contains(b, shifted);
}

std::vector<LinearComponent> to_components(
    const std::shared_ptr<const RootDatum>& datum, std::vector<CanonComp> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<LinearComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      if (j != i && canon_subset(comps[i], comps[j]) && !(comps[i] == comps[j]))
        redundant = true;
    if (redundant) continue;
    out.push_back(LinearComponent{Weight{lam_to_eps(datum, comps[i].base), datum},
                                  Weight{lam_to_eps(datum, comps[i].dir), datum}});
  }
  return out;
}

int alternating_sum(const std::vector<int>& t) {
  int s = 0;
  for (std::size_t k = 0; k < t.size(); ++k)
    s += (k % 2 == 0) ? -t[k] : t[k];  // (-1)^k with 1-based k
  return s;
}

bool in_lambda_set(const std::vector<int>& t, int m) {
  int sign = (t.size() % 2 == 0) ? 1 : -1;
  return alternating_sum(t) == sign * m;
}

}  // namespace

CaseSystem type_a_level_minus1_system(int n) {
  if (n < 4) throw std::invalid_argument("type_a_level_minus1_system: n >= 4");
  CaseSystem sys;
  sys.datum = build_root_datum('A', n - 1);
  int rank = n - 1;
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 2; j <= rank; ++j) {
      ProductGen g;
      g.coord = i - 1;
      g.linear = Vec(rank, Rat(0));
      g.linear[j - 1] = 1;
      sys.generators.push_back(std::move(g));
    }
  for (int i = 2; i <= n - 2; ++i) {
    ProductGen g;
    g.coord = i - 1;
    g.linear = Vec(rank, Rat(0));
    g.linear[i - 2] = 1;
    g.linear[i - 1] = 1;
    g.linear[i] = 1;
    sys.generators.push_back(std::move(g));
  }
  return sys;
}

CaseSystem xi_hat_system(int m) {
  if (m < 2) throw std::invalid_argument("xi_hat_system: m >= 2");
  CaseSystem sys = xi_system(m);
  for (int i = 1; i <= 2 * m - 1; ++i)
    sys.generators[i - 1].constant = Rat(m - i);
  return sys;
}

CaseSystem xi_system(int m) {
  if (m < 2) throw std::invalid_argument("xi_system: m >= 2");
  CaseSystem sys;
  sys.datum = build_root_datum('A', 2 * m - 1);
  int rank = 2 * m - 1;
  for (int i = 1; i <= rank; ++i) {
    ProductGen g;
    g.coord = i - 1;
    g.linear = Vec(rank, Rat(0));
    for (int j = 1; j < i; ++j) g.linear[j - 1] = Rat(-j, m);
    g.linear[i - 1] = Rat(m - i, m);
    for (int j = i + 1; j <= rank; ++j) g.linear[j - 1] = Rat(2 * m - j, m);
    sys.generators.push_back(std::move(g));
  }
  return sys;
}

CaseSystem type_d_system(int r) {
  if (r < 4) throw std::invalid_argument("type_d_system: r >= 4");
  CaseSystem sys;
  sys.datum = build_root_datum('D', r);
  for (int i = 1; i <= r - 2; ++i) {
    ProductGen g;
    g.coord = i - 1;
    g.linear = Vec(r, Rat(0));
    g.linear[i - 1] = 1;
    for (int j = i + 1; j <= r - 2; ++j) g.linear[j - 1] = 2;
    g.linear[r - 2] = 1;
    g.linear[r - 1] = 1;
    sys.generators.push_back(std::move(g));
  }
  // Boundary generators collapse to h_{r-1} h_r (both orderings).
  for (int i : {r - 1, r}) {
    ProductGen g;
    g.coord = i - 1;
    g.linear = Vec(r, Rat(0));
    g.linear[(i == r - 1) ? r - 1 : r - 2] = 1;
    sys.generators.push_back(std::move(g));
  }
  return sys;
}

Rat eval_generator(const ProductGen& g, const Vec& lam) {
  Rat lin = g.constant;
  for (std::size_t i = 0; i < lam.size(); ++i) lin += g.linear[i] * lam[i];
  return Rat(lam[g.coord] * lin);
}

std::vector<LinearComponent> solve_on_cartan(const CaseSystem& sys) {
  int rank = sys.datum->rank;
  std::vector<int> coords;
  for (const auto& g : sys.generators) {
    if (g.coord < 0 || g.coord >= rank || static_cast<int>(g.linear.size()) != rank)
      throw std::invalid_argument("solve_on_cartan: malformed generator");
    coords.push_back(g.coord);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  if (coords.size() > 20)
    throw std::invalid_argument("solve_on_cartan: too many distinguished coordinates");

  std::vector<CanonComp> comps;
  for (unsigned mask = 0; mask < (1u << coords.size()); ++mask) {
    std::set<int> vanishing;
    for (std::size_t b = 0; b < coords.size(); ++b)
      if (mask & (1u << b)) vanishing.insert(coords[b]);
    Mat a;
    Vec rhs;
    for (int c : vanishing) {
      Vec row(rank, Rat(0));
      row[c] = 1;
      a.push_back(std::move(row));
      rhs.push_back(Rat(0));
    }
    for (const auto& g : sys.generators) {
      if (vanishing.count(g.coord)) continue;
      a.push_back(g.linear);
      rhs.push_back(Rat(-g.constant));
    }
    auto particular = solve(a, rhs);
    if (!particular) continue;
    auto kern = kernel_basis(a);
    if (kern.size() >= 2)
      throw std::runtime_error("solve_on_cartan: component of dimension >= 2");
    comps.push_back(canonicalize(*particular,
                                 kern.empty() ? Vec(rank, Rat(0)) : kern[0]));
  }
  return to_components(sys.datum, std::move(comps));
}

bool component_contains_point(const LinearComponent& c, const Vec& eps_point) {
  const auto& datum = *c.base.datum;
  return canon_contains(canonicalize(eps_to_lam(datum, c.base.coords),
                                     eps_to_lam(datum, c.direction.coords)),
                        eps_to_lam(datum, eps_point));
}

bool component_subset(const LinearComponent& inner, const LinearComponent& outer) {
  const auto& datum = *inner.base.datum;
  return canon_subset(canonicalize(eps_to_lam(datum, inner.base.coords),
                                   eps_to_lam(datum, inner.direction.coords)),
                      canonicalize(eps_to_lam(datum, outer.base.coords),
                                   eps_to_lam(datum, outer.direction.coords)));
}

std::vector<std::vector<int>> lambda_sets(int m, int s) {
  if (s < 1 || s > 2 * m - 1) throw std::invalid_argument("lambda_sets: 1 <= s <= 2m-1");
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(t.size()) == s) {
      if (in_lambda_set(t, m)) out.push_back(t);
      return;
    }
    for (int i = next; i <= 2 * m - 1; ++i) {
      t.push_back(i);
      self(self, i + 1);
      t.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<LinearComponent> xi_closed_form(int m) {
  auto datum = build_root_datum('A', 2 * m - 1);
  std::vector<CanonComp> comps;
  for (int s = 1; s <= 2 * m - 1; ++s)
    for (const auto& t : lambda_sets(m, s)) {
      Vec dir(2 * m - 1, Rat(0));
      for (std::size_t k = 0; k < t.size(); ++k)
        dir[t[k] - 1] = (k % 2 == 0) ? -1 : 1;  // (-1)^j, j = k+1
      comps.push_back(canonicalize(Vec(2 * m - 1, Rat(0)), std::move(dir)));
    }
  return to_components(datum, std::move(comps));
}

std::vector<LinearComponent> xi_hat_closed_form(int m) {
  auto datum = build_root_datum('A', 2 * m - 1);
  std::vector<CanonComp> comps;
  for (int s = 1; s <= 2 * m - 1; ++s)
    for (const auto& t : lambda_sets(m, s)) {
      Vec base(2 * m - 1, Rat(0)), dir(2 * m - 1, Rat(0));
      dir[t[0] - 1] = 1;
      for (int j = 2; j <= s; ++j) {
        int cj = t[0];
        for (int k = 2; k <= j - 1; ++k)
          cj += 2 * ((k % 2 == 0) ? -1 : 1) * t[k - 1];  // (-1)^{k+1}
        cj += ((j % 2 == 0) ? -1 : 1) * t[j - 1];        // (-1)^{j+1}
        int sj = (j % 2 == 0) ? 1 : -1;                  // (-1)^j
        dir[t[j - 1] - 1] = -sj;
        base[t[j - 1] - 1] = Rat(sj * cj);
      }
      comps.push_back(canonicalize(std::move(base), std::move(dir)));
    }
  return to_components(datum, std::move(comps));
}

ClaimInsertion claim_j(const std::vector<int>& tuple, int m) {
  for (std::size_t k = 0; k + 1 < tuple.size(); ++k)
    if (tuple[k] >= tuple[k + 1])
      throw std::invalid_argument("claim_j: tuple must be strictly increasing");
  for (int v : tuple)
    if (v < 1 || v > 2 * m - 1) throw std::invalid_argument("claim_j: range");
  if (in_lambda_set(tuple, m)) return ClaimInsertion{true, 0, 0};
  for (int j = 1; j <= 2 * m - 1; ++j) {
    if (std::binary_search(tuple.begin(), tuple.end(), j)) continue;
    auto ext = tuple;
    auto pos = std::upper_bound(ext.begin(), ext.end(), j);
    int idx = static_cast<int>(pos - ext.begin());
    ext.insert(pos, j);
    if (in_lambda_set(ext, m)) return ClaimInsertion{false, idx, j};
  }
  throw std::logic_error("claim_j: no balancing insertion exists");
}

std::vector<std::optional<int>> classify_components(
    const std::vector<LinearComponent>& comps, const std::vector<Weight>& targets) {
  std::vector<std::optional<int>> out;
  for (const auto& c : comps) {
    const Vec& probe =
        is_zero_vec(c.direction.coords) ? c.base.coords : c.direction.coords;
    auto match_at = [&](const Rat& t) -> std::optional<int> {
      Vec p = probe;
      for (auto& x : p) x *= t;
      for (std::size_t i = 0; i < targets.size(); ++i)
        if (cone_membership(Weight{p, c.base.datum}, targets[i]))
          return static_cast<int>(i);
      return std::nullopt;
    };
    auto m1 = match_at(Rat(1));
    auto m2 = match_at(Rat(2));
    if (m1 != m2)
      throw std::runtime_error("classify_components: parameter disagreement");
    out.push_back(m1);
  }
  return out;
}

}  // namespace liecert
