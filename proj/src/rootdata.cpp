#include "liecert/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace liecert {

namespace {

Rat dot(const Vec& x, const Vec& y) {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec eps(int ambient, int i) {  // epsilon_i (1-based)
  Vec v(ambient, Rat(0));
  v[i - 1] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b, const Rat& cb = Rat(1)) {
  Vec c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += cb * b[i];
  return c;
}

/// Height of a positive root = sum of simple-root coefficients.
Rat height(const RootDatum& d, const Vec& alpha) {
  // Solve alpha = sum c_i alpha_i in the simple-root span.
  Mat m(d.ambient_dim, Vec(d.rank, Rat(0)));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.ambient_dim; ++j) m[j][i] = d.simple_roots[i][j];
  Vec b = alpha;
  auto x = solve(m, b);
  if (!x) throw std::logic_error("height: root outside simple-root span");
  Rat h(0);
  for (const auto& c : *x) h += c;
  return h;
}

}  // namespace

Rat RootDatum::inner(const Vec& x, const Vec& y) const { return form_scale * dot(x, y); }

Vec RootDatum::coroot(const Vec& alpha) const {
  Rat n = inner(alpha, alpha);
  Vec c = alpha;
  for (auto& v : c) v = v * 2 / n;
  return c;
}

Rat RootDatum::pair_coroot(const Vec& lambda, const Vec& alpha) const {
  return inner(lambda, coroot(alpha));
}

const Vec& RootDatum::highest_root() const {
  // Positive roots are sorted by height; theta is the last one.
  return positive_roots.back();
}

Vec RootDatum::rho() const {
  Vec r(ambient_dim, Rat(0));
  for (const auto& a : positive_roots) r = add(r, a, Rat(1, 2));
  return r;
}

int RootDatum::positive_root_index(const Vec& alpha) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == alpha) return static_cast<int>(i);
  return -1;
}

std::shared_ptr<const RootDatum> build_root_datum(char type_label, int rank) {
  auto d = std::make_shared<RootDatum>();
  d->type_label = type_label;
  d->rank = rank;
  if (type_label == 'A') {
    if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
    int n = rank + 1;
    d->ambient_dim = n;
    for (int i = 1; i <= rank; ++i)
      d->simple_roots.push_back(add(eps(n, i), eps(n, i + 1), Rat(-1)));
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        d->positive_roots.push_back(add(eps(n, i), eps(n, j), Rat(-1)));
  } else if (type_label == 'D') {
    if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
    int r = rank;
    d->ambient_dim = r;
    for (int i = 1; i < r; ++i)
      d->simple_roots.push_back(add(eps(r, i), eps(r, i + 1), Rat(-1)));
    d->simple_roots.push_back(add(eps(r, r - 1), eps(r, r)));
    for (int j = 2; j <= r; ++j)
      for (int i = 1; i < j; ++i) {
        d->positive_roots.push_back(add(eps(r, i), eps(r, j), Rat(-1)));
        d->positive_roots.push_back(add(eps(r, i), eps(r, j)));
      }
  } else if (type_label == 'G') {
    if (rank != 2) throw std::invalid_argument("type G requires rank 2");
    d->ambient_dim = 3;
    Vec a1 = add(eps(3, 1), eps(3, 2), Rat(-1));
    Vec a2 = add(add(eps(3, 2), eps(3, 3)), eps(3, 1), Rat(-2));
    d->simple_roots = {a1, a2};
    d->form_scale = Rat(1, 3);
    d->positive_roots = {a1,
                         a2,
                         add(a1, a2),
                         add(add(a1, a1), a2),
                         add(add(add(a1, a1), a1), a2),
                         add(add(add(add(a1, a1), a1), a2), a2)};
  } else {
    throw std::invalid_argument("unsupported type label");
  }
  // Sort positive roots by height (then lexicographically) so the highest
  // root sits last.
  std::stable_sort(d->positive_roots.begin(), d->positive_roots.end(),
                   [&](const Vec& x, const Vec& y) {
                     Rat hx = height(*d, x), hy = height(*d, y);
                     if (hx != hy) return hx < hy;
                     return x < y;
                   });
  d->cartan_matrix.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat a = d->pair_coroot(d->simple_roots[i], d->simple_roots[j]);
      d->cartan_matrix[i][j] = static_cast<int>(a.convert_to<long>());
    }
  return d;
}

std::vector<Weight> fundamental_weights(const std::shared_ptr<const RootDatum>& datum) {
  const RootDatum& d = *datum;
  // Write varpi_i = sum_k c_k alpha_k and solve (varpi_i | alpha_j^vee) = delta_ij.
  Mat m(d.rank, Vec(d.rank, Rat(0)));
  for (int k = 0; k < d.rank; ++k)
    for (int j = 0; j < d.rank; ++j)
      m[j][k] = d.pair_coroot(d.simple_roots[k], d.simple_roots[j]);
  std::vector<Weight> fw;
  for (int i = 0; i < d.rank; ++i) {
    Vec rhs(d.rank, Rat(0));
    rhs[i] = 1;
    auto c = solve(m, rhs);
    if (!c) throw std::logic_error("fundamental_weights: Cartan matrix singular");
    Vec w(d.ambient_dim, Rat(0));
    for (int k = 0; k < d.rank; ++k) w = add(w, d.simple_roots[k], (*c)[k]);
    fw.push_back(Weight{w, datum});
  }
  return fw;
}

namespace {

bool same_multiset(Vec a, Vec b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool conjugate_vec(const RootDatum& d, const Vec& a, const Vec& b) {
  if (d.type_label == 'A') return same_multiset(a, b);
  if (d.type_label == 'D') {
    Vec aa = a, bb = b;
    bool has_zero = false;
    int neg_a = 0, neg_b = 0;
    for (auto& x : aa) {
      if (x == 0) has_zero = true;
      if (x < 0) { ++neg_a; x = -x; }
    }
    for (auto& x : bb) {
      if (x == 0) has_zero = true;
      if (x < 0) { ++neg_b; x = -x; }
    }
    if (!same_multiset(aa, bb)) return false;
    return has_zero || (neg_a % 2 == neg_b % 2);
  }
  throw std::invalid_argument("weyl_conjugate: unsupported type");
}

}  // namespace

bool weyl_conjugate(const Weight& lhs, const Weight& rhs) {
  if (lhs.datum != rhs.datum &&
      (lhs.datum->type_label != rhs.datum->type_label || lhs.datum->rank != rhs.datum->rank))
    throw std::invalid_argument("weyl_conjugate: weights on different data");
  return conjugate_vec(*lhs.datum, lhs.coords, rhs.coords);
}

std::optional<Rat> cone_membership(const Weight& lambda, const Weight& target) {
  const RootDatum& d = *lambda.datum;
  bool lz = std::all_of(lambda.coords.begin(), lambda.coords.end(),
                        [](const Rat& x) { return x == 0; });
  bool tz = std::all_of(target.coords.begin(), target.coords.end(),
                        [](const Rat& x) { return x == 0; });
  if (lz || tz) return std::nullopt;  // c must be nonzero
  std::vector<Rat> candidates;
  for (const auto& l : lambda.coords) {
    if (l == 0) continue;
    for (const auto& t : target.coords) {
      if (t == 0) continue;
      for (int sign : {1, -1}) {
        Rat c = sign * l / t;
        if (c == 0) continue;
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
          candidates.push_back(c);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    Vec scaled = target.coords;
    for (auto& x : scaled) x *= c;
    if (conjugate_vec(d, lambda.coords, scaled)) return c;
  }
  return std::nullopt;
}

Int weyl_dimension(const RootDatum& datum, const Vec& lambda) {
  Vec rho = datum.rho();
  Rat num(1), den(1);
  for (const auto& a : datum.positive_roots) {
    Vec lr = lambda;
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += rho[i];
    num *= datum.inner(lr, a);
    den *= datum.inner(rho, a);
  }
  Rat dim = num / den;
  if (denominator(dim) != 1) throw std::logic_error("weyl_dimension: non-integral result");
  return numerator(dim);
}

std::vector<Vec> weyl_orbit_bruteforce(const RootDatum& datum, const Vec& v) {
  int n = datum.ambient_dim;
  if (datum.type_label != 'A' && datum.type_label != 'D')
    throw std::invalid_argument("weyl_orbit_bruteforce: unsupported type");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Vec> orbit;
  auto push = [&](const Vec& w) {
    if (std::find(orbit.begin(), orbit.end(), w) == orbit.end()) orbit.push_back(w);
  };
  do {
    Vec p(n);
    for (int i = 0; i < n; ++i) p[i] = v[perm[i]];
    if (datum.type_label == 'A') {
      push(p);
    } else {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Vec q = p;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) q[i] = -q[i];
        push(q);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

}  // namespace liecert
