#include "liecert/weylmap.hpp"

#include <stdexcept>

namespace liecert {

namespace {

void insert_term(WeylOperator& w, WeylOperator::Key key, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = w.terms.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) w.terms.erase(it);
  }
}

Rat falling_factorial(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= (n - i);
  return r;
}

Rat binomial(int n, int k) {
  Rat r(1);
  for (int i = 1; i <= k; ++i) r *= Rat(n - i + 1, i);
  return r;
}

}  // namespace

WeylOperator weyl_monomial(int nvars, std::vector<int> z_exp, std::vector<int> d_exp,
                           const Rat& c) {
  if (static_cast<int>(z_exp.size()) != nvars ||
      static_cast<int>(d_exp.size()) != nvars)
    throw std::invalid_argument("weyl_monomial: exponent size");
  WeylOperator w;
  w.nvars = nvars;
  insert_term(w, {std::move(z_exp), std::move(d_exp)}, c);
  return w;
}

WeylOperator weyl_add(const WeylOperator& x, const WeylOperator& y, const Rat& c) {
  if (x.nvars != y.nvars) throw std::invalid_argument("weyl_add: variable count");
  WeylOperator w = x;
  for (const auto& [k, v] : y.terms) insert_term(w, k, Rat(c * v));
  return w;
}

WeylOperator weyl_scale(const WeylOperator& x, const Rat& c) {
  WeylOperator w;
  w.nvars = x.nvars;
  for (const auto& [k, v] : x.terms) insert_term(w, k, Rat(c * v));
  return w;
}

WeylOperator weyl_compose(const WeylOperator& x, const WeylOperator& y) {
  if (x.nvars != y.nvars) throw std::invalid_argument("weyl_compose: variable count");
  int n = x.nvars;
  WeylOperator w;
  w.nvars = n;
  for (const auto& [kx, cx] : x.terms)
    for (const auto& [ky, cy] : y.terms) {
      const auto& [a, b] = kx;  // z^a d^b
      const auto& [c, d] = ky;  // z^c d^d
      // Normal order d^b z^c: each derivative either passes or contracts.
      std::vector<int> contraction(n, 0);
      auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
          Rat coeff = Rat(cx * cy);
          std::vector<int> za(n), db(n);
          for (int j = 0; j < n; ++j) {
            coeff *= binomial(b[j], contraction[j]) *
                     falling_factorial(c[j], contraction[j]);
            za[j] = a[j] + c[j] - contraction[j];
            db[j] = b[j] + d[j] - contraction[j];
          }
          insert_term(w, {std::move(za), std::move(db)}, coeff);
          return;
        }
        int top = std::min(b[i], c[i]);
        for (int e = 0; e <= top; ++e) {
          contraction[i] = e;
          self(self, i + 1);
        }
        contraction[i] = 0;
      };
      rec(rec, 0);
    }
  return w;
}

WeylOperator weyl_commutator(const WeylOperator& x, const WeylOperator& y) {
  return weyl_add(weyl_compose(x, y), weyl_compose(y, x), Rat(-1));
}

WeylOperator psi(const LieAlgebra& g, const LieElement& x) {
  if (g.datum->type_label != 'A') throw std::invalid_argument("psi: type A only");
  int n = g.mat_size;
  WeylOperator w;
  w.nvars = n;
  auto unit_vec = [n](int i) {
    std::vector<int> v(n, 0);
    v[i] = 1;
    return v;
  };
  for (const auto& [s, c] : x) {
    if (g.is_cartan_symbol(s)) {
      int i = s - 2 * g.n_pos();  // h_i = E_{ii} - E_{i+1,i+1}
      insert_term(w, {unit_vec(i), unit_vec(i)}, Rat(-c));
      insert_term(w, {unit_vec(i + 1), unit_vec(i + 1)}, c);
    } else {
      Vec root = g.symbol_root(s);  // e_{i,j} for root eps_i - eps_j
      int i = -1, j = -1;
      for (int t = 0; t < n; ++t) {
        if (root[t] == 1) i = t;
        if (root[t] == -1) j = t;
      }
      insert_term(w, {unit_vec(j), unit_vec(i)}, Rat(-c));  // -z_j d_i
    }
  }
  return w;
}

WeylOperator psi_sym2(const LieAlgebra& g, const PolyElement& p) {
  WeylOperator w;
  w.nvars = g.mat_size;
  for (const auto& [m, c] : p) {
    if (m.empty()) {
      insert_term(w, {std::vector<int>(w.nvars, 0), std::vector<int>(w.nvars, 0)}, c);
    } else if (m.size() == 1) {
      w = weyl_add(w, psi(g, LieElement{{m[0], Rat(1)}}), c);
    } else if (m.size() == 2) {
      WeylOperator a = psi(g, LieElement{{m[0], Rat(1)}});
      WeylOperator b = psi(g, LieElement{{m[1], Rat(1)}});
      w = weyl_add(w, weyl_add(weyl_compose(a, b), weyl_compose(b, a)), Rat(c / 2));
    } else {
      throw std::invalid_argument("psi_sym2: degree > 2");
    }
  }
  return w;
}

bool kernel_check_w1(int n) {
  auto g = build_sl(n);
  auto w1 = generate_submodule(*g, build_v1(*g));
  for (const auto& b : w1.basis)
    if (!psi_sym2(*g, b).is_zero()) return false;
  return true;
}

}  // namespace liecert
