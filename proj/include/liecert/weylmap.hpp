#pragma once

#include <map>
#include <utility>
#include <vector>

#include "liecert/symalg.hpp"

namespace liecert {

/// Element of the Weyl algebra D_{C^n} in normal order: sum of monomials
/// z^a d^b (all z factors left of all derivatives) with rational coefficients.
struct WeylOperator {
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (a, b)
  int nvars = 0;
  std::map<Key, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const WeylOperator& o) const {
    return nvars == o.nvars && terms == o.terms;
  }
};

WeylOperator weyl_monomial(int nvars, std::vector<int> z_exp, std::vector<int> d_exp,
                           const Rat& c = Rat(1));
WeylOperator weyl_add(const WeylOperator& x, const WeylOperator& y,
                      const Rat& c = Rat(1));
WeylOperator weyl_scale(const WeylOperator& x, const Rat& c);
/// Associative product brought to normal order via the Leibniz rule.
WeylOperator weyl_compose(const WeylOperator& x, const WeylOperator& y);
WeylOperator weyl_commutator(const WeylOperator& x, const WeylOperator& y);

/// The finite realization psi: U(sl_n) -> D_{C^n}, e_{i,j} |-> -z_j d_i
/// (so h_i |-> -z_i d_i + z_{i+1} d_{i+1}). Type A only.
WeylOperator psi(const LieAlgebra& g, const LieElement& x);

/// Image of the symmetrization of a polynomial of degree <= 2: a monomial
/// {s,t} maps to (psi(s) psi(t) + psi(t) psi(s)) / 2.
WeylOperator psi_sym2(const LieAlgebra& g, const PolyElement& p);

/// True iff the symmetrization of every basis vector of W_1 = <v_1> maps
/// to zero under psi.
bool kernel_check_w1(int n);

}  // namespace liecert
