#pragma once

#include <optional>
#include <vector>

#include "liecert/liealg.hpp"

namespace liecert {

/// Monomial of S(g): sorted multiset of basis symbol indices.
using Monomial = std::vector<int>;
/// Exact polynomial on g* (element of S(g)).
using PolyElement = std::map<Monomial, Rat>;

PolyElement poly_add(const PolyElement& p, const PolyElement& q, const Rat& c = Rat(1));
PolyElement poly_scale(const PolyElement& p, const Rat& c);
PolyElement poly_mul(const PolyElement& p, const PolyElement& q);
PolyElement poly_monomial(Monomial m, const Rat& c = Rat(1));

/// Weight (epsilon coordinates) of a monomial under the Cartan action.
Vec monomial_weight(const LieAlgebra& g, const Monomial& m);
/// Weight of a nonzero weight vector; nullopt if p is not a weight vector.
std::optional<Vec> poly_weight(const LieAlgebra& g, const PolyElement& p);

/// Basis symbol index of the root vector for the given (positive or negative)
/// root in epsilon coordinates.
int root_symbol(const LieAlgebra& g, const Vec& root);
/// Type A convenience: the symbol of e_{i,j}, 1-based, i != j.
int sl_symbol(const LieAlgebra& g, int i, int j);

/// Degree-preserving derivation extension of ad(x).
PolyElement adjoint_act(const LieAlgebra& g, const LieElement& x, const PolyElement& p);

/// Returns the weight if p is an h-weight vector killed by all e_i.
std::optional<Weight> is_singular(const LieAlgebra& g, const PolyElement& p);

/// g-submodule generated by a homogeneous weight vector, with a row-reduced
/// basis.
struct SubmoduleSpan {
  int degree = 0;
  std::vector<PolyElement> basis;
  Weight highest_weight;
};
SubmoduleSpan generate_submodule(const LieAlgebra& g, const PolyElement& v);

/// Basis of the weight-0 subspace of a span.
std::vector<PolyElement> zero_weight_space(const LieAlgebra& g, const SubmoduleSpan& w);

/// Casimir element: sum x_i x^i over dual bases of the normalized form.
PolyElement casimir(const LieAlgebra& g);

/// Evaluates p at the point (x | .) of g*.
Rat poly_eval(const LieAlgebra& g, const PolyElement& p, const LieElement& x);

/// Chevalley projection: component in S(h) along (n_- + n_+) S(g).
/// Requires p of weight 0.
PolyElement chevalley_projection(const LieAlgebra& g, const PolyElement& p);

/// Degree <= 2 Harish-Chandra projection of the symmetrization of p
/// (symmetrized e_alpha f_alpha contributes h_alpha / 2).  Requires weight 0.
PolyElement hc_projection_deg2(const LieAlgebra& g, const PolyElement& p);

/// All singular vectors of the given weight in S^2(g) (kernel of all raising
/// operators on the weight space); used as a decomposition oracle.
std::vector<PolyElement> singular_space_deg2(const LieAlgebra& g, const Vec& weight);

/// The distinguished quadratic vectors.
PolyElement build_v1(const LieAlgebra& g_sln);   // n >= 4
PolyElement build_v0(const LieAlgebra& g_sl2m);  // n = 2m >= 4
PolyElement build_w1(const LieAlgebra& g_so2r);  // r >= 3

}  // namespace liecert
