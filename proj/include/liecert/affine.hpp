#pragma once

#include <optional>
#include <vector>

#include "liecert/symalg.hpp"

namespace liecert {

/// Polynomial in the level indeterminate k; coefficient of k^i at index i,
/// normalized with no trailing zeros (empty = 0).
using KPoly = std::vector<Rat>;

KPoly kpoly_const(const Rat& c);
KPoly kpoly_add(const KPoly& p, const KPoly& q);
KPoly kpoly_scale(const KPoly& p, const Rat& c);
KPoly kpoly_mul(const KPoly& p, const KPoly& q);
std::string kpoly_to_string(const KPoly& p);

/// PBW letter x(-depth) as (depth, symbol), depth >= 1.  Canonical monomial
/// order: depth-major (deeper modes to the left), ties by basis index.
using AffineMonomial = std::vector<std::pair<int, int>>;
/// Element of V^k(g) homogeneous pieces with coefficients polynomial in k.
using AffineVector = std::map<AffineMonomial, KPoly>;

AffineVector affine_add(const AffineVector& v, const AffineVector& w);
AffineVector affine_scale(const AffineVector& v, const KPoly& c);

/// Action of the mode x(n), n any integer, with K specialized to the
/// indeterminate k.  Normal-orders the result.
AffineVector act(const LieAlgebra& g, int symbol, int n, const AffineVector& v);
/// Same for a general coefficient vector x in place of a basis symbol.
AffineVector act(const LieAlgebra& g, const LieElement& x, int n, const AffineVector& v);

AffineVector vacuum();

/// Common weight of all monomials under the zero modes of h; nullopt if mixed.
std::optional<Vec> affine_weight(const LieAlgebra& g, const AffineVector& v);

/// Symmetrization embedding S^d(g) -> V^k(g): (1/d!) sum over orderings of
/// x_1(-1)...x_d(-1)|0> per monomial.
AffineVector sigma(const LieAlgebra& g, const PolyElement& p);

/// The closed-form expansion of sigma(v0) for sl_{2m}, with its e_theta(-2)
/// reordering term.
AffineVector sigma_v0(const LieAlgebra& g_sl2m);

/// Exact set of levels k at which v is singular.
struct LevelSolution {
  bool all_k = false;
  std::vector<Rat> values;  // sorted, unique; empty with !all_k means "no k"
  bool none() const { return !all_k && values.empty(); }
};

/// Levels at which e_i(0) v = 0 for all simple i and f_theta(1) v = 0.
/// Throws if v is not an h-hat weight vector or a coefficient is nonlinear in k.
LevelSolution singular_levels(const LieAlgebra& g, const AffineVector& v);

}  // namespace liecert
