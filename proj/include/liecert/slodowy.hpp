#pragma once

#include "liecert/orbits.hpp"
#include "liecert/symalg.hpp"

namespace liecert {

/// sl2 triple for a nilpotent orbit with its ad(h)-grading by basis symbols.
struct Sl2Triple {
  LieElement e, h, f;
  std::map<int, std::vector<int>> grading;  // eigenvalue -> basis symbols
  OrbitDatum orbit;
};
Sl2Triple sl2_from_orbit(const LieAlgebra& g, const OrbitDatum& o);

/// ad(h)-eigenvalue of a basis symbol for a Cartan element h.
int symbol_grade(const LieAlgebra& g, const LieElement& h, int symbol);

/// Data of the evaluation map C[g*] -> C[chi + m^perp] for chi = (f|.).
struct ChiReduction {
  LieElement f;
  std::vector<LieElement> m_basis;           // Lagrangian + grades >= 2
  std::vector<Rat> chi_values;               // (f | m_k)
  std::vector<LieElement> complement_basis;  // basis of m^perp via the form
};
/// The Lagrangian is selected by symplectic elimination over the ordered
/// g(h,1) symbol basis; variant 1 reverses the order (for invariance checks).
ChiReduction make_chi_reduction(const LieAlgebra& g, const Sl2Triple& t,
                                int lagrangian_variant = 0);

/// Restriction of p to the affine subspace chi + m^perp; output monomials are
/// indices into complement_basis.
PolyElement reduce_mod_chi(const LieAlgebra& g, const PolyElement& p,
                           const ChiReduction& r);

enum class VarietyVerdict { Certified, Unknown };
struct VarietyCertificate {
  VarietyVerdict verdict = VarietyVerdict::Unknown;
  PolyElement witness;  // element of the ideal reducing to a nonzero constant
  Rat constant;
};
/// Certificate that G.f is not contained in V(I_W): some product of W-basis
/// elements of total degree <= degree_bound reduces to a nonzero constant.
VarietyCertificate orbit_not_in_variety(const LieAlgebra& g, const SubmoduleSpan& w,
                                        const OrbitDatum& o, int degree_bound = 2,
                                        int lagrangian_variant = 0);

/// The unique eta(x) in g(h,2) with x - [f, eta(x)] in g^e, for x in g(h,0).
LieElement eta_correction(const LieAlgebra& g, const LieElement& x, const Sl2Triple& t);

/// exp(ad eta(t*lambda))(f + t*lambda); requires g(h,i) = 0 for |i| > 2.
LieElement slice_curve_point(const LieAlgebra& g, const Rat& tval,
                             const LieElement& lambda, const Sl2Triple& t);

}  // namespace liecert
