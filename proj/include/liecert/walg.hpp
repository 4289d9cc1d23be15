#pragma once

#include <optional>
#include <string>

#include "liecert/slodowy.hpp"

namespace liecert {

/// W-algebra parameters: the algebra, an sl2 triple for f, and the level.
struct WParams {
  std::shared_ptr<const LieAlgebra> g;
  Sl2Triple triple;
  Rat k;
};

/// Central charge of W^k(g, f):
///   dim g(h,0) - 1/2 dim g(h,1)
///     - 12 [ (rho|rho)/(k+hv) - (rho|h) + (k+hv)(h|h)/4 ].
/// Throws at the critical level k = -hv.
Rat central_charge(const WParams& p);

/// Expansion c(k) = constant + inv_coeff/(k+hv) + mid + lin_coeff*(k+hv),
/// exposed for cross-checking the three coefficients against the root datum.
struct CentralChargeExpansion {
  Rat constant;   // dim g(h,0) - 1/2 dim g(h,1)
  Rat inv_coeff;  // -12 (rho|rho)
  Rat mid;        // +12 (rho|h)
  Rat lin_coeff;  // -3 (h|h)
};
CentralChargeExpansion central_charge_expansion(const LieAlgebra& g,
                                                const Sl2Triple& t);

/// Coxeter numbers and lacing number by Cartan type ('A', 'D', 'G').
struct AlgebraNumerics {
  int dual_coxeter = 0;
  int coxeter = 0;
  int lacing = 1;
};
AlgebraNumerics algebra_numerics(char type, int rank);

/// Principal admissibility: k + hv = p/q in lowest terms with q >= 1 and
/// p >= hv when gcd(q, lacing) = 1, p >= h when lacing divides q.
/// Returns the denominator q on success.
std::optional<Int> is_admissible(char type, int rank, const Rat& k);

/// One natural-level table row: k_i^nat(k) = a*k + b for component i of
/// g^nat, for the minimal nilpotent of the algebra (type, rank).
struct NaturalLevelRow {
  char g_type = 'A';
  int rank = 0;
  int component_index = 0;
  Rat a, b;
  std::string source_note;
};
using NaturalLevelTable = std::vector<NaturalLevelRow>;

/// Reads the JSON table (array of rows; rationals as "p/q" strings).
NaturalLevelTable load_natural_levels(const std::string& path);

/// Lisse criterion for the minimal W-algebra: every k_i^nat with i >= 1 is a
/// nonnegative integer. Type A is outside the theorem's hypothesis and the
/// call throws, as it does when the table has no rows for the algebra.
bool minimal_lisse(char type, int rank, const Rat& k, const NaturalLevelTable& table);

}  // namespace liecert
