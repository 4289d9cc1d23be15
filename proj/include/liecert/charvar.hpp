#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "liecert/rootdata.hpp"

namespace liecert {

/// Affine line {base + t * direction} in the Cartan, epsilon coordinates.
/// direction = 0 encodes a single point.
struct LinearComponent {
  Weight base;
  Weight direction;
};

/// Generator lambda_c * (linear . lambda + constant) over the
/// fundamental-weight coordinates lambda_1..lambda_N (coord is 0-based).
struct ProductGen {
  int coord = 0;
  Vec linear;
  Rat constant = Rat(0);
};
struct CaseSystem {
  std::shared_ptr<const RootDatum> datum;
  std::vector<ProductGen> generators;
};

/// The quadratic systems cutting out the characteristic varieties on the
/// Cartan: p_{i,j}, q_i (sl_n at level -1), the homogeneous p_i and the
/// affine \hat p_i (sl_2m at level -m), and p_i (so_2r).
CaseSystem type_a_level_minus1_system(int n);
CaseSystem xi_system(int m);
CaseSystem xi_hat_system(int m);
CaseSystem type_d_system(int r);

/// Value of a generator at a point in lambda coordinates.
Rat eval_generator(const ProductGen& g, const Vec& lam);

/// Complete zero locus as a deduplicated union of points and lines, by case
/// enumeration over vanishing patterns of the distinguished coordinates.
/// Throws if a pattern leaves a solution space of dimension >= 2 or a
/// generator is malformed.
std::vector<LinearComponent> solve_on_cartan(const CaseSystem& sys);

bool component_contains_point(const LinearComponent& c, const Vec& eps_point);
bool component_subset(const LinearComponent& inner, const LinearComponent& outer);

/// Increasing tuples (i_1 < ... < i_s) in {1..2m-1} with
/// sum_k (-1)^k i_k = (-1)^s m.
std::vector<std::vector<int>> lambda_sets(int m, int s);

/// Closed-form component lists: the homogeneous union Xi and the affine
/// union Xi-hat indexed by lambda_sets.
std::vector<LinearComponent> xi_closed_form(int m);
std::vector<LinearComponent> xi_hat_closed_form(int m);

/// Balancing insertion for an increasing tuple in {1..2m-1}: a position and
/// value j whose insertion lands the tuple in Lambda_{s+1}.
struct ClaimInsertion {
  bool balanced = false;  // tuple already satisfies the Lambda_s condition
  int position = 0;       // 0-based insertion index (only when !balanced)
  int value = 0;          // inserted j (only when !balanced)
};
ClaimInsertion claim_j(const std::vector<int>& tuple, int m);

/// For each component, the index of the target cone C* . W(target) met by its
/// generic direction (lines through 0 and asymptotic directions of affine
/// lines; the base point for single points). nullopt = no target matches.
/// Evaluated at two parameters; a disagreement throws.
std::vector<std::optional<int>> classify_components(
    const std::vector<LinearComponent>& comps, const std::vector<Weight>& targets);

}  // namespace liecert
