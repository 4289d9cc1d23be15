#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liecert/linalg.hpp"
#include "liecert/rat.hpp"

namespace liecert {

/// A simple root system with exact rational coordinates in the epsilon basis.
/// Supported constructions: type A (rank >= 1, ambient n = rank+1), type D
/// (rank >= 3, ambient r = rank) and type G (rank 2, ambient 3, root data
/// only). Simple roots follow Bourbaki numbering; for type D the spin nodes
/// are r-1 and r.
struct RootDatum {
  char type_label = 'A';
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> simple_roots;       // epsilon coordinates
  std::vector<Vec> positive_roots;     // ordered by height, then lexicographic
  std::vector<std::vector<int>> cartan_matrix;
  Rat form_scale = Rat(1);  // normalized form = form_scale * (dot product)

  /// Normalized invariant form with (theta|theta) = 2.
  Rat inner(const Vec& x, const Vec& y) const;
  Vec coroot(const Vec& alpha) const;  // 2 alpha / (alpha|alpha)
  Rat pair_coroot(const Vec& lambda, const Vec& alpha) const;  // (lambda|alpha^vee)

  const Vec& highest_root() const;  // theta
  Vec rho() const;                  // half sum of positive roots

  int positive_root_index(const Vec& alpha) const;  // -1 if not a positive root
};

/// A weight written in epsilon coordinates, tied to its root datum.
struct Weight {
  Vec coords;
  std::shared_ptr<const RootDatum> datum;
};

std::shared_ptr<const RootDatum> build_root_datum(char type_label, int rank);

/// Fundamental weights (in the span of the simple roots; for type A this is
/// the trace-zero hyperplane).
std::vector<Weight> fundamental_weights(const std::shared_ptr<const RootDatum>& datum);

/// True iff some Weyl group element maps lhs to rhs. Types A and D only.
bool weyl_conjugate(const Weight& lhs, const Weight& rhs);

/// Returns c != 0 with lhs Weyl-conjugate to c * target, if any.
std::optional<Rat> cone_membership(const Weight& lambda, const Weight& target);

/// Weyl dimension formula for a dominant integral weight lambda.
Int weyl_dimension(const RootDatum& datum, const Vec& lambda);

/// All Weyl images of a weight via explicit group enumeration (test oracle;
/// type A: all permutations, type D: signed permutations with an even number
/// of sign changes). Intended for small ranks only.
std::vector<Vec> weyl_orbit_bruteforce(const RootDatum& datum, const Vec& v);

}  // namespace liecert
