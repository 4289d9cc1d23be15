#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liecert/rootdata.hpp"

namespace liecert {

/// Sparse element of the Lie algebra in the Chevalley basis.
using LieElement = std::map<int, Rat>;

/// Partition with an optional very even label for type D.
struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  std::optional<char> very_even_label;  // 'I' or 'II' encoded as '1'/'2'

  int total() const;
  bool operator==(const Partition& o) const {
    return parts == o.parts && very_even_label == o.very_even_label;
  }
  bool operator<(const Partition& o) const {
    if (parts != o.parts) return parts < o.parts;
    return very_even_label < o.very_even_label;
  }
  std::string str() const;
};

/// Chevalley basis of sl_n or so_{2r} with an exact matrix realization.
/// Basis symbol layout: e_alpha for alpha in positive-root order, then
/// f_alpha in the same order, then h_1..h_rank.
struct LieAlgebra {
  std::shared_ptr<const RootDatum> datum;
  int dim = 0;        // dim g
  int mat_size = 0;   // n for type A, 2r for type D
  std::vector<Mat> matrix_realization;  // per basis symbol
  // brack[i][j] = [x_i, x_j] as sparse coefficient list
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> structure_constants;
  Mat bilinear_form;  // on the basis; (theta|theta) = 2
  int dual_coxeter = 0;

  int n_pos() const { return static_cast<int>(datum->positive_roots.size()); }
  int e_index(int alpha) const { return alpha; }
  int f_index(int alpha) const { return n_pos() + alpha; }
  int h_index(int i) const { return 2 * n_pos() + i; }  // 0-based simple index
  bool is_cartan_symbol(int s) const { return s >= 2 * n_pos(); }
  /// Root of basis symbol (positive for e, negative for f), zero vector for h.
  Vec symbol_root(int s) const;

  /// Matrix of a sparse element in the realization.
  Mat realize(const LieElement& x) const;
  /// Decomposes a realization matrix into basis coordinates; throws if the
  /// matrix does not lie in the algebra.
  LieElement from_matrix(const Mat& m) const;

  /// Element of the Cartan with prescribed epsilon-coordinates (type A input
  /// must have coordinates summing to zero).
  LieElement cartan_element(const Vec& eps_coords) const;
  /// Epsilon coordinates of a Cartan element.
  Vec cartan_coords(const LieElement& h) const;

  Rat form(const LieElement& x, const LieElement& y) const;
};

std::shared_ptr<const LieAlgebra> build_sl(int n);
std::shared_ptr<const LieAlgebra> build_so_even(int r);

LieElement bracket(const LieAlgebra& g, const LieElement& x, const LieElement& y);
LieElement lie_add(const LieElement& x, const LieElement& y, const Rat& c = Rat(1));
LieElement lie_scale(const LieElement& x, const Rat& c);

/// Jordan type of a nilpotent element (from the matrix realization), with the
/// I/II label for very even type D partitions. Throws if x is not nilpotent.
Partition jordan_type(const LieAlgebra& g, const LieElement& x);
Partition jordan_type_matrix(const LieAlgebra& g, const Mat& m);

/// Matrices (e, h, f) of an sl2 triple realizing the given nilpotent orbit in
/// the algebra's matrix realization, with h diagonal and dominant.
/// Deterministic block construction; exact.
struct TripleMatrices {
  Mat e, h, f;
};
TripleMatrices nilpotent_rep(const LieAlgebra& g, const Partition& p);

/// The outer automorphism of so_{2r} (conjugation by the det=-1 isometry
/// swapping coordinates r and r+1); swaps very even labels. Type D only.
Mat outer_swap(const LieAlgebra& g, const Mat& m);

/// Membership test for P_1(2r): every even part occurs with even multiplicity.
bool in_p1(const std::vector<int>& parts);
bool is_very_even(const std::vector<int>& parts);

}  // namespace liecert
