#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecert/liealg.hpp"

namespace liecert {

Partition dual_partition(const Partition& p);
/// Chevalley dominance order by partial sums; throws on total mismatch.
bool dominance_leq(const Partition& p, const Partition& q);

/// All partitions of n, weakly decreasing, lexicographically sorted.
std::vector<std::vector<int>> all_partitions(int n);
/// Orbit labels of sl_n (partitions of n) or so_{2r} (P_1(2r), very even
/// partitions expanded into both labels).
std::vector<Partition> orbit_partitions(char type, int rank);

/// Minimal strict dominators of p inside P(n) (type A) or P_1(2r) (type D).
std::vector<Partition> minimal_dominating(const Partition& p, char type);

struct OrbitDatum {
  char type = 'A';
  int rank = 0;
  Partition partition;
  int dimension = 0;
  bool operator==(const OrbitDatum& o) const {
    return type == o.type && rank == o.rank && partition == o.partition;
  }
};
/// Orbit with its dimension computed from a representative.
OrbitDatum make_orbit(const LieAlgebra& g, const Partition& p);

/// Standard Levi: subset of simple-root indices (0-based).
struct LeviDatum {
  std::vector<int> simple_subset;
};

/// Connected factors of a standard Levi.
struct LeviFactors {
  /// Type-A chains as ordered signed 1-based coordinate lists (negative entry
  /// -c stands for -eps_c); the gl factor acts on these lines.
  std::vector<std::vector<int>> chains;
  int d_start = 0;  // 1-based first coordinate of the type D factor; 0 if none
  int d_rank = 0;   // s with factor so_{2s}; s >= 3 when present
};
LeviFactors levi_factors(const RootDatum& datum, const LeviDatum& levi);

/// Orbit on the Levi: one partition per chain plus one for the D factor.
struct LeviOrbitSpec {
  std::vector<Partition> chain_orbits;
  std::optional<Partition> d_orbit;
};
LeviOrbitSpec zero_levi_orbit(const LeviFactors& f);

/// Nilpotent representative of the Levi orbit inside the ambient realization.
Mat levi_orbit_matrix(const LieAlgebra& g, const LeviDatum& levi,
                      const LeviOrbitSpec& spec);

/// Conjugacy class key of a standard Levi (factor multiset; for type D with no
/// D factor and all gl blocks of even size, a chirality bit).
std::string levi_class_key(const RootDatum& datum, const LeviDatum& levi);

struct InduceResult {
  OrbitDatum orbit;
  int levi_dim = 0;
  int levi_orbit_dim = 0;
  unsigned seed = 0;  // sampling seed that produced the certified element
};
/// Lusztig-Spaltenstein induction by generic sampling in orbit + p_u with the
/// codimension-preservation certificate; throws if no sample certifies.
InduceResult induce(const LieAlgebra& g, const LeviDatum& levi, const LeviOrbitSpec& spec,
                    int max_tries = 16, unsigned seed_base = 0);

/// Type A combinatorial oracle: induction of per-block partitions through the
/// Levi of a composition (componentwise sum of padded block partitions).
Partition induce_combinatorial_A(const std::vector<std::vector<int>>& block_partitions);

/// True iff no proper standard Levi orbit induces to o (brute force).
bool is_rigid(const LieAlgebra& g, const OrbitDatum& o);

/// Labels alpha_i(h) for the dominant characteristic h of the orbit.
std::vector<int> weighted_dynkin_diagram(const LieAlgebra& g, const OrbitDatum& o);

struct SheetDatum {
  LeviDatum levi;
  LeviOrbitSpec rigid_orbit;
  OrbitDatum induced;
  int rank = 0;
  int dimension = 0;
};
/// All (Levi class, rigid orbit) pairs with their induced orbit data.
std::vector<SheetDatum> enumerate_sheets(const LieAlgebra& g);

}  // namespace liecert
