#pragma once

// Homology of the dual graph with length pairing and Frobenius action, the
// conductor exponent (semistable, general tame, wild with supplied field
// data), Tamagawa number, root number and deficiency.

#include "dualgraph.hpp"
#include "matz.hpp"

#include <array>

namespace hyc {

struct HomologyLattice {
  std::vector<int> A;   // even non-ubereven clusters != top, sorted
  std::vector<int> B;   // subset of A whose star is the top cluster
  int rank = 0;
  // basis entries: (s, -1) stands for ell_s, (s, s0) for ell_s - ell_{s0}
  std::vector<std::pair<int, int>> basis;
  MatZ gram;            // positive definite
  MatZ frob;            // signed permutation in this basis, F^T G F = G
};

// throws on non-semistable input or when a required epsilon sign is unknown
HomologyLattice homology_lattice(const ClusterPicture& p, const GaloisData& g);

// H_1 computed directly from the expanded graph: spanning tree plus
// fundamental cycles, pairing by shared edge count
MatZ cycle_space_gram(const DualGraph& dg);

// exact integral isometry search for small positive definite lattices;
// falls back to determinant + elementary divisor comparison beyond rank 4
bool lattices_isometric(const MatZ& g1, const MatZ& g2);

int conductor_semistable(const ClusterPicture& p, const GaloisData& g);

struct TameConductor {
  int tame_part;      // 2g - invariant_dim
  int invariant_dim;  // dim of the inertia invariants of H^1
};

// general tame case; requires only tame (not semistable) input
TameConductor conductor_tame_general(const ClusterPicture& p, const GaloisData& g);

// one (v(disc), degree, residue degree) triple per Galois orbit of roots
Z conductor_wild(const std::vector<std::array<Z, 3>>& orbit_data);

// order of the Frobenius-fixed part of coker(gram), via Smith normal form
Z tamagawa(const HomologyLattice& hl);

int root_number(const HomologyLattice& hl);  // (-1)^dim ker(frob - 1)

bool deficiency(const ClusterPicture& p, const GaloisData& g);

}  // namespace hyc
