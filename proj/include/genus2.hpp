#pragma once

// Reduction-type classification for semistable genus 2 curves, the closed-form
// invariant table indexed by type, and representative cluster pictures per
// type. Types are recognized from the dual graph: suppressing genus-0 vertices
// of degree 2 leaves one of finitely many core shapes (a single genus-2
// vertex, two genus-1 vertices joined by a chain, a vertex with one or two
// loops, a theta graph, or a dumbbell), and Frobenius acts on the core.

#include "invariants.hpp"

namespace hyc {

struct Genus2Type {
  enum Family {
    Good,          // 2
    Chain,         // 1 x_r 1
    ChainFrob,     // 1 x~_r 1, Frobenius swaps the two genus-1 components
    OneLoop,       // 1_n^e
    ChainOneLoop,  // 1 x_r I_n^e
    TwoLoops,      // I_{n,m}^{e1,e2}
    TwoLoopsFrob,  // I_{n~n}^e, Frobenius swaps the loops
    Theta,         // U_{n,m,k}^e
    ThetaFrob2,    // U_{n~n,k}^e, Frobenius swaps two chains
    ThetaFrob3,    // U_{n~n~n}^e, Frobenius cycles the three chains
    Dumbbell,      // I_n^{e1} x_r I_m^{e2}
    DumbbellFrob,  // I_n^e x~_r I_n, Frobenius swaps the two ends
  } family = Good;
  int n = 0, m = 0, k = 0, r = 0;
  int eps1 = 0, eps2 = 0;  // eps1 is the only sign for single-sign families

  std::string label() const;
  bool operator==(const Genus2Type&) const = default;
};

// Sign normalization: for TwoLoops and Dumbbell a "+" loop is listed before a
// "-" loop (so eps1 >= eps2), and equal-sign loops are ordered by n <= m;
// Theta parameters are sorted ascending. For the Frobenius-linked families
// the single sign is the product of the two loop signs, the only invariant.
Genus2Type classify_genus2(const ClusterPicture& p, const GaloisData& g);

struct Genus2Invariants {
  Z components;
  int conductor;
  int root_number;
  Z tamagawa;
  bool deficient;
  Z min_disc;
  bool operator==(const Genus2Invariants&) const = default;
};

Genus2Invariants table_invariants(const Genus2Type& t);

// a semistable cluster picture with this reduction type; leading valuation is
// r mod 2 for the chain-joined families and 0 otherwise
std::pair<ClusterPicture, GaloisData> genus2_representative(const Genus2Type& t,
                                                            const Z& p);

// genus 2: the table label; other genera: the canonical annotated picture
std::string reduction_type_label(const ClusterPicture& p, const GaloisData& g);

}  // namespace hyc
