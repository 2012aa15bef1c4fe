#pragma once

// Exact p-adic valuations for roots in Q and Q(sqrt(d)), cluster picture
// construction from a root list, and the Galois annotations (Frobenius /
// inertia permutations and epsilon signs).

#include "cluster.hpp"
#include "galois.hpp"
#include <optional>

namespace hyc {

// a + b*sqrt(d); rational roots have b = 0 (d ignored)
struct RootSpec {
  Q a, b;
  Z d = 0;
  bool is_surd() const { return b != 0; }
};

struct RootSet {
  Z p;                      // odd prime
  Q leading_coefficient;    // c_f, nonzero
  std::vector<RootSpec> roots;
};

// element of Q(sqrt(d)) used for centres and differences
struct QuadElt {
  Q a, b;
  Z d = 0;
  QuadElt conj() const { return {a, -b, d}; }
};

QuadElt sub(const QuadElt& x, const QuadElt& y);
QuadElt mul(const QuadElt& x, const QuadElt& y);

// v(a + b sqrt(d)) in (1/2)Z, p an odd prime, d squarefree and not a square
Q val_element(const Q& a, const Q& b, const Z& d, const Z& p);
Q val_quad(const QuadElt& x, const Z& p);

// throws on duplicate roots, mixed surd bases, non-squarefree d, missing
// conjugates, or even/zero p
void validate_rootset(const RootSet& rs);

struct IngestResult {
  ClusterPicture picture;
  GaloisData galois;
  std::vector<QuadElt> centres;       // per cluster index (proper clusters)
  std::vector<QuadElt> root_values;   // RootSpec as QuadElt, input order
  // pairwise valuation matrix of root differences
  std::vector<std::vector<Q>> distances;
};

// clusters as p-adic discs of the root list: single-linkage over the pairwise
// valuation matrix, depth = minimal internal distance
IngestResult build_from_roots(const RootSet& rs);

// fill frobenius / inertia permutations and residue data
void galois_from_roots(const RootSet& rs, IngestResult& out);

// fill epsilon signs for even clusters and cotwins where determined
void epsilon_signs(const RootSet& rs, IngestResult& out);

// the whole ingestion pipeline
IngestResult ingest(const RootSet& rs);

}  // namespace hyc
