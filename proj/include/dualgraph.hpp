#pragma once

// Dual graph of the special fibre of the minimal regular model over the
// maximal unramified extension, for semistable input: vertices per principal
// cluster, weighted chains, Frobenius action, component equations, component
// counts, the stable graph and point reduction.

#include "padic.hpp"
#include "semistable.hpp"

namespace hyc {

enum class ChainKind {
  OddChild,        // v_{s'} -> v_s, length delta/2
  EvenChildPlus,   // v_{s'}^+ -> v_s^+, length delta
  EvenChildMinus,
  TwinLoop,        // v_s^- -> v_s^+, length 2 delta_t
  CotwinLoop,      // v_c^- -> v_c^+, length 2 delta_c, c principal child
  SplitTopOdd,     // R = c1 u c2 odd: v_{c1} -> v_{c2}
  SplitTopPlus,    // R = c1 u c2 even: v_{c1}^± -> v_{c2}^±
  SplitTopMinus,
  SplitTopTwin,    // R = c u t: v_c^- -> v_c^+, length 2(delta_c + delta_t)
};

struct GraphVertex {
  int cluster;
  int sign;   // 0 when the cluster is not ubereven, else +1 / -1
  int genus;
};

struct GraphChain {
  std::string name;
  int from, to;       // vertex indices
  Z length;           // positive integer for semistable-over-K input
  ChainKind kind;
  int cluster;        // the defining cluster (child / twin / cotwin / c1)
};

struct DualGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphChain> chains;
  // Frobenius as a graph automorphism
  std::vector<int> vertex_image;
  std::vector<int> chain_image;
  std::vector<int> chain_orientation;  // +1 forward, -1 reversed
};

// throws std::invalid_argument on non-semistable input and std::runtime_error
// naming the clusters whose epsilon sign is unknown but required
DualGraph dual_graph(const ClusterPicture& p, const GaloisData& g);

// chains materialized as unit edges with intermediate genus-0 vertices
struct ExpandedGraph {
  int core_vertices = 0;  // dual-graph vertices come first
  int total_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_chain;  // originating chain index
};

ExpandedGraph expand(const DualGraph& dg);

int cycle_rank(const ExpandedGraph& eg);  // rank of H_1

// m_C, by the delta-sum formula and by counting the built graph (asserted equal)
Z count_components(const ClusterPicture& p, const GaloisData& g);

// same vertex set, every chain shrunk to a single edge of length 1
DualGraph stable_graph(const ClusterPicture& p, const GaloisData& g);

std::string emit_dot(const DualGraph& dg, const ClusterPicture& p);

// element of F_p (b = 0) or F_p(sqrt d) for the fixed non-residue d
struct Residue {
  Z a = 0, b = 0;
  bool operator==(const Residue&) const = default;
};

struct ComponentDescriptor {
  int cluster;
  int genus;
  bool quadratic = false;  // residues need F_{p^2}
  Residue c_s;
  std::vector<std::pair<int, Residue>> branch_points;    // odd children
  std::vector<std::pair<int, Residue>> squared_points;   // twins of rel. depth 1/2
};

ComponentDescriptor component_descriptor(const RootSet& rs, const IngestResult& in, int s);

struct ReducedPoint {
  int component = -1;   // principal cluster index; -1 when in a chain
  bool at_infinity = false;
  Residue x, y;
  // set when the point lands in the interior of a chain
  int chain_from = -1, chain_to = -1;
};

ReducedPoint reduce_point(const RootSet& rs, const IngestResult& in,
                          const QuadElt& x, const QuadElt& y);

}  // namespace hyc
