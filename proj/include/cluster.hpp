#pragma once

// Cluster pictures: a laminar family of subsets of a root index set with
// rational depths, plus the purely combinatorial cluster functions.

#include "qnum.hpp"
#include <optional>
#include <string>
#include <vector>

namespace hyc {

struct Cluster {
  std::vector<int> members;       // sorted root indices
  std::optional<Q> depth;         // absolute depth; may be absent on singletons
  int parent = -1;                // index into ClusterPicture::clusters, -1 for top
  std::vector<int> children;      // indices, ordered by min member
};

struct ClusterAttributes {
  bool proper = false, odd = false, even = false;
  bool ubereven = false, twin = false, cotwin = false, principal = false;
  int genus = 0;
};

struct ClusterPicture {
  int root_count = 0;
  Z leading_valuation = 0;        // v(c_f)
  std::vector<Cluster> clusters;  // every singleton and the full set are nodes
  int top = -1;

  int genus() const { return (root_count - 1) / 2; }
  int size(int s) const { return (int)clusters[s].members.size(); }
  bool is_proper(int s) const { return size(s) >= 2; }
  const Q& depth(int s) const;
  Q delta(int s) const;           // d_s - d_{P(s)}, s != top
  int parent(int s) const { return clusters[s].parent; }

  // re-derive parent/child links and canonical ordering from member sets;
  // returns false if the family is not laminar or misses required nodes
  bool normalize();

  int find(const std::vector<int>& members) const;  // -1 if absent
  int singleton(int root) const;
};

// ok() empty <=> the picture satisfies all structural invariants
std::vector<std::string> validate_picture(const ClusterPicture& p);

ClusterAttributes classify_cluster(const ClusterPicture& p, int s);

int meet(const ClusterPicture& p, int s1, int s2);     // least common ancestor
int meet_root(const ClusterPicture& p, int root, int s);
int star(const ClusterPicture& p, int s);

Q nu(const ClusterPicture& p, int s);                  // s proper
Q lambda_tilde(const ClusterPicture& p, int s);        // s proper

// all proper cluster indices, top-down (parents before children)
std::vector<int> proper_clusters(const ClusterPicture& p);

// convenience: build a picture from explicit member sets + depths
ClusterPicture make_picture(int root_count, const Z& lead_val,
                            const std::vector<std::pair<std::vector<int>, Q>>& proper_nodes);

}  // namespace hyc
