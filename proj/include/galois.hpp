#pragma once

// Frobenius / inertia annotations for a cluster picture: root permutations,
// epsilon signs on even clusters and cotwins, residue field data.

#include "cluster.hpp"
#include <map>

namespace hyc {

struct GaloisData {
  std::vector<int> frobenius;  // permutation of root indices
  std::vector<int> inertia;    // permutation of root indices, order <= 2 here
  // cluster index -> +1 / -1; absence means "unknown" where epsilon is defined
  std::map<int, int> epsilon;
  Z residue_size = 0;          // p (0 when no arithmetic context was supplied)
  bool tame = true;
  bool tame_attested = true;   // true when tameness is user-asserted, not derived
  bool from_roots = false;

  static GaloisData trivial(int root_count, const Z& p = 0);
};

// image of a cluster under a root permutation; -1 if the image set is not a node
int cluster_image(const ClusterPicture& p, const std::vector<int>& perm, int s);

// perm induces a depth-preserving automorphism of the picture
bool is_picture_automorphism(const ClusterPicture& p, const std::vector<int>& perm);

int perm_order(const std::vector<int>& perm);

// orbits of clusters under the subgroup generated by perm
std::vector<std::vector<int>> cluster_orbits(const ClusterPicture& p,
                                             const std::vector<int>& perm);

// epsilon value for a cluster, looked up with the convention that the sign
// lives on s (computed through theta at star(s)); 0 = unknown
int epsilon_of(const GaloisData& g, int s);

}  // namespace hyc
