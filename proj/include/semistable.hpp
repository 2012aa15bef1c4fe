#pragma once

// Semistability decision (two equivalent formulations, kept as a
// cross-check) and the reduction profile of the curve and its Jacobian.

#include "galois.hpp"

namespace hyc {

struct SemistabilityResult {
  bool semistable = false;
  // empty iff semistable; each entry names the failing clause and cluster
  std::vector<std::string> witnesses;
};

// direct criterion: ramification degree <= 2, proper clusters inertia
// invariant, principal clusters with integral depth and even nu
SemistabilityResult check_semistability(const ClusterPicture& p, const GaloisData& g);

// equivalent formulation: one principal anchor with integral depth and even
// nu, relative-depth congruences on all other proper clusters, tame inertia
bool check_semistability_equivalent(const ClusterPicture& p, const GaloisData& g);

struct ReductionProfile {
  bool good = false;
  bool potentially_good = false;
  bool tame = false;
  bool jacobian_good = false;
  bool jacobian_potentially_good = false;
  bool potentially_totally_toric = false;
  int potential_toric_rank = 0;
};

ReductionProfile reduction_profile(const ClusterPicture& p, const GaloisData& g);

}  // namespace hyc
