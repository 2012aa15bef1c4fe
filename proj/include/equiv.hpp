#pragma once

// Equivalence moves on cluster pictures, the canonical balanced
// representative and equivalence testing. Moves operate on bare pictures;
// Galois annotations do not transport across root-set changes.

#include "cluster.hpp"

namespace hyc {

struct Move {
  enum Kind { Shift, AddRoot, RemoveRoot, Redistribute } kind;
  Q amount = 0;              // shift / redistribute parameter m
  int root = -1;             // RemoveRoot target
  std::vector<int> cluster;  // Redistribute: members of the child s of R
};

// throws std::invalid_argument naming the violated precondition
ClusterPicture apply_move(const ClusterPicture& p, const Move& mv);

struct BalanceResult {
  ClusterPicture picture;
  std::vector<Move> moves;  // replays from the input to the balanced form
};

// unique equivalent picture with top depth 0, an even root set, no cluster
// other than the top of size > g+1, and zero or two equal-depth clusters of
// size g+1
BalanceResult balance(const ClusterPicture& p);

bool is_balanced(const ClusterPicture& p);

// label-independent serialization of the depth-labelled cluster tree
std::string canonical_form(const ClusterPicture& p);

bool equivalent(const ClusterPicture& a, const ClusterPicture& b);

}  // namespace hyc
