#pragma once

// Compact bracket notation for cluster pictures, e.g.
//   [[r r r]_2 [r [r r r]_2]_1]_0
// The top subscript is the absolute depth, inner subscripts are relative
// depths, and even clusters may carry a sign: [r r]_1^+ .

#include "cluster.hpp"
#include "galois.hpp"
#include <string>

namespace hyc {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct ParsedPicture {
  ClusterPicture picture;
  GaloisData galois;   // trivial permutations; epsilon filled from signs
};

ParsedPicture parse_picture(const std::string& text, const Z& leading_valuation = 0);

// canonical serialization; roots are renumbered in preorder, children ordered
// by least member. Signs are emitted for clusters present in g.epsilon.
std::string serialize_picture(const ClusterPicture& p, const GaloisData* g = nullptr);

}  // namespace hyc
