#pragma once

// Small exact integer / rational matrix helpers: Smith normal form with
// transforms, determinants, ranks. Everything here is desk-scale (rank <= ~10).

#include "qnum.hpp"
#include <vector>

namespace hyc {

using MatZ = std::vector<std::vector<Z>>;
using MatQ = std::vector<std::vector<Q>>;

MatZ identity_z(int n);
MatZ mul(const MatZ& a, const MatZ& b);
MatZ transpose(const MatZ& a);
Z det(MatZ a);               // Bareiss, exact
int rank_q(MatQ a);          // Gaussian elimination over Q
MatQ to_q(const MatZ& a);
// inverse of a unimodular integer matrix (det +-1); throws otherwise
MatZ inv_unimodular(const MatZ& a);

// U * A * V = D diagonal with d1 | d2 | ..., U and V unimodular
struct Smith {
  MatZ u, v, d;
};
Smith smith_normal_form(MatZ a);

}  // namespace hyc
