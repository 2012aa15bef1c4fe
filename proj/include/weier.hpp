#pragma once

// Weierstrass model data read off the cluster picture: discriminant
// valuations, integrality of a picture together with a leading valuation,
// minimality of the model, the minimal discriminant and the precision to
// which the defining polynomial determines every invariant.

#include "galois.hpp"

namespace hyc {

// v(Delta) = v(c_f)(4g+2) + sum over proper s of d_s(|s|^2 - sum |s'|^2),
// cross-checked internally against the pairwise-meet form
Q disc_valuation(const ClusterPicture& p);

// can p^n f(x - z) have integral coefficients for some shift z
bool is_integral(const ClusterPicture& p, const GaloisData& g, const Z& n);

// least n making the pair integral; requires trivial Galois action,
// integer depths and d_R <= 0
Z minimal_shift_valuation(const ClusterPicture& p);

struct MinimalityResult {
  bool minimal = false;
  std::string certificate;  // witnessing clause and cluster
};

// is y^2 = p^n f(x - z) a minimal Weierstrass model for some shift z;
// requires semistable input
MinimalityResult is_minimal_model(const ClusterPicture& p, const GaloisData& g,
                                  const Z& n);

// valuation of the discriminant of a minimal Weierstrass model; requires
// semistable input and a residue field of size > 2g+1
Q min_disc_valuation(const ClusterPicture& p, const GaloisData& g, const Z& n);

// congruence of monic parts modulo p^bound (with square leading-coefficient
// ratio) preserves every invariant computed here
Z perturbation_bound(const ClusterPicture& p);

}  // namespace hyc
