#include "semistable.hpp"

#include <sstream>

namespace hyc {

namespace {

std::string cluster_name(const ClusterPicture& p, int s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < p.clusters[s].members.size(); ++i)
    os << (i ? "," : "") << p.clusters[s].members[i];
  os << "}";
  return os.str();
}

}  // namespace

SemistabilityResult check_semistability(const ClusterPicture& p, const GaloisData& g) {
  SemistabilityResult res;
  if (!g.tame)
    res.witnesses.push_back("clause 1: K(R)/K is wildly ramified");
  else if (perm_order(g.inertia) > 2)
    res.witnesses.push_back("clause 1: ramification degree exceeds 2");
  for (int s : proper_clusters(p)) {
    if (cluster_image(p, g.inertia, s) != s)
      res.witnesses.push_back("clause 2: cluster " + cluster_name(p, s) +
                              " is not inertia-invariant");
    if (!classify_cluster(p, s).principal) continue;
    if (!is_integer(p.depth(s)))
      res.witnesses.push_back("clause 3: principal cluster " + cluster_name(p, s) +
                              " has non-integral depth");
    if (!is_even_integer(nu(p, s)))
      res.witnesses.push_back("clause 3: principal cluster " + cluster_name(p, s) +
                              " has nu not in 2Z");
  }
  res.semistable = res.witnesses.empty();
  return res;
}

bool check_semistability_equivalent(const ClusterPicture& p, const GaloisData& g) {
  if (!g.tame) return false;  // 3) wild inertia must act trivially

  // 1) some principal cluster with integral depth and even nu
  bool anchor = false;
  for (int s : proper_clusters(p))
    if (classify_cluster(p, s).principal && is_integer(p.depth(s)) &&
        is_even_integer(nu(p, s)))
      anchor = true;
  if (!anchor) return false;

  // 2) relative-depth congruences
  for (int s : proper_clusters(p)) {
    if (s == p.top) continue;
    Q d = p.delta(s);
    int sz = p.size(s);
    auto par = classify_cluster(p, p.parent(s));
    if (sz > 2 && sz % 2 == 0 && !par.cotwin && !is_integer(d)) return false;      // 2a
    if (sz % 2 == 1 && par.principal && !is_even_integer(d)) return false;         // 2b
    if (sz == 2 && !is_half_integer(d)) return false;                              // 2c
    if (sz == 2 * p.genus() && par.cotwin && !is_half_integer(d)) return false;    // 2d
  }
  const auto& top_children = p.clusters[p.top].children;
  if (top_children.size() == 2 && p.is_proper(top_children[0]) &&
      p.is_proper(top_children[1])) {
    int a = top_children[0], b = top_children[1];
    bool a_odd = p.size(a) % 2 == 1, b_odd = p.size(b) % 2 == 1;
    if (a_odd && b_odd) {                                                          // 2e
      if (!is_integer(p.delta(a)) || !is_integer(p.delta(b))) return false;
      if (!is_even_integer(p.delta(a) + p.delta(b))) return false;
    }
    if (!a_odd && !b_odd && classify_cluster(p, a).principal &&
        classify_cluster(p, b).principal) {                                        // 2f
      if (!is_integer(p.delta(a)) || !is_integer(p.delta(b))) return false;
    }
  }
  return true;
}

ReductionProfile reduction_profile(const ClusterPicture& p, const GaloisData& g) {
  ReductionProfile r;
  int g2 = 2 * p.genus();
  bool unramified = g.tame && perm_order(g.inertia) == 1;
  r.tame = g.tame;

  bool small_proper = false;     // proper cluster of size < 2g+1
  bool even_nontop = false;      // even cluster != R (singletons are odd)
  bool principal_nu_even = true;
  r.potentially_totally_toric = true;
  for (int s : proper_clusters(p)) {
    if (p.size(s) < g2 + 1) small_proper = true;
    if (s != p.top && p.size(s) % 2 == 0) even_nontop = true;
    auto attr = classify_cluster(p, s);
    if (attr.principal && !is_even_integer(nu(p, s))) principal_nu_even = false;
    if (s != p.top && attr.even && !attr.ubereven) ++r.potential_toric_rank;
    int odd_children = 0;
    for (int c : p.clusters[s].children)
      if (p.size(c) % 2 == 1) ++odd_children;
    if (odd_children > 2) r.potentially_totally_toric = false;
  }
  if (classify_cluster(p, p.top).ubereven) --r.potential_toric_rank;

  r.potentially_good = !small_proper;
  r.good = unramified && !small_proper && principal_nu_even;
  r.jacobian_potentially_good = !even_nontop;
  r.jacobian_good = unramified && !even_nontop && principal_nu_even;
  return r;
}

}  // namespace hyc
