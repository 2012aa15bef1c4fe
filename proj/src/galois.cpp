#include "galois.hpp"

#include <algorithm>
#include <set>

namespace hyc {

GaloisData GaloisData::trivial(int root_count, const Z& p) {
  GaloisData g;
  g.frobenius.resize(root_count);
  g.inertia.resize(root_count);
  for (int i = 0; i < root_count; ++i) g.frobenius[i] = g.inertia[i] = i;
  g.residue_size = p;
  return g;
}

int cluster_image(const ClusterPicture& p, const std::vector<int>& perm, int s) {
  std::vector<int> img;
  img.reserve(p.clusters[s].members.size());
  for (int r : p.clusters[s].members) img.push_back(perm[r]);
  std::sort(img.begin(), img.end());
  return p.find(img);
}

bool is_picture_automorphism(const ClusterPicture& p, const std::vector<int>& perm) {
  if ((int)perm.size() != p.root_count) return false;
  for (int s = 0; s < (int)p.clusters.size(); ++s) {
    int t = cluster_image(p, perm, s);
    if (t < 0) return false;
    if (p.clusters[s].depth.has_value() != p.clusters[t].depth.has_value()) return false;
    if (p.clusters[s].depth && *p.clusters[s].depth != *p.clusters[t].depth)
      return false;
  }
  return true;
}

int perm_order(const std::vector<int>& perm) {
  int n = (int)perm.size();
  auto lcm = [](int a, int b) { return a / std::__gcd(a, b) * b; };
  std::vector<char> seen(n, 0);
  int order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) { seen[j] = 1; j = perm[j]; ++len; }
    order = lcm(order, len);
  }
  return order;
}

std::vector<std::vector<int>> cluster_orbits(const ClusterPicture& p,
                                             const std::vector<int>& perm) {
  std::vector<std::vector<int>> orbits;
  std::set<int> seen;
  for (int s = 0; s < (int)p.clusters.size(); ++s) {
    if (seen.count(s)) continue;
    std::vector<int> orbit;
    int t = s;
    do {
      orbit.push_back(t);
      seen.insert(t);
      t = cluster_image(p, perm, t);
      if (t < 0) throw std::logic_error("cluster_orbits: not an automorphism");
    } while (t != s);
    orbits.push_back(orbit);
  }
  return orbits;
}

int epsilon_of(const GaloisData& g, int s) {
  auto it = g.epsilon.find(s);
  return it == g.epsilon.end() ? 0 : it->second;
}

}  // namespace hyc
