#include "cluster.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hyc {

const Q& ClusterPicture::depth(int s) const {
  if (!clusters[s].depth)
    throw std::logic_error("depth requested on a cluster without one");
  return *clusters[s].depth;
}

Q ClusterPicture::delta(int s) const {
  if (clusters[s].parent < 0)
    throw std::logic_error("relative depth of the top cluster");
  return depth(s) - depth(clusters[s].parent);
}

static bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

static bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

bool ClusterPicture::normalize() {
  for (auto& c : clusters) std::sort(c.members.begin(), c.members.end());
  // dedupe member sets
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members < b.members;
  });
  clusters.erase(std::unique(clusters.begin(), clusters.end(),
                             [](const Cluster& a, const Cluster& b) {
                               return a.members == b.members;
                             }),
                 clusters.end());
  // ensure singletons and the top node exist
  std::set<std::vector<int>> have;
  for (auto& c : clusters) have.insert(c.members);
  std::vector<int> all(root_count);
  for (int i = 0; i < root_count; ++i) all[i] = i;
  if (!have.count(all)) clusters.push_back({all, std::nullopt, -1, {}});
  for (int i = 0; i < root_count; ++i)
    if (!have.count({i})) clusters.push_back({{i}, std::nullopt, -1, {}});

  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members < b.members;
  });
  int n = (int)clusters.size();
  for (auto& c : clusters) { c.parent = -1; c.children.clear(); }
  top = 0;
  // parent = smallest strict superset; sorted by size descending, so scan up
  for (int i = 1; i < n; ++i) {
    int best = -1;
    for (int j = i - 1; j >= 0; --j) {
      if (clusters[j].members.size() == clusters[i].members.size()) continue;
      if (subset(clusters[i].members, clusters[j].members)) {
        if (best < 0 || clusters[j].members.size() < clusters[best].members.size())
          best = j;
      }
    }
    if (best < 0) return false;
    clusters[i].parent = best;
  }
  for (int i = 1; i < n; ++i) clusters[clusters[i].parent].children.push_back(i);
  for (auto& c : clusters)
    std::sort(c.children.begin(), c.children.end(), [&](int a, int b) {
      return clusters[a].members.front() < clusters[b].members.front();
    });
  // laminarity: children of each node must be disjoint and cover it
  for (int i = 0; i < n; ++i) {
    if (clusters[i].children.empty()) continue;
    size_t total = 0;
    for (size_t a = 0; a < clusters[i].children.size(); ++a) {
      total += clusters[clusters[i].children[a]].members.size();
      for (size_t b = a + 1; b < clusters[i].children.size(); ++b)
        if (!disjoint(clusters[clusters[i].children[a]].members,
                      clusters[clusters[i].children[b]].members))
          return false;
    }
    if (total != clusters[i].members.size()) return false;
  }
  return true;
}

int ClusterPicture::find(const std::vector<int>& members) const {
  for (int i = 0; i < (int)clusters.size(); ++i)
    if (clusters[i].members == members) return i;
  return -1;
}

int ClusterPicture::singleton(int root) const { return find({root}); }

std::vector<std::string> validate_picture(const ClusterPicture& p) {
  std::vector<std::string> bad;
  if (p.root_count < 5) bad.push_back("fewer than 5 roots (genus < 2)");
  if (p.top < 0 || p.clusters.empty()) {
    bad.push_back("no top cluster");
    return bad;
  }
  for (int i = 0; i < (int)p.clusters.size(); ++i) {
    const auto& c = p.clusters[i];
    for (int j = i + 1; j < (int)p.clusters.size(); ++j) {
      const auto& d = p.clusters[j];
      if (!disjoint(c.members, d.members) && !subset(c.members, d.members) &&
          !subset(d.members, c.members))
        bad.push_back("not laminar: clusters " + std::to_string(i) + "," +
                      std::to_string(j));
    }
    if (c.members.size() >= 2 && !c.depth)
      bad.push_back("proper cluster " + std::to_string(i) + " without depth");
    if (c.parent >= 0 && c.depth && p.clusters[c.parent].depth &&
        *c.depth <= *p.clusters[c.parent].depth)
      bad.push_back("non-increasing depth at cluster " + std::to_string(i));
  }
  if ((int)p.clusters[p.top].members.size() != p.root_count)
    bad.push_back("top cluster does not contain all roots");
  for (int r = 0; r < p.root_count; ++r)
    if (p.singleton(r) < 0) bad.push_back("missing singleton " + std::to_string(r));
  return bad;
}

ClusterAttributes classify_cluster(const ClusterPicture& p, int s) {
  ClusterAttributes a;
  int sz = p.size(s);
  a.proper = sz >= 2;
  a.odd = sz % 2 == 1;
  a.even = !a.odd;
  a.twin = sz == 2;
  const auto& ch = p.clusters[s].children;
  if (a.proper && a.even) {
    a.ubereven = true;
    for (int c : ch)
      if (p.size(c) % 2 == 1) a.ubereven = false;
  }
  int two_g = 2 * p.genus();
  bool big_child = false;
  for (int c : ch)
    if (p.size(c) == two_g) big_child = true;
  a.cotwin = !a.ubereven && big_child;
  a.principal = sz >= 3;
  if (s == p.top && a.even && ch.size() == 2) a.principal = false;
  if (big_child) a.principal = false;
  if (a.ubereven) {
    a.genus = 0;
  } else {
    int odd_children = 0;
    for (int c : ch)
      if (p.size(c) % 2 == 1) ++odd_children;
    a.genus = odd_children >= 1 ? (odd_children - 1) / 2 : 0;
  }
  return a;
}

int meet(const ClusterPicture& p, int s1, int s2) {
  std::set<int> anc;
  for (int t = s1; t >= 0; t = p.clusters[t].parent) anc.insert(t);
  for (int t = s2; t >= 0; t = p.clusters[t].parent)
    if (anc.count(t)) return t;
  throw std::logic_error("meet: disconnected tree");
}

int meet_root(const ClusterPicture& p, int root, int s) {
  return meet(p, p.singleton(root), s);
}

int star(const ClusterPicture& p, int s) {
  auto attr = classify_cluster(p, s);
  if (attr.cotwin) {
    int two_g = 2 * p.genus();
    for (int c : p.clusters[s].children)
      if (p.size(c) == two_g) return c;
  }
  int t = s;
  while (p.clusters[t].parent >= 0 &&
         classify_cluster(p, p.clusters[t].parent).ubereven)
    t = p.clusters[t].parent;
  return t;
}

Q nu(const ClusterPicture& p, int s) {
  if (!p.is_proper(s)) throw std::logic_error("nu of a non-proper cluster");
  Q total = Q(p.leading_valuation);
  for (int r = 0; r < p.root_count; ++r)
    total += p.depth(meet_root(p, r, s));
  return total;
}

Q lambda_tilde(const ClusterPicture& p, int s) {
  if (!p.is_proper(s)) throw std::logic_error("lambda of a non-proper cluster");
  int odd_children = 0;
  Z halves = 0;
  for (int c : p.clusters[s].children) {
    if (p.size(c) % 2 == 1) ++odd_children;
    halves += p.size(c) / 2;
  }
  Q outside = 0;
  for (int r = 0; r < p.root_count; ++r) {
    int m = meet_root(p, r, s);
    if (m != s) outside += p.depth(m);
  }
  Q form1 = (Q(p.leading_valuation) + Q(odd_children) * p.depth(s) + outside) / 2;
  Q form2 = nu(p, s) / 2 - p.depth(s) * Q(halves);
  if (form1 != form2)
    throw std::logic_error("lambda_tilde: the two defining formulas disagree");
  return form1;
}

std::vector<int> proper_clusters(const ClusterPicture& p) {
  std::vector<int> out;
  for (int i = 0; i < (int)p.clusters.size(); ++i)
    if (p.is_proper(i)) out.push_back(i);
  return out;  // normalized order is size-descending, hence parents first
}

ClusterPicture make_picture(int root_count, const Z& lead_val,
                            const std::vector<std::pair<std::vector<int>, Q>>& nodes) {
  ClusterPicture p;
  p.root_count = root_count;
  p.leading_valuation = lead_val;
  for (const auto& [members, d] : nodes)
    p.clusters.push_back({members, d, -1, {}});
  if (!p.normalize()) throw std::invalid_argument("make_picture: not laminar");
  return p;
}

}  // namespace hyc
