#include "weier.hpp"
#include "semistable.hpp"

#include <algorithm>
#include <sstream>

namespace hyc {

namespace {

bool is_stable(const ClusterPicture& p, const GaloisData& g, int s) {
  return cluster_image(p, g.frobenius, s) == s &&
         cluster_image(p, g.inertia, s) == s;
}

bool contains_root(const ClusterPicture& p, int s, int r) {
  const auto& m = p.clusters[s].members;
  return std::binary_search(m.begin(), m.end(), r);
}

// sum over roots outside t of the depth of the meet of r and t
Q outside_meet_sum(const ClusterPicture& p, int t) {
  Q sum = 0;
  for (int r = 0; r < p.root_count; ++r)
    if (!contains_root(p, t, r)) sum += p.depth(meet_root(p, r, t));
  return sum;
}

// a pair of size-(g+1) clusters swapped by Frobenius
bool has_swapped_halves(const ClusterPicture& p, const GaloisData& g) {
  int h = p.genus() + 1;
  for (int s : proper_clusters(p)) {
    if (p.size(s) != h) continue;
    int img = cluster_image(p, g.frobenius, s);
    if (img >= 0 && img != s && p.size(img) == h) return true;
  }
  return false;
}

std::string cluster_name(const ClusterPicture& p, int s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < p.clusters[s].members.size(); ++i)
    os << (i ? "," : "") << p.clusters[s].members[i];
  os << "}";
  return os.str();
}

}  // namespace

Q disc_valuation(const ClusterPicture& p) {
  int g = p.genus();
  Q by_nodes = Q(p.leading_valuation) * (4 * g + 2);
  for (int s : proper_clusters(p)) {
    Z sq = Z(p.size(s)) * p.size(s);
    for (int c : p.clusters[s].children) sq -= Z(p.size(c)) * p.size(c);
    by_nodes += p.depth(s) * Q(sq);
  }
  Q by_pairs = Q(p.leading_valuation) * (4 * g + 2);
  for (int r1 = 0; r1 < p.root_count; ++r1)
    for (int r2 = r1 + 1; r2 < p.root_count; ++r2)
      by_pairs += 2 * p.depth(meet(p, p.singleton(r1), p.singleton(r2)));
  if (by_nodes != by_pairs)
    throw std::logic_error("discriminant valuation formulas disagree");
  return by_nodes;
}

bool is_integral(const ClusterPicture& p, const GaloisData& g, const Z& n) {
  if (n >= 0 && p.depth(p.top) >= 0) return true;
  for (int s : proper_clusters(p)) {
    if (!is_stable(p, g, s) || p.depth(s) > 0) continue;
    Q base = Q(n) + outside_meet_sum(p, s);
    // t empty
    if (base + Q(p.size(s)) * p.depth(s) >= 0) return true;
    for (int t : p.clusters[s].children) {
      if (!is_stable(p, g, t)) continue;
      if (p.size(t) > 1 && p.depth(t) < 0) continue;
      if (base + Q(p.size(s) - p.size(t)) * p.depth(s) >= 0) return true;
    }
  }
  return false;
}

Z minimal_shift_valuation(const ClusterPicture& p) {
  if (p.depth(p.top) > 0)
    throw std::invalid_argument("top cluster must have depth <= 0");
  for (int s : proper_clusters(p))
    if (!is_integer(p.depth(s)))
      throw std::invalid_argument("depths must be integers");
  Q best;
  bool found = false;
  for (int s = 0; s < (int)p.clusters.size(); ++s) {
    if (s == p.top) continue;
    if (p.depth(p.parent(s)) > 0) continue;
    if (p.size(s) > 1 && p.depth(s) <= 0) continue;
    Q v = -outside_meet_sum(p, s);
    if (!found || v < best) {
      best = v;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no admissible cluster found");
  if (!is_integer(best)) throw std::logic_error("non-integral shift valuation");
  return num(best);
}

MinimalityResult is_minimal_model(const ClusterPicture& p, const GaloisData& g,
                                  const Z& n) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("minimality criterion needs semistable input");
  if (has_swapped_halves(p, g) && p.depth(p.top) == 0 && (n == 0 || n == 1))
    return {true, "swapped halves of size g+1 with top depth 0"};

  for (int s : proper_clusters(p))
    if (p.size(s) > p.genus() + 1 && p.depth(s) > 0)
      return {false, "cluster " + cluster_name(p, s) +
                         " of size > g+1 has positive depth"};
  for (int s : proper_clusters(p)) {
    if (p.size(s) < p.genus() + 1 || p.depth(s) < 0 || !is_stable(p, g, s))
      continue;
    if (Q(n) == -outside_meet_sum(p, s))
      return {true, "stable cluster " + cluster_name(p, s) +
                        " of size >= g+1 attains the leading valuation"};
  }
  return {false, "no cluster certifies minimality"};
}

Q min_disc_valuation(const ClusterPicture& p, const GaloisData& g, const Z& n) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("minimal discriminant needs semistable input");
  int gen = p.genus();
  Z e = has_swapped_halves(p, g) && n % 2 != 0 ? 1 : 0;
  Q excess = Q(n - e) + p.depth(p.top) * Q(p.root_count - gen - 1);
  for (int s : proper_clusters(p)) {
    if (s == p.top || p.size(s) <= gen + 1 || p.size(s) >= p.root_count)
      continue;
    excess += p.delta(s) * Q(p.size(s) - gen - 1);
  }
  Q vd = disc_valuation(p) + Q(4 * gen + 2) * Q(n - p.leading_valuation);
  return vd - Q(4 * gen + 2) * excess;
}

Z perturbation_bound(const ClusterPicture& p) {
  Q d = p.depth(p.top);
  for (int s : proper_clusters(p)) d = std::max(d, p.depth(s));
  return qceil(d) + 1;
}

}  // namespace hyc
