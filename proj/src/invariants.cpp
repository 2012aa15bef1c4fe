#include "invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
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

Z as_int(const Q& q) {
  if (!is_integer(q)) throw std::logic_error("expected an integer");
  return num(q);
}

// A = even non-ubereven proper clusters != top, ordered by member sets
std::vector<int> homology_A(const ClusterPicture& p) {
  std::vector<int> a;
  for (int s : proper_clusters(p)) {
    auto at = classify_cluster(p, s);
    if (s != p.top && at.even && !at.ubereven) a.push_back(s);
  }
  std::sort(a.begin(), a.end(), [&](int x, int y) {
    return p.clusters[x].members < p.clusters[y].members;
  });
  return a;
}

}  // namespace

HomologyLattice homology_lattice(const ClusterPicture& p, const GaloisData& g) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("homology requires semistable input: " + ss.witnesses[0]);

  HomologyLattice hl;
  hl.A = homology_A(p);
  for (int s : hl.A)
    if (star(p, s) == p.top) hl.B.push_back(s);
  bool ubtop = classify_cluster(p, p.top).ubereven;
  hl.rank = (int)hl.A.size() - (ubtop ? 1 : 0);

  std::vector<std::string> missing;
  for (int s : hl.A)
    if (epsilon_of(g, s) == 0) missing.push_back(cluster_name(p, s));
  if (!missing.empty()) {
    std::string msg = "unknown epsilon sign needed for:";
    for (auto& m : missing) msg += " " + m;
    throw std::runtime_error(msg);
  }

  // full pairing on the generators ell_s, s in A
  int n = (int)hl.A.size();
  MatZ pr(n, std::vector<Z>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s1 = hl.A[i], s2 = hl.A[j];
      int st1 = star(p, s1), st2 = star(p, s2);
      if (st1 != st2) continue;
      Q base = st1 == p.top ? p.depth(p.top) : p.depth(p.parent(st1));
      pr[i][j] = as_int(2 * (p.depth(meet(p, s1, s2)) - base));
    }

  // basis as coefficient vectors over the generators
  auto index_of = [&](int s) {
    return (int)(std::find(hl.A.begin(), hl.A.end(), s) - hl.A.begin());
  };
  int s0 = hl.B.empty() ? -1 : hl.B.front();
  std::vector<std::vector<Z>> coords;  // basis -> Z^n
  for (int s : hl.A) {
    if (!ubtop || std::find(hl.B.begin(), hl.B.end(), s) == hl.B.end()) {
      hl.basis.push_back({s, -1});
      std::vector<Z> c(n, 0);
      c[index_of(s)] = 1;
      coords.push_back(std::move(c));
    } else if (s != s0) {
      hl.basis.push_back({s, s0});
      std::vector<Z> c(n, 0);
      c[index_of(s)] = 1;
      c[index_of(s0)] = -1;
      coords.push_back(std::move(c));
    }
  }
  if ((int)coords.size() != hl.rank)
    throw std::logic_error("homology basis size mismatch");

  hl.gram.assign(hl.rank, std::vector<Z>(hl.rank, 0));
  for (int i = 0; i < hl.rank; ++i)
    for (int j = 0; j < hl.rank; ++j) {
      Z v = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) v += coords[i][a] * pr[a][b] * coords[j][b];
      hl.gram[i][j] = v;
    }

  // Frobenius: sigma(ell_s) = eps_s ell_{sigma s}, re-expressed in the basis
  hl.frob.assign(hl.rank, std::vector<Z>(hl.rank, 0));
  for (int j = 0; j < hl.rank; ++j) {
    std::vector<Z> img(n, 0);
    for (int a = 0; a < n; ++a) {
      if (coords[j][a] == 0) continue;
      int t = cluster_image(p, g.frobenius, hl.A[a]);
      img[index_of(t)] += coords[j][a] * epsilon_of(g, hl.A[a]);
    }
    // convert back: free coordinates read off directly, the B-block uses the
    // constraint sum_B = 0
    for (int i = 0; i < hl.rank; ++i)
      hl.frob[i][j] = img[index_of(hl.basis[i].first)];
    if (ubtop) {
      Z check = 0;
      for (int s : hl.B) check += img[index_of(s)];
      if (check != 0)
        throw std::logic_error("Frobenius image leaves the constrained sublattice");
    }
  }
  // orthogonality with respect to the pairing is a hard invariant
  if (mul(mul(transpose(hl.frob), hl.gram), hl.frob) != hl.gram)
    throw std::logic_error("Frobenius does not preserve the length pairing; "
                           "check the epsilon annotations");
  return hl;
}

MatZ cycle_space_gram(const DualGraph& dg) {
  auto eg = expand(dg);
  int nv = eg.total_vertices, ne = (int)eg.edges.size();
  std::vector<int> parent(nv, -1), pedge(nv, -1), depth(nv, 0), seen(nv, 0);
  std::vector<int> tree(ne, 0);
  for (int root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e = 0; e < ne; ++e) {
        auto [a, b] = eg.edges[e];
        int w = a == v ? b : b == v ? a : -1;
        if (w < 0 || seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        pedge[w] = e;
        depth[w] = depth[v] + 1;
        tree[e] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<Z>> cycles;
  for (int e = 0; e < ne; ++e) {
    if (tree[e]) continue;
    std::vector<Z> c(ne, 0);
    auto [a, b] = eg.edges[e];
    c[e] = 1;  // traverse a -> b
    int x = b, y = a;
    // walk b up to the meeting point, then a up, closing the cycle
    while (x != y) {
      if (depth[x] >= depth[y]) {
        int pe = pedge[x];
        c[pe] += eg.edges[pe].second == x ? 1 : -1;  // x -> parent(x)
        x = parent[x];
      } else {
        int pe = pedge[y];
        c[pe] += eg.edges[pe].second == y ? -1 : 1;  // parent(y) -> y
        y = parent[y];
      }
    }
    cycles.push_back(std::move(c));
  }
  int r = (int)cycles.size();
  MatZ gram(r, std::vector<Z>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Z v = 0;
      for (int e = 0; e < ne; ++e) v += cycles[i][e] * cycles[j][e];
      gram[i][j] = v;
    }
  return gram;
}

namespace {

Z norm_of(const std::vector<Z>& x, const MatZ& g) {
  Z v = 0;
  int r = (int)x.size();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) v += x[i] * g[i][j] * x[j];
  return v;
}

std::vector<Z> snf_divisors(MatZ a) {
  auto s = smith_normal_form(std::move(a));
  std::vector<Z> d;
  for (size_t i = 0; i < s.d.size(); ++i)
    d.push_back(s.d[i][i] < 0 ? -s.d[i][i] : s.d[i][i]);
  return d;
}

}  // namespace

bool lattices_isometric(const MatZ& g1, const MatZ& g2) {
  if (g1.size() != g2.size()) return false;
  int r = (int)g1.size();
  if (r == 0) return true;
  if (det(g1) != det(g2)) return false;
  if (r > 4) return snf_divisors(g1) == snf_divisors(g2);  // necessary conditions only

  Z maxdiag = 0;
  for (int i = 0; i < r; ++i) maxdiag = std::max(maxdiag, g1[i][i]);
  int bound = (int)std::min<Z>(maxdiag, 16);
  // candidate image vectors, bucketed by norm
  std::map<Z, std::vector<std::vector<Z>>> by_norm;
  std::vector<Z> x(r, -bound);
  while (true) {
    Z nrm = norm_of(x, g2);
    if (nrm > 0 && nrm <= maxdiag) by_norm[nrm].push_back(x);
    int i = 0;
    while (i < r && x[i] == bound) x[i++] = -bound;
    if (i == r) break;
    ++x[i];
  }
  std::vector<std::vector<Z>> chosen;
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == r) return true;
    auto it = by_norm.find(g1[i][i]);
    if (it == by_norm.end()) return false;
    for (const auto& cand : it->second) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        Z ip = 0;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) ip += chosen[j][a] * g2[a][b] * cand[b];
        ok = ip == g1[j][i];
      }
      if (!ok) continue;
      chosen.push_back(cand);
      if (extend(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

int conductor_semistable(const ClusterPicture& p, const GaloisData& g) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("semistable conductor formula needs semistable input");
  auto a = homology_A(p);
  return (int)a.size() - (classify_cluster(p, p.top).ubereven ? 1 : 0);
}

namespace {

int orbit_size(const ClusterPicture& p, const std::vector<int>& perm, int s) {
  int n = 0, t = s;
  do {
    t = cluster_image(p, perm, t);
    if (t < 0) throw std::invalid_argument("permutation does not act on the picture");
    ++n;
  } while (t != s);
  return n;
}

// ord_2 of the denominator of (orbit size of s) * a, with xi(0) = 0
int xi(const ClusterPicture& p, const GaloisData& g, int s, const Q& a) {
  if (a == 0) return 0;
  return ord2_denominator(Q(orbit_size(p, g.inertia, s)) * a);
}

int count_orbits(const ClusterPicture& p, const GaloisData& g, const std::set<int>& set) {
  int n = 0;
  std::set<int> seen;
  for (int s : set) {
    if (seen.count(s)) continue;
    seen.insert(s);
    seen.insert(cluster_image(p, g.inertia, s));
    ++n;
  }
  return n;
}

}  // namespace

TameConductor conductor_tame_general(const ClusterPicture& p, const GaloisData& g) {
  if (!g.tame) throw std::invalid_argument("wild inertia: supply field data instead");
  std::set<int> u, v;
  for (int s = 0; s < (int)p.clusters.size(); ++s) {
    if (s == p.top || p.size(s) % 2 == 0) continue;
    int par = p.parent(s);
    if (xi(p, g, par, lambda_tilde(p, par)) <= xi(p, g, par, p.depth(par))) u.insert(s);
  }
  for (int s : proper_clusters(p))
    if (!classify_cluster(p, s).ubereven && xi(p, g, s, lambda_tilde(p, s)) == 0)
      v.insert(s);
  int correction =
      p.root_count % 2 == 0 && p.leading_valuation % 2 == 0 ? 1 : 0;
  TameConductor tc;
  tc.invariant_dim = count_orbits(p, g, u) - count_orbits(p, g, v) - correction;
  tc.tame_part = 2 * p.genus() - tc.invariant_dim;
  return tc;
}

Z conductor_wild(const std::vector<std::array<Z, 3>>& orbit_data) {
  Z total = 0;
  for (const auto& [disc, deg, resdeg] : orbit_data) {
    Z term = disc - deg + resdeg;
    if (term < 0)
      throw std::invalid_argument("inconsistent field data: negative wild term");
    total += term;
  }
  return total;
}

Z tamagawa(const HomologyLattice& hl) {
  int r = hl.rank;
  if (r == 0) return 1;
  if (det(hl.gram) == 0) throw std::invalid_argument("singular pairing");
  auto s = smith_normal_form(hl.gram);
  std::vector<Z> d;
  for (int i = 0; i < r; ++i) d.push_back(s.d[i][i] < 0 ? -s.d[i][i] : s.d[i][i]);
  // component group acts through the inverse transpose, moved to SNF coordinates
  MatZ act = mul(mul(s.u, inv_unimodular(transpose(hl.frob))), inv_unimodular(s.u));
  std::vector<Z> y(r, 0);
  Z fixed = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      Z v = -y[i];
      for (int j = 0; j < r; ++j) v += act[i][j] * y[j];
      ok = d[i] == 0 ? v == 0 : v % d[i] == 0;
    }
    if (ok) ++fixed;
    int i = 0;
    while (i < r && y[i] == d[i] - 1) y[i++] = 0;
    if (i == r) break;
    ++y[i];
  }
  return fixed;
}

int root_number(const HomologyLattice& hl) {
  MatZ m = hl.frob;
  for (int i = 0; i < hl.rank; ++i) m[i][i] -= 1;
  int a = hl.rank - rank_q(to_q(m));
  return a % 2 == 0 ? 1 : -1;
}

bool deficiency(const ClusterPicture& p, const GaloisData& g) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("deficiency criterion needs semistable input");
  if (p.genus() % 2 != 0) return false;

  auto require_eps = [&](int s) {
    int e = epsilon_of(g, s);
    if (e == 0)
      throw std::runtime_error("unknown epsilon sign needed for " + cluster_name(p, s));
    return e;
  };

  // (1) two conjugate odd halves with odd relative depth
  const auto& kids = p.clusters[p.top].children;
  if (kids.size() == 2 && p.is_proper(kids[0]) && p.is_proper(kids[1]) &&
      p.size(kids[0]) % 2 == 1 && p.size(kids[1]) % 2 == 1 &&
      cluster_image(p, g.frobenius, kids[0]) == kids[1]) {
    Q d = p.delta(kids[0]);
    if (is_integer(d) && num(d) % 2 != 0) return true;
  }

  // clauses (2) and (3) share the orbit condition over clusters anchored at c
  auto anchored_condition = [&](int c) {
    for (int s : proper_clusters(p)) {
      if (classify_cluster(p, s).ubereven || star(p, s) != c || s == c) continue;
      bool ok = !is_integer(p.depth(s)) ||
                orbit_size(p, g.frobenius, s) % 2 == 0;
      if (!ok) return false;
    }
    return true;
  };

  auto top_attr = classify_cluster(p, p.top);
  if (top_attr.ubereven) {
    if (require_eps(p.top) == -1 && anchored_condition(p.top)) return true;
  }
  if (top_attr.cotwin) {
    int r = -1;
    for (int ch : kids)
      if (p.size(ch) == 2 * p.genus()) r = ch;
    if (r >= 0 && classify_cluster(p, r).ubereven) {
      if (require_eps(r) == -1 && anchored_condition(r)) return true;
    }
  }
  return false;
}

}  // namespace hyc
