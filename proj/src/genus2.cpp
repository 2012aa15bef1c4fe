#include "genus2.hpp"
#include "parse.hpp"
#include "weier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyc {

namespace {

std::string sgn(int e) { return e > 0 ? "+" : "-"; }

// ---- core graph: suppress genus-0 vertices of degree 2 --------------------

struct CoreChain {
  int from, to;
  Z length;
  std::vector<int> constituents;  // original chain indices
};

struct CoreGraph {
  std::vector<int> vertices;       // surviving dual-graph vertex indices
  std::vector<CoreChain> chains;
};

CoreGraph contract(const DualGraph& dg) {
  int nv = (int)dg.vertices.size();
  std::vector<bool> alive(nv, true);
  std::vector<CoreChain> chains;
  std::vector<bool> active;
  for (int i = 0; i < (int)dg.chains.size(); ++i) {
    chains.push_back({dg.chains[i].from, dg.chains[i].to, dg.chains[i].length, {i}});
    active.push_back(true);
  }
  for (;;) {
    int victim = -1;
    std::vector<int> slots;  // active chain indices incident to victim
    for (int v = 0; v < nv && victim < 0; ++v) {
      if (!alive[v] || dg.vertices[v].genus != 0) continue;
      std::vector<int> inc;
      for (int c = 0; c < (int)chains.size(); ++c) {
        if (!active[c]) continue;
        if (chains[c].from == v) inc.push_back(c);
        if (chains[c].to == v) inc.push_back(c);
      }
      if (inc.size() == 2 && inc[0] != inc[1]) {
        victim = v;
        slots = inc;
      }
    }
    if (victim < 0) break;
    const CoreChain& c1 = chains[slots[0]];
    const CoreChain& c2 = chains[slots[1]];
    CoreChain merged;
    merged.from = c1.from == victim ? c1.to : c1.from;
    merged.to = c2.from == victim ? c2.to : c2.from;
    merged.length = c1.length + c2.length;
    merged.constituents = c1.constituents;
    merged.constituents.insert(merged.constituents.end(), c2.constituents.begin(),
                               c2.constituents.end());
    active[slots[0]] = active[slots[1]] = false;
    chains.push_back(std::move(merged));
    active.push_back(true);
    alive[victim] = false;
  }
  CoreGraph cg;
  for (int v = 0; v < nv; ++v)
    if (alive[v]) cg.vertices.push_back(v);
  for (int c = 0; c < (int)chains.size(); ++c)
    if (active[c]) cg.chains.push_back(chains[c]);
  return cg;
}

// sign of the Frobenius coefficient attached to a loop or theta chain
int chain_sign(const DualGraph& dg, const GaloisData& g, const ClusterPicture& p,
               const CoreChain& cc) {
  for (int i : cc.constituents) {
    switch (dg.chains[i].kind) {
      case ChainKind::TwinLoop:
      case ChainKind::CotwinLoop:
      case ChainKind::EvenChildPlus:
      case ChainKind::EvenChildMinus:
      case ChainKind::SplitTopTwin:
      case ChainKind::SplitTopPlus:
      case ChainKind::SplitTopMinus: {
        int e = epsilon_of(g, dg.chains[i].cluster);
        if (e != 0) return e;
        throw std::runtime_error("classification needs the epsilon sign of cluster " +
                                 std::to_string(dg.chains[i].cluster));
      }
      default:
        break;
    }
  }
  throw std::logic_error("loop without a sign-bearing chain");
}

int small(const Z& z) { return (int)z; }

}  // namespace

Genus2Type classify_genus2(const ClusterPicture& p, const GaloisData& g) {
  if (p.genus() != 2) throw std::invalid_argument("classification needs genus 2");
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("classification needs semistable input: " +
                                ss.witnesses[0]);
  DualGraph dg = dual_graph(p, g);
  CoreGraph cg = contract(dg);

  // Frobenius descends to the core
  auto core_vertex = [&](int v) {
    auto it = std::find(cg.vertices.begin(), cg.vertices.end(), v);
    if (it == cg.vertices.end())
      throw std::logic_error("Frobenius does not preserve the core");
    return (int)(it - cg.vertices.begin());
  };
  std::vector<int> chain_of(dg.chains.size(), -1);
  for (int c = 0; c < (int)cg.chains.size(); ++c)
    for (int i : cg.chains[c].constituents) chain_of[i] = c;
  auto core_chain_image = [&](int c) {
    int img = chain_of[dg.chain_image[cg.chains[c].constituents[0]]];
    if (img < 0) throw std::logic_error("Frobenius does not preserve the core");
    return img;
  };

  int nv = (int)cg.vertices.size();
  int nc = (int)cg.chains.size();
  auto genus_at = [&](int i) { return dg.vertices[cg.vertices[i]].genus; };
  std::vector<int> loops, links;  // core chain indices
  for (int c = 0; c < nc; ++c)
    (cg.chains[c].from == cg.chains[c].to ? loops : links).push_back(c);

  Genus2Type t;
  if (nv == 1 && nc == 0) {
    t.family = Genus2Type::Good;
    return t;
  }
  auto expect_genus = [&](std::vector<int> want) {
    std::vector<int> got;
    for (int i = 0; i < nv; ++i) got.push_back(genus_at(i));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw std::logic_error("unexpected component genera");
  };
  if (nv == 2 && nc == 1 && loops.empty()) {
    expect_genus({1, 1});
    t.r = small(cg.chains[0].length);
    bool swapped = core_vertex(dg.vertex_image[cg.vertices[0]]) == 1;
    t.family = swapped ? Genus2Type::ChainFrob : Genus2Type::Chain;
    return t;
  }
  if (nv == 1 && nc == 1 && loops.size() == 1 && genus_at(0) == 1) {
    t.family = Genus2Type::OneLoop;
    t.n = small(cg.chains[0].length);
    t.eps1 = chain_sign(dg, g, p, cg.chains[0]);
    return t;
  }
  if (nv == 2 && loops.size() == 1 && links.size() == 1) {
    expect_genus({1, 0});
    t.family = Genus2Type::ChainOneLoop;
    t.n = small(cg.chains[loops[0]].length);
    t.r = small(cg.chains[links[0]].length);
    t.eps1 = chain_sign(dg, g, p, cg.chains[loops[0]]);
    return t;
  }
  if (nv == 1 && loops.size() == 2) {
    expect_genus({0});
    int e1 = chain_sign(dg, g, p, cg.chains[loops[0]]);
    int e2 = chain_sign(dg, g, p, cg.chains[loops[1]]);
    int l1 = small(cg.chains[loops[0]].length);
    int l2 = small(cg.chains[loops[1]].length);
    if (core_chain_image(loops[0]) != loops[0]) {
      t.family = Genus2Type::TwoLoopsFrob;
      t.n = l1;
      t.eps1 = e1 * e2;
    } else {
      t.family = Genus2Type::TwoLoops;
      if (e1 < e2 || (e1 == e2 && l1 > l2)) {
        std::swap(e1, e2);
        std::swap(l1, l2);
      }
      t.n = l1, t.m = l2, t.eps1 = e1, t.eps2 = e2;
    }
    return t;
  }
  if (nv == 2 && loops.empty() && links.size() == 3) {
    expect_genus({0, 0});
    std::vector<int> fixed;
    for (int c : links)
      if (core_chain_image(c) == c) fixed.push_back(c);
    t.eps1 = chain_sign(dg, g, p, cg.chains[links[0]]);
    if (fixed.size() == 3) {
      t.family = Genus2Type::Theta;
      std::vector<int> ls;
      for (int c : links) ls.push_back(small(cg.chains[c].length));
      std::sort(ls.begin(), ls.end());
      t.n = ls[0], t.m = ls[1], t.k = ls[2];
    } else if (fixed.size() == 1) {
      t.family = Genus2Type::ThetaFrob2;
      t.k = small(cg.chains[fixed[0]].length);
      int other = links[0] == fixed[0] ? links[1] : links[0];
      t.n = small(cg.chains[other].length);
    } else {
      t.family = Genus2Type::ThetaFrob3;
      t.n = small(cg.chains[links[0]].length);
    }
    return t;
  }
  if (nv == 2 && loops.size() == 2 && links.size() == 1) {
    expect_genus({0, 0});
    t.r = small(cg.chains[links[0]].length);
    int e1 = chain_sign(dg, g, p, cg.chains[loops[0]]);
    int e2 = chain_sign(dg, g, p, cg.chains[loops[1]]);
    int l1 = small(cg.chains[loops[0]].length);
    int l2 = small(cg.chains[loops[1]].length);
    if (core_vertex(dg.vertex_image[cg.vertices[0]]) == 1) {
      t.family = Genus2Type::DumbbellFrob;
      t.n = l1;
      t.eps1 = e1 * e2;
    } else {
      t.family = Genus2Type::Dumbbell;
      if (e1 < e2 || (e1 == e2 && l1 > l2)) {
        std::swap(e1, e2);
        std::swap(l1, l2);
      }
      t.n = l1, t.m = l2, t.eps1 = e1, t.eps2 = e2;
    }
    return t;
  }
  throw std::logic_error("unrecognized genus 2 core graph");
}

std::string Genus2Type::label() const {
  std::ostringstream os;
  switch (family) {
    case Good: os << "2"; break;
    case Chain: os << "1x_" << r << "1"; break;
    case ChainFrob: os << "1x~_" << r << "1"; break;
    case OneLoop: os << "1_" << n << "^" << sgn(eps1); break;
    case ChainOneLoop: os << "1x_" << r << "I_" << n << "^" << sgn(eps1); break;
    case TwoLoops:
      os << "I_{" << n << "," << m << "}^{" << sgn(eps1) << "," << sgn(eps2) << "}";
      break;
    case TwoLoopsFrob: os << "I_{" << n << "~" << n << "}^" << sgn(eps1); break;
    case Theta:
      os << "U_{" << n << "," << m << "," << k << "}^" << sgn(eps1);
      break;
    case ThetaFrob2:
      os << "U_{" << n << "~" << n << "," << k << "}^" << sgn(eps1);
      break;
    case ThetaFrob3:
      os << "U_{" << n << "~" << n << "~" << n << "}^" << sgn(eps1);
      break;
    case Dumbbell:
      os << "I_" << n << "^" << sgn(eps1) << "x_" << r << "I_" << m << "^"
         << sgn(eps2);
      break;
    case DumbbellFrob:
      os << "I_" << n << "^" << sgn(eps1) << "x~_" << r << "I_" << n;
      break;
  }
  return os.str();
}

Genus2Invariants table_invariants(const Genus2Type& t) {
  auto til = [](int x) { return Z(x % 2 != 0 ? 1 : 2); };
  int n = t.n, m = t.m, k = t.k, r = t.r;
  int rbar = r % 2;
  switch (t.family) {
    case Genus2Type::Good:
      return {1, 0, +1, 1, false, 0};
    case Genus2Type::Chain:
      return {r + 1, 0, +1, 1, false, 12 * r};
    case Genus2Type::ChainFrob:
      return {r + 1, 0, +1, 1, rbar == 1, 12 * r + 10 * rbar};
    case Genus2Type::OneLoop:
      if (t.eps1 > 0) return {n, 1, -1, n, false, n};
      return {n, 1, +1, til(n), false, n};
    case Genus2Type::ChainOneLoop:
      if (t.eps1 > 0) return {n + r, 1, -1, n, false, 12 * r + n};
      return {n + r, 1, +1, til(n), false, 12 * r + n};
    case Genus2Type::TwoLoops: {
      Z c = t.eps1 > 0 ? (t.eps2 > 0 ? Z(n) * m : Z(n) * til(m))
                       : til(n) * til(m);
      return {n + m - 1, 2, t.eps1 == t.eps2 ? +1 : -1, c, false, n + m};
    }
    case Genus2Type::TwoLoopsFrob:
      if (t.eps1 > 0) return {2 * n - 1, 2, -1, n, false, 2 * n};
      return {2 * n - 1, 2, +1, til(n), false, 2 * n};
    case Genus2Type::Theta: {
      int d = std::gcd(n, std::gcd(m, k));
      int tt = n * m + n * k + m * k;
      if (t.eps1 > 0) return {n + m + k - 1, 2, +1, tt, false, n + m + k};
      return {n + m + k - 1, 2,      +1, til(tt / d) * til(d),
              (n * m * k) % 2 != 0,  n + m + k};
    }
    case Genus2Type::ThetaFrob2:
      if (t.eps1 > 0)
        return {2 * n + k - 1, 2, -1, n + 2 * k, false, 2 * n + k};
      return {2 * n + k - 1, 2, -1, n, k % 2 != 0, 2 * n + k};
    case Genus2Type::ThetaFrob3:
      if (t.eps1 > 0) return {3 * n - 1, 2, +1, 3, false, 3 * n};
      return {3 * n - 1, 2, +1, 1, n % 2 != 0, 3 * n};
    case Genus2Type::Dumbbell: {
      Z c = t.eps1 > 0 ? (t.eps2 > 0 ? Z(n) * m : Z(n) * til(m))
                       : til(n) * til(m);
      return {n + m + r - 1, 2, t.eps1 == t.eps2 ? +1 : -1, c, false,
              12 * r + n + m};
    }
    case Genus2Type::DumbbellFrob:
      if (t.eps1 > 0)
        return {2 * n + r - 1, 2, -1, n, rbar == 1, 12 * r + 2 * n + 10 * rbar};
      return {2 * n + r - 1, 2, +1, til(n), rbar == 1, 12 * r + 2 * n + 10 * rbar};
  }
  throw std::invalid_argument("unknown reduction type");
}

std::pair<ClusterPicture, GaloisData> genus2_representative(const Genus2Type& t,
                                                            const Z& p) {
  int n = t.n, m = t.m, k = t.k, r = t.r;
  std::vector<std::pair<std::vector<int>, Q>> nodes = {{{0, 1, 2, 3, 4, 5}, 0}};
  auto node = [&](std::vector<int> mem, Q d) {
    if (d > 0) nodes.push_back({std::move(mem), std::move(d)});
  };
  GaloisData g = GaloisData::trivial(6, p);
  std::vector<std::vector<int>> halfint_twins;  // inertia swaps for odd loops
  auto twin = [&](int a, int b, Q d, int loop_len) {
    node({a, b}, std::move(d));
    if (loop_len % 2 != 0) halfint_twins.push_back({a, b});
  };
  Z lead = 0;
  auto swap6 = [&] {  // Frobenius exchanging roots {0,1,2} and {3,4,5}
    g.frobenius = {3, 4, 5, 0, 1, 2};
  };

  switch (t.family) {
    case Genus2Type::Good:
      break;
    case Genus2Type::Chain:
    case Genus2Type::ChainFrob:
      node({0, 1, 2}, r);
      node({3, 4, 5}, r);
      lead = r % 2;
      if (t.family == Genus2Type::ChainFrob) swap6();
      break;
    case Genus2Type::OneLoop:
      twin(0, 1, Q(n, 2), n);
      break;
    case Genus2Type::ChainOneLoop:
      node({0, 1, 2}, r);
      twin(0, 1, r + Q(n, 2), n);
      node({3, 4, 5}, r);
      lead = r % 2;
      break;
    case Genus2Type::TwoLoops:
    case Genus2Type::TwoLoopsFrob:
      twin(0, 1, Q(n, 2), n);
      twin(2, 3, Q(t.family == Genus2Type::TwoLoops ? m : n, 2),
           t.family == Genus2Type::TwoLoops ? m : n);
      if (t.family == Genus2Type::TwoLoopsFrob) g.frobenius = {2, 3, 0, 1, 4, 5};
      break;
    case Genus2Type::Theta:
      twin(0, 1, Q(n, 2), n);
      twin(2, 3, Q(m, 2), m);
      twin(4, 5, Q(k, 2), k);
      break;
    case Genus2Type::ThetaFrob2:
      twin(0, 1, Q(n, 2), n);
      twin(2, 3, Q(n, 2), n);
      twin(4, 5, Q(k, 2), k);
      g.frobenius = {2, 3, 0, 1, 4, 5};
      break;
    case Genus2Type::ThetaFrob3:
      twin(0, 1, Q(n, 2), n);
      twin(2, 3, Q(n, 2), n);
      twin(4, 5, Q(n, 2), n);
      g.frobenius = {2, 3, 4, 5, 0, 1};
      break;
    case Genus2Type::Dumbbell:
    case Genus2Type::DumbbellFrob: {
      int m2 = t.family == Genus2Type::Dumbbell ? m : n;
      node({0, 1, 2}, r);
      twin(0, 1, r + Q(n, 2), n);
      node({3, 4, 5}, r);
      twin(3, 4, r + Q(m2, 2), m2);
      lead = r % 2;
      if (t.family == Genus2Type::DumbbellFrob) swap6();
      break;
    }
  }

  ClusterPicture pic = make_picture(6, lead, nodes);
  for (const auto& tw : halfint_twins) {
    g.inertia[tw[0]] = tw[1];
    g.inertia[tw[1]] = tw[0];
  }
  // epsilon annotations; every even proper cluster carries the sign of its star
  auto put = [&](const std::vector<int>& mem, int e) {
    int s = pic.find(mem);
    if (s >= 0) g.epsilon[s] = e;
  };
  switch (t.family) {
    case Genus2Type::Good:
    case Genus2Type::Chain:
    case Genus2Type::ChainFrob:
      break;
    case Genus2Type::OneLoop:
    case Genus2Type::ChainOneLoop:
      put({0, 1}, t.eps1);
      break;
    case Genus2Type::TwoLoops:
      put({0, 1}, t.eps1);
      put({2, 3}, t.eps2);
      break;
    case Genus2Type::TwoLoopsFrob:
      put({0, 1}, t.eps1);  // the product is the invariant; partner gets +
      put({2, 3}, +1);
      break;
    case Genus2Type::Theta:
    case Genus2Type::ThetaFrob2:
    case Genus2Type::ThetaFrob3:
      // the top cluster is ubereven: one sign shared by everything under it
      put({0, 1}, t.eps1);
      put({2, 3}, t.eps1);
      put({4, 5}, t.eps1);
      put({0, 1, 2, 3, 4, 5}, t.eps1);
      break;
    case Genus2Type::Dumbbell:
      put({0, 1}, t.eps1);
      put({3, 4}, t.eps2);
      break;
    case Genus2Type::DumbbellFrob:
      put({0, 1}, t.eps1);
      put({3, 4}, +1);
      break;
  }
  return {std::move(pic), std::move(g)};
}

std::string reduction_type_label(const ClusterPicture& p, const GaloisData& g) {
  if (p.genus() == 2) return classify_genus2(p, g).label();
  return serialize_picture(p, &g);
}

}  // namespace hyc
