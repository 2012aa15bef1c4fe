#include "dualgraph.hpp"

#include <algorithm>
#include <cassert>
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
  if (!is_integer(q)) throw std::logic_error("expected an integral chain length");
  return num(q);
}

}  // namespace

DualGraph dual_graph(const ClusterPicture& p, const GaloisData& g) {
  auto ss = check_semistability(p, g);
  if (!ss.semistable)
    throw std::invalid_argument("dual graph requires semistable input: " + ss.witnesses[0]);

  DualGraph dg;
  std::map<std::pair<int, int>, int> vmap;
  std::set<int> need_eps;
  for (int s : proper_clusters(p)) {
    auto a = classify_cluster(p, s);
    if (!a.principal) continue;
    if (a.ubereven) {
      need_eps.insert(s);
      for (int sign : {+1, -1}) {
        vmap[{s, sign}] = (int)dg.vertices.size();
        dg.vertices.push_back({s, sign, a.genus});
      }
    } else {
      vmap[{s, 0}] = (int)dg.vertices.size();
      dg.vertices.push_back({s, 0, a.genus});
    }
  }
  auto vert = [&](int s, int sign) {
    auto it = vmap.find({s, sign});
    if (it == vmap.end()) it = vmap.find({s, 0});
    assert(it != vmap.end());
    return it->second;
  };
  auto add_chain = [&](std::string name, int from, int to, const Q& len,
                       ChainKind kind, int cluster) {
    assert(len > 0);
    dg.chains.push_back({std::move(name), from, to, as_int(len), kind, cluster});
  };

  for (int s : proper_clusters(p)) {
    auto a = classify_cluster(p, s);
    std::string nm = cluster_name(p, s);
    if (a.principal && s != p.top) {
      int par = p.parent(s);
      if (classify_cluster(p, par).principal) {
        if (a.odd) {
          add_chain("L" + nm, vert(s, 0), vert(par, 0), p.delta(s) / 2,
                    ChainKind::OddChild, s);
        } else {
          need_eps.insert(s);
          add_chain("L" + nm + "+", vert(s, +1), vert(par, +1), p.delta(s),
                    ChainKind::EvenChildPlus, s);
          add_chain("L" + nm + "-", vert(s, -1), vert(par, -1), p.delta(s),
                    ChainKind::EvenChildMinus, s);
        }
      }
    }
    if (a.twin && classify_cluster(p, p.parent(s)).principal) {
      need_eps.insert(s);
      int par = p.parent(s);
      add_chain("L" + nm, vert(par, -1), vert(par, +1), 2 * p.delta(s),
                ChainKind::TwinLoop, s);
    }
    if (a.cotwin) {
      // loop at the principal child of size 2g
      int c = -1;
      for (int ch : p.clusters[s].children)
        if (p.size(ch) == 2 * p.genus()) c = ch;
      assert(c >= 0);
      need_eps.insert(s);
      add_chain("L" + nm, vert(c, -1), vert(c, +1), 2 * p.delta(c),
                ChainKind::CotwinLoop, s);
    }
  }

  // top cluster that is neither principal nor a cotwin: a disjoint union of
  // two clusters, linked directly
  auto top_attr = classify_cluster(p, p.top);
  if (!top_attr.principal && !top_attr.cotwin) {
    std::vector<int> kids;
    for (int c : p.clusters[p.top].children)
      if (p.is_proper(c)) kids.push_back(c);
    if (kids.size() == 2) {
      int c1 = kids[0], c2 = kids[1];
      auto a1 = classify_cluster(p, c1), a2 = classify_cluster(p, c2);
      Q dsum = p.delta(c1) + p.delta(c2);
      if (a1.odd && a2.odd) {
        add_chain("Ltop", vert(c1, 0), vert(c2, 0), dsum / 2,
                  ChainKind::SplitTopOdd, c1);
      } else if (a1.principal && a2.principal) {  // both even
        need_eps.insert(p.top);
        add_chain("Ltop+", vert(c1, +1), vert(c2, +1), dsum,
                  ChainKind::SplitTopPlus, c1);
        add_chain("Ltop-", vert(c1, -1), vert(c2, -1), dsum,
                  ChainKind::SplitTopMinus, c1);
      } else {
        // one principal even cluster and one twin
        int c = a1.twin ? c2 : c1, t = a1.twin ? c1 : c2;
        assert(classify_cluster(p, t).twin);
        need_eps.insert(t);
        add_chain("Ltop", vert(c, -1), vert(c, +1), 2 * dsum,
                  ChainKind::SplitTopTwin, t);
      }
    }
  }

  // Frobenius action; epsilon signs are required wherever the sign formula
  // touches the graph
  std::vector<std::string> missing;
  for (int s : need_eps)
    if (epsilon_of(g, s) == 0)
      missing.push_back(cluster_name(p, s));
  if (!missing.empty()) {
    std::string msg = "unknown epsilon sign needed for:";
    for (auto& m : missing) msg += " " + m;
    throw std::runtime_error(msg);
  }
  // the sign is a function of star(s): clusters sharing a star must agree
  std::map<int, int> star_sign;
  for (int s : need_eps) {
    int st = star(p, s);
    auto [it, fresh] = star_sign.insert({st, epsilon_of(g, s)});
    if (!fresh && it->second != epsilon_of(g, s))
      throw std::invalid_argument("inconsistent epsilon signs on clusters sharing " +
                                  cluster_name(p, st));
  }
  auto eps = [&](int s) { return epsilon_of(g, s); };
  auto img = [&](int s) { return cluster_image(p, g.frobenius, s); };

  for (const auto& v : dg.vertices) {
    int t = img(v.cluster);
    dg.vertex_image.push_back(v.sign == 0 ? vert(t, 0) : vert(t, v.sign * eps(v.cluster)));
  }
  std::map<std::pair<ChainKind, int>, int> cmap;
  for (int i = 0; i < (int)dg.chains.size(); ++i)
    cmap[{dg.chains[i].kind, dg.chains[i].cluster}] = i;
  auto chain_at = [&](ChainKind k, int c) {
    auto it = cmap.find({k, c});
    assert(it != cmap.end());
    return it->second;
  };
  for (const auto& ch : dg.chains) {
    int t = img(ch.cluster);
    switch (ch.kind) {
      case ChainKind::OddChild:
        dg.chain_image.push_back(chain_at(ch.kind, t));
        dg.chain_orientation.push_back(+1);
        break;
      case ChainKind::EvenChildPlus:
      case ChainKind::EvenChildMinus: {
        bool plus = ch.kind == ChainKind::EvenChildPlus;
        bool iplus = (eps(ch.cluster) == 1) == plus;
        dg.chain_image.push_back(chain_at(
            iplus ? ChainKind::EvenChildPlus : ChainKind::EvenChildMinus, t));
        dg.chain_orientation.push_back(+1);
        break;
      }
      case ChainKind::TwinLoop:
      case ChainKind::CotwinLoop:
        dg.chain_image.push_back(chain_at(ch.kind, t));
        dg.chain_orientation.push_back(eps(ch.cluster));
        break;
      case ChainKind::SplitTopOdd:
        dg.chain_image.push_back(chain_at(ch.kind, ch.cluster));
        dg.chain_orientation.push_back(t == ch.cluster ? +1 : -1);
        break;
      case ChainKind::SplitTopPlus:
      case ChainKind::SplitTopMinus: {
        bool plus = ch.kind == ChainKind::SplitTopPlus;
        bool iplus = (eps(p.top) == 1) == plus;
        dg.chain_image.push_back(chain_at(
            iplus ? ChainKind::SplitTopPlus : ChainKind::SplitTopMinus, ch.cluster));
        dg.chain_orientation.push_back(t == ch.cluster ? +1 : -1);
        break;
      }
      case ChainKind::SplitTopTwin:
        dg.chain_image.push_back(chain_at(ch.kind, t));
        dg.chain_orientation.push_back(eps(ch.cluster));
        break;
    }
  }
  return dg;
}

ExpandedGraph expand(const DualGraph& dg) {
  ExpandedGraph eg;
  eg.core_vertices = (int)dg.vertices.size();
  eg.total_vertices = eg.core_vertices;
  for (int i = 0; i < (int)dg.chains.size(); ++i) {
    const auto& ch = dg.chains[i];
    int prev = ch.from;
    for (Z k = 1; k < ch.length; ++k) {
      int mid = eg.total_vertices++;
      eg.edges.push_back({prev, mid});
      eg.edge_chain.push_back(i);
      prev = mid;
    }
    eg.edges.push_back({prev, ch.to});
    eg.edge_chain.push_back(i);
  }
  return eg;
}

int cycle_rank(const ExpandedGraph& eg) {
  // E - V + number of connected components
  std::vector<int> comp(eg.total_vertices, -1);
  int ncomp = 0;
  for (int s = 0; s < eg.total_vertices; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : eg.edges) {
        int w = a == v ? b : b == v ? a : -1;
        if (w >= 0 && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  return (int)eg.edges.size() - eg.total_vertices + ncomp;
}

Z count_components(const ClusterPicture& p, const GaloisData& g) {
  Q total = 1;
  for (int s : proper_clusters(p)) {
    if (s == p.top) continue;
    total += p.size(s) % 2 == 1 ? p.delta(s) / 2 : 2 * p.delta(s);
  }
  auto eg = expand(dual_graph(p, g));
  Q m = total - cycle_rank(eg);
  // the formula and the built graph must count the same components
  if (!is_integer(m) || m != eg.total_vertices)
    throw std::logic_error("component count mismatch between formula and graph");
  return num(m);
}

DualGraph stable_graph(const ClusterPicture& p, const GaloisData& g) {
  DualGraph dg = dual_graph(p, g);
  for (auto& ch : dg.chains) ch.length = 1;
  return dg;
}

std::string emit_dot(const DualGraph& dg, const ClusterPicture& p) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (int i = 0; i < (int)dg.vertices.size(); ++i) {
    const auto& v = dg.vertices[i];
    os << "  v" << i << " [label=\"s:" << p.size(v.cluster) << "@"
       << show_rational(p.depth(v.cluster)) << " g=" << v.genus;
    if (v.sign) os << " sign=" << (v.sign > 0 ? "+" : "-");
    os << "\"];\n";
  }
  for (const auto& ch : dg.chains)
    os << "  v" << ch.from << " -- v" << ch.to << " [label=\"" << ch.name
       << " len=" << ch.length << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

// residue arithmetic in F_p or F_p(sqrt(dbar)) for the fixed non-residue dbar
struct ResCtx {
  Z p, dbar;  // dbar = 0 when no quadratic part survives reduction
};

Residue rmul(const Residue& x, const Residue& y, const ResCtx& c) {
  Z a = (x.a * y.a + x.b * y.b * c.dbar) % c.p;
  Z b = (x.a * y.b + x.b * y.a) % c.p;
  if (a < 0) a += c.p;
  if (b < 0) b += c.p;
  return {a, b};
}

Residue rinv(const Residue& x, const ResCtx& c) {
  if (x.b == 0) return {mod_inv(x.a, c.p), 0};
  Z nrm = (x.a * x.a - x.b * x.b * c.dbar) % c.p;
  if (nrm < 0) nrm += c.p;
  Z ninv = mod_inv(nrm, c.p);
  Z a = x.a * ninv % c.p, b = (c.p - x.b % c.p) * ninv % c.p;
  return {a, b % c.p};
}

Residue rpow(Residue x, Z e, const ResCtx& c) {
  if (e < 0) {
    x = rinv(x, c);
    e = -e;
  }
  Residue r{1, 0};
  while (e > 0) {
    if (e % 2 == 1) r = rmul(r, x, c);
    x = rmul(x, x, c);
    e /= 2;
  }
  return r;
}

// residue of a p-integral rational (denominator prime to p)
Z rat_residue(const Q& q, const Z& p) {
  Z n = num(q) % p, d = den(q) % p;
  if (n < 0) n += p;
  return n * mod_inv(d, p) % p;
}

// residue of x / p^k; throws if not integral
Residue residue_shift(const QuadElt& x, const Z& k, const Z& p) {
  auto part = [&](const Q& q, bool under_surd) -> Z {
    if (q == 0) return 0;
    Z v = val_rational(q, p);
    Z eff_num = 2 * v + (under_surd && x.d % p == 0 ? 1 : 0);  // valuation * 2
    if (eff_num < 2 * k) throw std::invalid_argument("residue of a non-integral element");
    if (eff_num > 2 * k) return 0;
    Q u = q;
    for (Z i = 0; i < k; ++i) u /= p;
    return rat_residue(u, p);
  };
  return {part(x.a, false), part(x.b, true)};
}

ResCtx residue_context(const RootSet& rs) {
  Z d = 0;
  for (const auto& r : rs.roots)
    if (r.is_surd()) d = r.d;
  if (d != 0 && d % rs.p != 0 && legendre(d, rs.p) == -1) {
    Z db = d % rs.p;
    if (db < 0) db += rs.p;
    return {rs.p, db};
  }
  return {rs.p, 0};
}

}  // namespace

ComponentDescriptor component_descriptor(const RootSet& rs, const IngestResult& in, int s) {
  const auto& p = in.picture;
  if (!classify_cluster(p, s).principal)
    throw std::invalid_argument("component descriptor needs a principal cluster");
  ComponentDescriptor cd;
  cd.cluster = s;
  cd.genus = classify_cluster(p, s).genus;

  QuadElt t{rs.leading_coefficient, 0, 0};
  std::set<int> inside(p.clusters[s].members.begin(), p.clusters[s].members.end());
  for (int r = 0; r < p.root_count; ++r)
    if (!inside.count(r)) t = mul(t, sub(in.centres[s], in.root_values[r]));
  Q v = val_quad(t, rs.p);
  if (!is_integer(v))
    throw std::invalid_argument("c_s has non-integral valuation");
  ResCtx ctx = residue_context(rs);
  cd.c_s = residue_shift(t, num(v), rs.p);

  Z ds = num(p.depth(s));
  for (int o : p.clusters[s].children) {
    QuadElt diff = sub(in.centres[o], in.centres[s]);
    Residue red = (diff.a == 0 && diff.b == 0) ? Residue{0, 0}
                                               : residue_shift(diff, ds, rs.p);
    if (p.size(o) % 2 == 1) cd.branch_points.push_back({o, red});
    if (p.size(o) == 2 && p.delta(o) == Q(1, 2)) cd.squared_points.push_back({o, red});
  }
  cd.quadratic = ctx.dbar != 0 &&
                 (cd.c_s.b != 0 ||
                  std::any_of(cd.branch_points.begin(), cd.branch_points.end(),
                              [](const auto& bp) { return bp.second.b != 0; }));
  return cd;
}

ReducedPoint reduce_point(const RootSet& rs, const IngestResult& in,
                          const QuadElt& x, const QuadElt& y) {
  const auto& p = in.picture;
  // exact on-curve check
  QuadElt f{rs.leading_coefficient, 0, 0};
  for (const auto& rv : in.root_values) f = mul(f, sub(x, rv));
  QuadElt y2 = mul(y, y);
  if (y2.a != f.a || y2.b != f.b)
    throw std::invalid_argument("point is not on the curve");

  ResCtx ctx = residue_context(rs);
  int g2 = 2 * p.genus();
  auto vx = [&](int s) {
    QuadElt diff = sub(x, in.centres[s]);
    if (diff.a == 0 && diff.b == 0) return std::optional<Q>();  // infinite depth
    return std::optional<Q>(val_quad(diff, rs.p));
  };
  auto reds = [&](int s, int child) {
    QuadElt diff = sub(in.centres[child], in.centres[s]);
    return (diff.a == 0 && diff.b == 0)
               ? Residue{0, 0}
               : residue_shift(diff, num(p.depth(s)), rs.p);
  };

  ReducedPoint out;
  int s = p.top;
  if (!classify_cluster(p, s).principal) {
    // split or cotwin top: enter the principal child containing the point
    int entered = -1;
    for (int c : p.clusters[s].children) {
      if (!p.is_proper(c) || !classify_cluster(p, c).principal) continue;
      auto vc = vx(c);
      if (!vc || *vc >= p.depth(c)) entered = c;
    }
    if (entered < 0) {
      // between the top-level components
      const auto& kids = p.clusters[s].children;
      out.chain_from = kids[0];
      out.chain_to = kids.back();
      return out;
    }
    s = entered;
  }
  while (true) {
    auto v = vx(s);
    if (v && *v < p.depth(s)) {
      // only reachable on entry, where |s| >= 2g+1
      assert(p.size(s) >= g2 + 1);
      out.component = s;
      out.at_infinity = true;
      return out;
    }
    Residue rx = v ? residue_shift(sub(x, in.centres[s]), num(p.depth(s)), rs.p)
                   : Residue{0, 0};
    int clash_child = -1;
    for (int c : p.clusters[s].children)
      if (reds(s, c) == rx) clash_child = c;
    if (clash_child < 0) {
      out.component = s;
      out.x = rx;
      Residue ry = residue_shift(y, num(nu(p, s) / 2), rs.p);
      for (int c : p.clusters[s].children) {
        Z fl = p.size(c) / 2;
        if (fl == 0) continue;
        Residue rc = reds(s, c);
        Residue diff{((rx.a - rc.a) % ctx.p + ctx.p) % ctx.p,
                     ((rx.b - rc.b) % ctx.p + ctx.p) % ctx.p};
        ry = rmul(ry, rpow(diff, -fl, ctx), ctx);
      }
      out.y = ry;
      return out;
    }
    if (p.is_proper(clash_child) && classify_cluster(p, clash_child).principal) {
      auto vc = vx(clash_child);
      if (!vc || *vc >= p.depth(clash_child)) {
        s = clash_child;
        continue;
      }
    }
    // the point sits on a chain between Gamma_s and the clash child's side
    out.chain_from = clash_child;
    out.chain_to = s;
    return out;
  }
}

}  // namespace hyc
