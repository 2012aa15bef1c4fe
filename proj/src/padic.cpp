#include "padic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hyc {

namespace {

bool is_prime_small(const Z& p) {
  if (p < 2) return false;
  for (Z f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

bool squarefree(Z d) {
  if (d < 0) d = -d;
  for (Z f = 2; f * f <= d; ++f)
    if (d % (f * f) == 0) return false;
  return true;
}

// residue of a p-integral rational in lowest terms
Z residue_mod(const Q& q, const Z& m, const Z& p) {
  Z n = num(q) % m, d = den(q) % m;
  if (n < 0) n += m;
  return n * mod_inv(d, m) % m;
}

// Legendre symbol of the unit part of a nonzero rational with even valuation
int unit_sign(const Q& t, const Z& p) {
  Z v = val_rational(t, p);
  Q u = t;
  for (Z i = 0; i < v; ++i) u /= p;
  for (Z i = 0; i < -v; ++i) u *= p;
  return legendre(residue_mod(u, p, p), p);
}

}  // namespace

QuadElt sub(const QuadElt& x, const QuadElt& y) {
  Z d = x.b != 0 ? x.d : y.d;
  if (x.b != 0 && y.b != 0 && x.d != y.d)
    throw std::invalid_argument("mixed surd bases");
  return {x.a - y.a, x.b - y.b, d};
}

QuadElt mul(const QuadElt& x, const QuadElt& y) {
  Z d = x.b != 0 ? x.d : y.d;
  if (x.b != 0 && y.b != 0 && x.d != y.d)
    throw std::invalid_argument("mixed surd bases");
  return {x.a * y.a + x.b * y.b * Q(d), x.a * y.b + x.b * y.a, d};
}

Q val_element(const Q& a, const Q& b, const Z& d, const Z& p) {
  if (b == 0) {
    if (a == 0) throw std::invalid_argument("valuation of zero");
    return Q(val_rational(a, p));
  }
  Z dd = d;
  if (dd == 0 || dd == 1 || !squarefree(dd))
    throw std::invalid_argument("not a surd, normalize first");
  {
    Z r = boost::multiprecision::sqrt(dd < 0 ? Z(0) : dd);
    if (dd > 0 && r * r == dd)
      throw std::invalid_argument("not a surd, normalize first");
  }
  bool ramified = dd % p == 0;
  bool split = !ramified && legendre(dd, p) == 1;
  if (!split) {
    // v = (1/2) v(Norm) = (1/2) v(a^2 - b^2 d)
    Q norm = a * a - b * b * Q(dd);
    return Q(val_rational(norm, p)) / 2;
  }
  // sqrt(d) in Q_p: evaluate a + b s with the principal branch of s
  if (a == 0) return Q(val_rational(b, p));
  Z m = std::min(val_rational(a, p), val_rational(b, p));
  Q pa = a, pb = b;
  Q pm = 1;
  // scale by p^-m so both parts are p-integral and one is a unit
  if (m > 0) for (Z i = 0; i < m; ++i) { pa /= p; pb /= p; }
  if (m < 0) for (Z i = 0; i < -m; ++i) { pa *= p; pb *= p; }
  Z r0 = *sqrt_mod_p(((dd % p) + p) % p, p);
  if (p - r0 < r0) r0 = p - r0;   // principal branch
  for (unsigned prec = 8;; prec *= 2) {
    if (prec > 4096) throw std::logic_error("val_element: lifting did not stabilize");
    Z mod = 1;
    for (unsigned i = 0; i < prec; ++i) mod *= p;
    Z s = lift_sqrt(((dd % mod) + mod) % mod, p, prec, r0);
    Z t = (residue_mod(pa, mod, p) + residue_mod(pb, mod, p) * s) % mod;
    if (t == 0) continue;
    Z v = val_int(t, p);
    if (v < Z(prec)) return Q(m + v);
  }
}

Q val_quad(const QuadElt& x, const Z& p) { return val_element(x.a, x.b, x.d, p); }

void validate_rootset(const RootSet& rs) {
  if (rs.p < 3 || rs.p % 2 == 0 || !is_prime_small(rs.p))
    throw std::invalid_argument("p must be an odd prime");
  if (rs.leading_coefficient == 0)
    throw std::invalid_argument("leading coefficient is zero");
  if (rs.roots.size() < 5)
    throw std::invalid_argument("need at least 5 roots (genus >= 2)");
  Z d = 0;
  for (const auto& r : rs.roots) {
    if (!r.is_surd()) continue;
    if (d == 0) d = r.d;
    if (r.d != d)
      throw std::invalid_argument("all surds must share one quadratic base d");
    if (r.d == 0 || r.d == 1 || !squarefree(r.d))
      throw std::invalid_argument("d must be squarefree and not 0 or 1");
  }
  // duplicates and conjugate pairing
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    for (size_t j = i + 1; j < rs.roots.size(); ++j)
      if (rs.roots[i].a == rs.roots[j].a && rs.roots[i].b == rs.roots[j].b)
        throw std::invalid_argument("duplicate roots");
    if (!rs.roots[i].is_surd()) continue;
    bool paired = false;
    for (size_t j = 0; j < rs.roots.size(); ++j)
      if (rs.roots[j].a == rs.roots[i].a && rs.roots[j].b == -rs.roots[i].b)
        paired = true;
    if (!paired)
      throw std::invalid_argument("surd roots must come in conjugate pairs");
  }
}

IngestResult build_from_roots(const RootSet& rs) {
  validate_rootset(rs);
  IngestResult out;
  int n = (int)rs.roots.size();
  for (const auto& r : rs.roots) out.root_values.push_back({r.a, r.b, r.d});

  out.distances.assign(n, std::vector<Q>(n, 0));
  std::set<Q> levels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Q v = val_quad(sub(out.root_values[i], out.root_values[j]), rs.p);
      out.distances[i][j] = out.distances[j][i] = v;
      levels.insert(v);
    }

  // single-linkage merge over decreasing valuation levels
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  std::set<std::vector<int>> blocks;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (out.distances[i][j] >= *it) uf[find(i)] = find(j);
    std::map<int, std::vector<int>> comp;
    for (int i = 0; i < n; ++i) comp[find(i)].push_back(i);
    for (auto& [root, mem] : comp)
      if (mem.size() >= 2) blocks.insert(mem);
  }

  ClusterPicture p;
  p.root_count = n;
  p.leading_valuation = val_rational(rs.leading_coefficient, rs.p);
  for (const auto& mem : blocks) {
    Q depth = out.distances[mem[0]][mem[1]];
    for (size_t a = 0; a < mem.size(); ++a)
      for (size_t b = a + 1; b < mem.size(); ++b)
        depth = std::min(depth, out.distances[mem[a]][mem[b]]);
    p.clusters.push_back({mem, depth, -1, {}});
  }
  if (!p.normalize()) throw std::logic_error("discs are not laminar");
  out.picture = std::move(p);
  return out;
}

void galois_from_roots(const RootSet& rs, IngestResult& out) {
  int n = (int)rs.roots.size();
  GaloisData g = GaloisData::trivial(n, rs.p);
  g.tame_attested = false;
  g.from_roots = true;
  Z d = 0;
  for (const auto& r : rs.roots)
    if (r.is_surd()) d = r.d;
  bool ramified = d != 0 && d % rs.p == 0;
  bool nonsplit_unram = d != 0 && !ramified && legendre(d, rs.p) == -1;
  for (int i = 0; i < n; ++i) {
    if (!rs.roots[i].is_surd()) continue;
    int conj = -1;
    for (int j = 0; j < n; ++j)
      if (rs.roots[j].a == rs.roots[i].a && rs.roots[j].b == -rs.roots[i].b) conj = j;
    if (ramified) g.inertia[i] = conj;
    else if (nonsplit_unram) g.frobenius[i] = conj;
  }
  out.galois = std::move(g);
}

namespace {

QuadElt frob_apply(const QuadElt& x, bool nonsplit_unram) {
  return nonsplit_unram ? x.conj() : x;
}

void assign_centres(const RootSet& rs, IngestResult& out) {
  const auto& p = out.picture;
  int nc = (int)p.clusters.size();
  out.centres.assign(nc, QuadElt{0, 0, 0});
  Z d = 0;
  for (const auto& r : rs.roots)
    if (r.is_surd()) d = r.d;
  bool nonsplit_unram = d != 0 && d % rs.p != 0 && legendre(d, rs.p) == -1;

  std::vector<char> done(nc, 0);
  for (int s = 0; s < nc; ++s) {
    if (done[s]) continue;
    const auto& mem = p.clusters[s].members;
    QuadElt z = out.root_values[mem[0]];
    bool found = false;
    for (int r : mem)
      if (!rs.roots[r].is_surd()) { z = out.root_values[r]; found = true; break; }
    if (!found) {
      // midpoint of a conjugate pair inside the cluster, if any
      for (size_t a = 0; a < mem.size() && !found; ++a)
        for (size_t b = a + 1; b < mem.size() && !found; ++b)
          if (rs.roots[mem[a]].a == rs.roots[mem[b]].a &&
              rs.roots[mem[a]].b == -rs.roots[mem[b]].b) {
            z = {rs.roots[mem[a]].a, 0, 0};
            found = true;
          }
    }
    out.centres[s] = z;
    done[s] = 1;
    // transport along the Frobenius orbit so that z_{sigma s} = sigma(z_s)
    int t = cluster_image(p, out.galois.frobenius, s);
    if (t >= 0 && t != s && !done[t]) {
      out.centres[t] = frob_apply(z, nonsplit_unram);
      done[t] = 1;
    }
  }
}

}  // namespace

void epsilon_signs(const RootSet& rs, IngestResult& out) {
  const auto& p = out.picture;
  auto& g = out.galois;
  Z d = 0;
  for (const auto& r : rs.roots)
    if (r.is_surd()) d = r.d;

  // T = c_f * prod over roots outside star(s) of (z - r), as an element of
  // Q(sqrt d); with equivariant centres it is rational for stable clusters
  auto theta_sq = [&](int s) -> QuadElt {
    int st = star(p, s);
    QuadElt t{rs.leading_coefficient, 0, 0};
    std::set<int> inside(p.clusters[st].members.begin(), p.clusters[st].members.end());
    for (int r = 0; r < p.root_count; ++r)
      if (!inside.count(r)) t = mul(t, sub(out.centres[st], out.root_values[r]));
    return t;
  };

  std::set<int> handled;
  for (int s = 0; s < (int)p.clusters.size(); ++s) {
    if (handled.count(s)) continue;
    auto attr = classify_cluster(p, s);
    if (!(attr.even || attr.cotwin)) continue;
    // the sign is a function of star(s): determined individually whenever the
    // star is Frobenius-stable, otherwise only as a product over the orbit
    int img = cluster_image(p, g.frobenius, s);
    int st = star(p, s);
    if (cluster_image(p, g.frobenius, st) == st) {
      QuadElt t = theta_sq(s);
      if (t.b != 0) continue;  // centre not rational; leave unknown
      Z v = val_rational(t.a, rs.p);
      if (v % 2 != 0) continue;  // theta ramified: sign depends on the lift
      g.epsilon[s] = unit_sign(t.a, rs.p);
      handled.insert(s);
    } else {
      // Frobenius-swapped pair: only the product of the two signs is
      // canonical; normalize the stored pair to (+1, product)
      QuadElt prod = mul(theta_sq(s), theta_sq(img));
      if (prod.b != 0) continue;
      Z v = val_rational(prod.a, rs.p);
      if (v % 2 != 0) continue;
      int sign = unit_sign(prod.a, rs.p);
      g.epsilon[s] = 1;
      g.epsilon[img] = sign;
      handled.insert(s);
      handled.insert(img);
    }
  }
}

IngestResult ingest(const RootSet& rs) {
  IngestResult out = build_from_roots(rs);
  galois_from_roots(rs, out);
  assign_centres(rs, out);
  epsilon_signs(rs, out);
  return out;
}

}  // namespace hyc
