#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invariants.hpp"

#include <array>
#include <numeric>

using namespace hyc;

namespace {

// 1, 1+p^2, 1-p^2, p, 0, p^3, -p^3
RootSet example7_roots(const Z& p) {
  Q p2 = Q(p) * Q(p), p3 = p2 * Q(p);
  return {p, 1, {{1, 0, 0}, {1 + p2, 0, 0}, {1 - p2, 0, 0},
                 {Q(p), 0, 0}, {0, 0, 0}, {p3, 0, 0}, {-p3, 0, 0}}};
}

ClusterPicture example7_picture() {
  return make_picture(7, 0, {{{0, 1, 2, 3, 4, 5, 6}, 0},
                             {{0, 1, 2}, 2},
                             {{3, 4, 5, 6}, 1},
                             {{4, 5, 6}, 3}});
}

// two twins of relative depths n/2 and m/2 beside two free roots
ClusterPicture twins_picture(int n, int m) {
  return make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0},
                             {{0, 1}, Q(n, 2)},
                             {{2, 3}, Q(m, 2)}});
}

// three twins filling an ubereven top cluster
ClusterPicture theta_picture(int n, int m, int k) {
  return make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0},
                             {{0, 1}, Q(n, 2)},
                             {{2, 3}, Q(m, 2)},
                             {{4, 5}, Q(k, 2)}});
}

// realizable annotation: any twin of half-integer depth gets an inertia swap
GaloisData annotate(const ClusterPicture& p, int eps) {
  GaloisData g = GaloisData::trivial(p.root_count);
  for (int s : proper_clusters(p)) {
    if (s == p.top) continue;
    if (p.size(s) == 2 && !is_integer(p.depth(s))) {
      int a = p.clusters[s].members[0], b = p.clusters[s].members[1];
      g.inertia[a] = b;
      g.inertia[b] = a;
    }
    auto at = classify_cluster(p, s);
    if (at.even || at.cotwin) g.epsilon[s] = eps;
  }
  auto at = classify_cluster(p, p.top);
  if (at.ubereven || at.cotwin) g.epsilon[p.top] = eps;
  // cotwins carry the sign of their big child too
  for (int s : proper_clusters(p))
    if (classify_cluster(p, s).cotwin)
      for (int ch : p.clusters[s].children)
        if (p.size(ch) == 2 * p.genus()) g.epsilon[ch] = eps;
  return g;
}

}  // namespace

TEST_CASE("homology of the 7-root example") {
  auto p = example7_picture();
  int s2 = p.find({3, 4, 5, 6});
  for (int eps : {1, -1}) {
    GaloisData g = GaloisData::trivial(7);
    g.epsilon[s2] = eps;
    auto hl = homology_lattice(p, g);
    CHECK(hl.rank == 1);
    REQUIRE(hl.A.size() == 1);
    CHECK(hl.A[0] == s2);
    CHECK(hl.B.empty());
    CHECK(hl.gram == MatZ{{2}});
    CHECK(hl.frob == MatZ{{eps}});
    CHECK(conductor_semistable(p, g) == 1);
    CHECK(tamagawa(hl) == 2);
    CHECK(root_number(hl) == (eps == 1 ? -1 : 1));
    CHECK_FALSE(deficiency(p, g));
  }
}

TEST_CASE("homology from ingested roots") {
  for (Z p : {Z(7), Z(13)}) {
    auto res = ingest(example7_roots(p));
    auto hl = homology_lattice(res.picture, res.galois);
    CHECK(hl.rank == 1);
    CHECK(hl.gram == MatZ{{2}});
    CHECK(hl.frob == MatZ{{legendre(-1, p)}});
    CHECK(tamagawa(hl) == 2);
  }
}

TEST_CASE("missing and inconsistent epsilon signs") {
  auto p = example7_picture();
  GaloisData g = GaloisData::trivial(7);
  CHECK_THROWS_AS(homology_lattice(p, g), std::runtime_error);

  // a pair of twins under an ubereven top shares its sign; disagreeing
  // annotations cannot define an action on the homology
  auto q = theta_picture(2, 2, 4);
  GaloisData h = GaloisData::trivial(6);
  h.epsilon[q.find({0, 1})] = 1;
  h.epsilon[q.find({2, 3})] = -1;
  h.epsilon[q.find({4, 5})] = 1;
  CHECK_THROWS_AS(homology_lattice(q, h), std::logic_error);

  ClusterPicture bad = make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0},
                                           {{0, 1, 2}, Q(1, 2)}});
  CHECK_THROWS_AS(homology_lattice(bad, GaloisData::trivial(6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(conductor_semistable(bad, GaloisData::trivial(6)),
                  std::invalid_argument);
}

TEST_CASE("two independent twins") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {1, 2}}) {
    auto p = twins_picture(n, m);
    auto g = annotate(p, 1);
    auto hl = homology_lattice(p, g);
    CHECK(hl.rank == 2);
    CHECK(hl.gram == MatZ{{n, 0}, {0, m}});
    CHECK(hl.frob == identity_z(2));
    CHECK(conductor_semistable(p, g) == 2);
    CHECK(tamagawa(hl) == Z(n) * m);
    CHECK(root_number(hl) == 1);
  }
}

TEST_CASE("single twin, both signs") {
  for (int n : {2, 3, 4, 7}) {
    auto p = make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0}, {{0, 1}, Q(n, 2)}});
    for (int eps : {1, -1}) {
      auto g = annotate(p, eps);
      auto hl = homology_lattice(p, g);
      CHECK(hl.rank == 1);
      CHECK(hl.gram == MatZ{{n}});
      CHECK(tamagawa(hl) == (eps == 1 ? Z(n) : Z(std::gcd(2, n))));
      CHECK(root_number(hl) == (eps == 1 ? -1 : 1));
    }
  }
}

TEST_CASE("theta configuration under an ubereven top") {
  for (auto [n, m, k] : std::vector<std::array<int, 3>>{
           {1, 2, 3}, {2, 2, 2}, {3, 3, 3}, {2, 4, 6}, {1, 1, 5}}) {
    auto p = theta_picture(n, m, k);
    CHECK(classify_cluster(p, p.top).ubereven);
    Z t = Z(n) * m + Z(n) * k + Z(m) * k;
    Z d = std::gcd(std::gcd(n, m), k);

    auto gp = annotate(p, 1);
    auto hp = homology_lattice(p, gp);
    CHECK(hp.rank == 2);
    CHECK(hp.B.size() == 3);
    CHECK(hp.gram == MatZ{{n + m, n}, {n, n + k}});
    CHECK(det(hp.gram) == t);
    CHECK(tamagawa(hp) == t);
    CHECK(root_number(hp) == 1);

    auto gm = annotate(p, -1);
    auto hm = homology_lattice(p, gm);
    CHECK(hm.frob == MatZ{{-1, 0}, {0, -1}});
    Z expect = (d % 2 == 0 ? 2 : 1) * ((t / d) % 2 == 0 ? Z(2) : Z(1));
    CHECK(tamagawa(hm) == expect);
    CHECK(root_number(hm) == 1);
  }
}

TEST_CASE("frobenius-swapped twins") {
  auto p = twins_picture(3, 3);
  GaloisData g = annotate(p, 1);
  g.frobenius = {2, 3, 0, 1, 4, 5};
  REQUIRE(is_picture_automorphism(p, g.frobenius));
  int t1 = p.find({0, 1}), t2 = p.find({2, 3});
  for (int prod : {1, -1}) {
    g.epsilon[t1] = 1;
    g.epsilon[t2] = prod;
    auto hl = homology_lattice(p, g);
    CHECK(hl.gram == MatZ{{3, 0}, {0, 3}});
    CHECK(mul(mul(transpose(hl.frob), hl.gram), hl.frob) == hl.gram);
    CHECK(tamagawa(hl) == (prod == 1 ? 3 : 1));
    CHECK(root_number(hl) == (prod == 1 ? -1 : 1));
  }
}

TEST_CASE("cycle space of the expanded graph is isometric to the homology") {
  std::vector<std::pair<ClusterPicture, GaloisData>> cases;
  {
    auto p = example7_picture();
    cases.emplace_back(p, annotate(p, 1));
  }
  cases.emplace_back(twins_picture(2, 4), annotate(twins_picture(2, 4), 1));
  cases.emplace_back(theta_picture(1, 2, 3), annotate(theta_picture(1, 2, 3), 1));
  cases.emplace_back(theta_picture(2, 2, 4), annotate(theta_picture(2, 2, 4), 1));
  {
    // cotwin top over an ubereven principal cluster holding two twins
    auto p = make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0},
                                 {{0, 1, 2, 3}, 1},
                                 {{0, 1}, Q(3, 2)},
                                 {{2, 3}, 2}});
    cases.emplace_back(p, annotate(p, 1));
  }
  for (auto& [p, g] : cases) {
    auto hl = homology_lattice(p, g);
    auto dg = dual_graph(p, g);
    auto cg = cycle_space_gram(dg);
    REQUIRE((int)cg.size() == hl.rank);
    CHECK(lattices_isometric(hl.gram, cg));
  }
}

TEST_CASE("homology under a cotwin top") {
  // twins of relative depths n/2 = 1/2, m/2 = 1 inside a principal ubereven
  // cluster of depth 1; pairing [[n+2, 2], [2, m+2]] with the shared offset 2
  auto p = make_picture(6, 0, {{{0, 1, 2, 3, 4, 5}, 0},
                               {{0, 1, 2, 3}, 1},
                               {{0, 1}, Q(3, 2)},
                               {{2, 3}, 2}});
  CHECK(classify_cluster(p, p.top).cotwin);
  CHECK(classify_cluster(p, p.find({0, 1, 2, 3})).ubereven);
  auto g = annotate(p, 1);
  auto hl = homology_lattice(p, g);
  CHECK(hl.rank == 2);
  CHECK(hl.B.empty());
  CHECK(hl.gram == MatZ{{1 + 2, 2}, {2, 2 + 2}});
  CHECK(conductor_semistable(p, g) == 2);
}

TEST_CASE("isometry testing") {
  CHECK(lattices_isometric({}, {}));
  CHECK(lattices_isometric({{2}}, {{2}}));
  CHECK_FALSE(lattices_isometric({{2}}, {{3}}));
  CHECK_FALSE(lattices_isometric({{2}}, {{2, 0}, {0, 1}}));
  // same determinant, different minimum
  CHECK_FALSE(lattices_isometric({{1, 0}, {0, 4}}, {{2, 0}, {0, 2}}));
  // two bases of the theta lattice with edge lengths 1, 2, 3
  CHECK(lattices_isometric({{3, 1}, {1, 4}}, {{3, 2}, {2, 5}}));
  // change of basis by a unimodular matrix
  MatZ g1 = {{2, 1}, {1, 6}};
  MatZ t = {{1, 3}, {1, 4}};
  CHECK(lattices_isometric(g1, mul(mul(transpose(t), g1), t)));
}

TEST_CASE("tame conductor") {
  {
    auto p = example7_picture();
    auto tc = conductor_tame_general(p, GaloisData::trivial(7));
    CHECK(tc.invariant_dim == 5);
    CHECK(tc.tame_part == 1);
  }
  {
    // good reduction: five roots, no proper subclusters
    auto p = make_picture(5, 0, {{{0, 1, 2, 3, 4}, 0}});
    auto tc = conductor_tame_general(p, GaloisData::trivial(5));
    CHECK(tc.invariant_dim == 4);
    CHECK(tc.tame_part == 0);
  }
  // semistable inputs: the tame formula reproduces the toric rank
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 5}}) {
    auto p = twins_picture(n, m);
    auto g = annotate(p, 1);
    auto tc = conductor_tame_general(p, g);
    CHECK(tc.tame_part == conductor_semistable(p, g));
  }
  for (auto [n, m, k] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 1, 2}}) {
    auto p = theta_picture(n, m, k);
    auto g = annotate(p, 1);
    CHECK(conductor_tame_general(p, g).tame_part == conductor_semistable(p, g));
  }
}

TEST_CASE("wild conductor from field data") {
  CHECK(conductor_wild({}) == 0);
  CHECK(conductor_wild({{0, 3, 3}}) == 0);           // unramified orbit
  CHECK(conductor_wild({{2, 3, 1}}) == 0);           // tame totally ramified
  CHECK(conductor_wild({{3, 3, 1}}) == 1);
  CHECK(conductor_wild({{0, 1, 1}, {4, 3, 1}, {3, 3, 1}}) == 3);
  CHECK_THROWS_AS(conductor_wild({{0, 3, 1}}), std::invalid_argument);
}

TEST_CASE("deficiency") {
  // two conjugate odd halves: deficient exactly when the relative depth is odd
  for (int d : {1, 2, 3}) {
    auto p = make_picture(6, d % 2, {{{0, 1, 2, 3, 4, 5}, 0},
                                     {{0, 1, 2}, d},
                                     {{3, 4, 5}, d}});
    GaloisData swap = GaloisData::trivial(6);
    swap.frobenius = {3, 4, 5, 0, 1, 2};
    REQUIRE(check_semistability(p, swap).semistable);
    CHECK(deficiency(p, swap) == (d % 2 == 1));
    CHECK_FALSE(deficiency(p, GaloisData::trivial(6)));
  }
  // ubereven top with negative sign: all three twins must have half-integer
  // depth (or be moved by frobenius) for the curve to be deficient
  for (auto [n, m, k] : std::vector<std::array<int, 3>>{
           {1, 1, 1}, {3, 1, 5}, {2, 1, 1}, {1, 2, 3}, {2, 2, 2}}) {
    auto p = theta_picture(n, m, k);
    CHECK(deficiency(p, annotate(p, -1)) == (n % 2 && m % 2 && k % 2));
    CHECK_FALSE(deficiency(p, annotate(p, 1)));
  }
  {
    // cotwin top: the condition runs over the twins inside the big child and
    // over the top itself, whose loop has odd length exactly when its depth
    // is not an integer
    auto mk = [](Q dn, Q dm, Q dr, Z lead) {
      return make_picture(6, lead, {{{0, 1, 2, 3, 4, 5}, dr},
                                    {{0, 1, 2, 3}, 1},
                                    {{0, 1}, 1 + dn},
                                    {{2, 3}, 1 + dm}});
    };
    auto p1 = mk(Q(1, 2), Q(3, 2), Q(1, 2), 1);
    REQUIRE(check_semistability(p1, annotate(p1, -1)).semistable);
    CHECK(deficiency(p1, annotate(p1, -1)));
    CHECK_FALSE(deficiency(p1, annotate(p1, 1)));
    // integral top depth: the top loop has even length
    auto p2 = mk(Q(1, 2), Q(3, 2), 0, 0);
    CHECK_FALSE(deficiency(p2, annotate(p2, -1)));
    // one twin of integral depth fixed by frobenius
    auto p3 = mk(Q(1, 2), Q(1), Q(1, 2), 1);
    CHECK_FALSE(deficiency(p3, annotate(p3, -1)));
  }
  {
    // odd genus is never deficient
    auto p = make_picture(8, 0, {{{0, 1, 2, 3, 4, 5, 6, 7}, 0}, {{0, 1}, Q(1, 2)}});
    CHECK(p.genus() == 3);
    CHECK_FALSE(deficiency(p, annotate(p, -1)));
  }
}

TEST_CASE("tamagawa count is basis independent") {
  HomologyLattice hl;
  hl.rank = 2;
  hl.gram = {{5, 0}, {0, 5}};
  hl.frob = {{0, 1}, {1, 0}};
  Z c = tamagawa(hl);
  CHECK(c == 5);
  MatZ t = {{2, 1}, {1, 1}};
  HomologyLattice hc;
  hc.rank = 2;
  hc.gram = mul(mul(transpose(t), hl.gram), t);
  hc.frob = mul(mul(inv_unimodular(t), hl.frob), t);
  CHECK(tamagawa(hc) == c);
  CHECK(root_number(hc) == root_number(hl));
}

TEST_CASE("rank zero lattice") {
  auto p = make_picture(5, 0, {{{0, 1, 2, 3, 4}, 0}});
  auto g = GaloisData::trivial(5);
  auto hl = homology_lattice(p, g);
  CHECK(hl.rank == 0);
  CHECK(conductor_semistable(p, g) == 0);
  CHECK(tamagawa(hl) == 1);
  CHECK(root_number(hl) == 1);
  CHECK_FALSE(deficiency(p, g));
}
