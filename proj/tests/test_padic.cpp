#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padic.hpp"

using namespace hyc;

TEST_CASE("valuations of quadratic elements") {
  // sqrt(p) has valuation 1/2
  CHECK(val_element(0, 1, 7, 7) == Q(1, 2));
  CHECK(val_element(0, 1, 5, 5) == Q(1, 2));
  // split case: sqrt(2) = 10 mod 49 on the principal branch (10 = 3 mod 7)
  CHECK(val_element(-3, 1, 2, 7) == 1);
  CHECK(val_element(-3, -1, 2, 7) == 0);
  CHECK(val_element(-10, 1, 2, 7) == 2);  // -10 + sqrt(2) = 0 mod 49
  // inert case: v = half the valuation of the norm
  CHECK(val_element(1, 1, 3, 7) == 0);    // norm 1 - 3 = -2
  CHECK(val_element(0, 7, 3, 7) == 1);    // norm -147
  CHECK(val_element(7, 7, 3, 7) == 1);    // norm 49 - 147 = -98
  // rational input ignores d
  CHECK(val_element(Q(49, 3), 0, 0, 7) == 2);
  CHECK_THROWS(val_element(1, 1, 4, 7));  // d a perfect square
  CHECK_THROWS(val_element(1, 1, 12, 7)); // d not squarefree
  CHECK_THROWS(val_element(0, 0, 2, 7));
}

static RootSet example7_roots(const Z& p) {
  // 1, 1+p^2, 1-p^2, p, 0, p^3, -p^3
  Q p2 = Q(p) * Q(p), p3 = p2 * Q(p);
  return {p, 1, {{1, 0, 0}, {1 + p2, 0, 0}, {1 - p2, 0, 0},
                 {Q(p), 0, 0}, {0, 0, 0}, {p3, 0, 0}, {-p3, 0, 0}}};
}

TEST_CASE("clusters of the 7-root example") {
  auto res = ingest(example7_roots(7));
  const auto& p = res.picture;
  CHECK(validate_picture(p).empty());
  CHECK(p.root_count == 7);
  CHECK(p.leading_valuation == 0);
  int s1 = p.find({0, 1, 2});
  int s2 = p.find({3, 4, 5, 6});
  int s3 = p.find({4, 5, 6});
  REQUIRE(s1 >= 0);
  REQUIRE(s2 >= 0);
  REQUIRE(s3 >= 0);
  CHECK(p.depth(s1) == 2);
  CHECK(p.depth(s2) == 1);
  CHECK(p.depth(s3) == 3);
  CHECK(p.depth(p.top) == 0);
  CHECK(proper_clusters(p).size() == 4);

  // trivial Galois action, known signs on the even cluster
  for (int i = 0; i < 7; ++i) {
    CHECK(res.galois.frobenius[i] == i);
    CHECK(res.galois.inertia[i] == i);
  }
  // epsilon on s2 equals the Legendre symbol of -1
  CHECK(epsilon_of(res.galois, s2) == legendre(-1, 7));
  auto res13 = ingest(example7_roots(13));
  int t2 = res13.picture.find({3, 4, 5, 6});
  CHECK(epsilon_of(res13.galois, t2) == legendre(-1, 13));

  // centres are valid: v(z - r) >= d_s for every member
  for (int s : proper_clusters(p))
    for (int r : p.clusters[s].members) {
      QuadElt diff = sub(res.centres[s], res.root_values[r]);
      if (diff.a == 0 && diff.b == 0) continue;  // centre is this root
      CHECK(val_quad(diff, 7) >= p.depth(s));
    }
}

TEST_CASE("distances are ultrametric") {
  auto res = ingest(example7_roots(7));
  int n = res.picture.root_count;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        Q a = res.distances[i][j], b = res.distances[j][k], c = res.distances[i][k];
        CHECK(c >= std::min(a, b));
      }
}

TEST_CASE("three twins at depth one") {
  RootSet rs{7, 1, {{0, 0, 0}, {7, 0, 0}, {1, 0, 0}, {8, 0, 0}, {2, 0, 0}, {9, 0, 0}}};
  auto res = ingest(rs);
  const auto& p = res.picture;
  int t1 = p.find({0, 1}), t2 = p.find({2, 3}), t3 = p.find({4, 5});
  REQUIRE(t1 >= 0);
  REQUIRE(t2 >= 0);
  REQUIRE(t3 >= 0);
  CHECK(p.depth(t1) == 1);
  CHECK(p.depth(t2) == 1);
  CHECK(p.depth(t3) == 1);
  CHECK(p.depth(p.top) == 0);
  CHECK(classify_cluster(p, p.top).ubereven);
  // c_f = 1 and star of each twin is the top, so every sign is +1
  CHECK(epsilon_of(res.galois, t1) == 1);
  CHECK(epsilon_of(res.galois, t2) == 1);
  CHECK(epsilon_of(res.galois, t3) == 1);
  CHECK(epsilon_of(res.galois, p.top) == 1);
}

TEST_CASE("twin sign from the product over outside roots") {
  // twin {0, p} with outside roots 1, 2, 3: theta^2 = (0-1)(0-2)(0-3) = -6
  for (Z p : {Z(7), Z(13)}) {
    RootSet rs{p, 1, {{0, 0, 0}, {Q(p), 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}};
    auto res = ingest(rs);
    int tw = res.picture.find({0, 1});
    REQUIRE(tw >= 0);
    CHECK(res.picture.depth(tw) == 1);
    CHECK(epsilon_of(res.galois, tw) == legendre(-6, p));
  }
  CHECK(legendre(-6, 7) != legendre(-6, 13));  // the two cases differ
}

TEST_CASE("ramified pair: inertia swaps a half-integer twin") {
  // roots sqrt(7), -sqrt(7), 1, 2, 3
  RootSet rs{7, 1, {{0, 1, 7}, {0, -1, 7}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}};
  auto res = ingest(rs);
  const auto& p = res.picture;
  int tw = p.find({0, 1});
  REQUIRE(tw >= 0);
  CHECK(p.depth(tw) == Q(1, 2));
  CHECK(res.galois.inertia[0] == 1);
  CHECK(res.galois.inertia[1] == 0);
  CHECK(res.galois.frobenius[0] == 0);
  // the swapped roots differ by a non-integral valuation
  CHECK(!is_integer(res.distances[0][1]));
  // centre of the twin is the rational midpoint 0
  CHECK(res.centres[tw].a == 0);
  CHECK(res.centres[tw].b == 0);
  CHECK(epsilon_of(res.galois, tw) == legendre(-6, 7));
}

TEST_CASE("frobenius-swapped twins carry a product sign") {
  // p = 5, d = 2 is inert; twins {sqrt2, sqrt2+5} and {-sqrt2, -sqrt2+5}
  RootSet rs{5, 1, {{0, 1, 2}, {5, 1, 2}, {0, -1, 2}, {5, -1, 2}, {1, 0, 0}, {2, 0, 0}}};
  auto res = ingest(rs);
  const auto& p = res.picture;
  int t1 = p.find({0, 1}), t2 = p.find({2, 3});
  REQUIRE(t1 >= 0);
  REQUIRE(t2 >= 0);
  CHECK(p.depth(t1) == 1);
  CHECK(p.depth(t2) == 1);
  CHECK(res.galois.frobenius[0] == 2);
  CHECK(res.galois.frobenius[1] == 3);
  CHECK(res.galois.inertia[0] == 0);
  CHECK(cluster_image(p, res.galois.frobenius, t1) == t2);
  // product of the two signs: norm of (2 sqrt2)(2 sqrt2 - 5)(sqrt2 - 1)(sqrt2 - 2)
  // = (-8)(17)(-1)(2) = 272 = 2 mod 5, a non-residue
  int e1 = epsilon_of(res.galois, t1), e2 = epsilon_of(res.galois, t2);
  REQUIRE(e1 != 0);
  REQUIRE(e2 != 0);
  CHECK(e1 * e2 == -1);
  // centres are conjugate across the orbit
  CHECK(res.centres[t1].a == res.centres[t2].a);
  CHECK(res.centres[t1].b == -res.centres[t2].b);
}

TEST_CASE("root set validation") {
  RootSet ok{7, 1, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}}};
  CHECK_NOTHROW(validate_rootset(ok));
  auto bad = ok;
  bad.p = 6;
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.p = 9;
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.leading_coefficient = 0;
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.roots[1] = {0, 0, 0};  // duplicate
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.roots[1] = {0, 1, 3};  // surd without its conjugate
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.roots[1] = {0, 1, 3};
  bad.roots[2] = {0, -1, 3};
  CHECK_NOTHROW(validate_rootset(bad));
  bad.roots[3] = {1, 1, 5};  // second base d
  bad.roots[4] = {1, -1, 5};
  CHECK_THROWS(validate_rootset(bad));
  bad = ok;
  bad.roots[1] = {0, 1, 8};  // non-squarefree base
  bad.roots[2] = {0, -1, 8};
  CHECK_THROWS(validate_rootset(bad));
}
