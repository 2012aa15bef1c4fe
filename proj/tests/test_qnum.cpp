#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matz.hpp"
#include "qnum.hpp"

using namespace hyc;

TEST_CASE("rational valuations") {
  CHECK(val_rational(Q(343), 7) == 3);
  CHECK(val_rational(Q(1) - Q(2401), 7) == 0);
  CHECK(val_rational(Q(50, 9), 5) == 2);
  CHECK(val_rational(Q(50, 9), 3) == -2);
  CHECK_THROWS(val_rational(Q(0), 5));
}

TEST_CASE("floor and parity helpers") {
  CHECK(qfloor(Q(7, 2)) == 3);
  CHECK(qfloor(Q(-7, 2)) == -4);
  CHECK(qceil(Q(-7, 2)) == -3);
  CHECK(is_integer(Q(4, 2)));
  CHECK(is_half_integer(Q(3, 2)));
  CHECK(!is_half_integer(Q(1, 3)));
  CHECK(is_even_integer(Q(6)));
  CHECK(!is_even_integer(Q(3)));
  CHECK(ord2_denominator(Q(3, 8)) == 3);
  CHECK(ord2_denominator(Q(0)) == 0);
  CHECK(ord2_denominator(Q(5, 6)) == 1);
}

TEST_CASE("legendre symbols against small tables") {
  // squares mod 7: 1,2,4
  for (int a : {1, 2, 4}) CHECK(legendre(a, 7) == 1);
  for (int a : {3, 5, 6}) CHECK(legendre(a, 7) == -1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(-1, 13) == 1);
  CHECK(legendre(-6, 7) == 1);  // -6 = 1 mod 7
  CHECK(legendre(0, 7) == 0);
}

TEST_CASE("modular square roots and lifting") {
  for (Z p : {Z(7), Z(11), Z(13), Z(17)}) {
    for (Z a = 1; a < p; ++a) {
      auto r = sqrt_mod_p(a, p);
      if (legendre(a, p) == 1) {
        REQUIRE(r.has_value());
        CHECK((*r * *r) % p == a);
      } else {
        CHECK(!r.has_value());
      }
    }
  }
  // lift sqrt(2) mod 7^4
  Z r0 = *sqrt_mod_p(2, 7);
  Z r = lift_sqrt(2, 7, 4, r0);
  Z m = Z(7 * 7 * 7 * 7);
  CHECK((r * r) % m == 2);
  CHECK(r % 7 == r0);
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-5") == Q(-5));
  CHECK(show_rational(Q(-3, 2)) == "-3/2");
  CHECK(show_rational(Q(4)) == "4");
}

TEST_CASE("determinant and rank") {
  MatZ a = {{2, 0}, {0, 3}};
  CHECK(det(a) == 6);
  MatZ b = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(det(b) == 0);
  CHECK(rank_q(to_q(b)) == 2);
  MatZ c = {{0, 1}, {1, 0}};
  CHECK(det(c) == -1);
}

TEST_CASE("smith normal form with transforms") {
  auto check_snf = [](MatZ a) {
    auto s = smith_normal_form(a);
    auto lhs = mul(mul(s.u, a), s.v);
    REQUIRE(lhs == s.d);
    int n = (int)a.size();
    Z du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Q prev = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);
    for (int i = 0; i + 1 < n; ++i)
      if (s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0)
        CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
  };
  check_snf({{2, 0}, {0, 2}});
  check_snf({{2, 1}, {1, 3}});
  check_snf({{6, 4}, {2, 8}});
  check_snf({{3, 1, 2}, {1, 5, 0}, {2, 0, 7}});
  check_snf({{0, 0}, {0, 0}});
  check_snf({{4, 2, 6}, {2, 8, 10}, {6, 10, 29}});
}
