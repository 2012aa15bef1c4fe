#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parse.hpp"

using namespace hyc;

TEST_CASE("parse the 7-root example") {
  auto [p, g] = parse_picture("[[r r r]_2 [r [r r r]_2]_1]_0");
  CHECK(validate_picture(p).empty());
  CHECK(p.root_count == 7);
  CHECK(p.depth(p.top) == 0);
  int s1 = p.find({0, 1, 2});
  REQUIRE(s1 >= 0);
  CHECK(p.depth(s1) == 2);
  int s2 = p.find({3, 4, 5, 6});
  REQUIRE(s2 >= 0);
  CHECK(p.depth(s2) == 1);
  int s3 = p.find({4, 5, 6});
  REQUIRE(s3 >= 0);
  CHECK(p.depth(s3) == 3);
}

TEST_CASE("minimal picture and signs") {
  auto [p, g] = parse_picture("[r r r r r]_0");
  CHECK(p.genus() == 2);
  CHECK(proper_clusters(p).size() == 1);

  auto [q, gq] = parse_picture("[[r r]_1^+ [r r]_1^+ r r]_0");
  int t1 = q.find({0, 1}), t2 = q.find({2, 3});
  CHECK(epsilon_of(gq, t1) == 1);
  CHECK(epsilon_of(gq, t2) == 1);
  CHECK(epsilon_of(gq, q.top) == 0);
}

TEST_CASE("round trips") {
  for (const char* text : {
           "[[r r r]_2 [r [r r r]_2]_1]_0",
           "[r r r r r]_0",
           "[[r r]_1^+ [r r]_1^+ r r]_0",
           "[[r r]_1/2 r r r]_-3",
           "[[r r r]_1 [r r r]_1]_2^-",
       }) {
    auto [p, g] = parse_picture(text);
    std::string canon = serialize_picture(p, &g);
    auto [p2, g2] = parse_picture(canon);
    CHECK(serialize_picture(p2, &g2) == canon);
    CHECK(p2.root_count == p.root_count);
    CHECK(p2.clusters.size() == p.clusters.size());
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_picture("[r r"), ParseError);
  CHECK_THROWS_AS(parse_picture("[r r]_"), ParseError);
  CHECK_THROWS_AS(parse_picture("[[r r]_0 r r r]_0"), ParseError);   // zero relative depth
  CHECK_THROWS_AS(parse_picture("[[r r]_-1 r r r]_0"), ParseError);  // negative relative depth
  CHECK_THROWS_AS(parse_picture("[[r r r]_1^+ r r]_0"), ParseError); // sign on odd cluster
  CHECK_THROWS_AS(parse_picture("[r r r r r]_0 junk"), ParseError);
}

TEST_CASE("trailing whitespace is tolerated") {
  CHECK_NOTHROW(parse_picture("[r r r r r]_0\n"));
}
