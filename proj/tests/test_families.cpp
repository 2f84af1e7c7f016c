#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qlay/families.hpp"
#include "qlay/layout.hpp"

using namespace qlay;

TEST_CASE("concat") {
  CHECK(concat({"1", "2"}, {"3"}) == std::vector<std::string>{"1", "2", "3"});
  CHECK(concat({}, {"x"}) == std::vector<std::string>{"x"});
  CHECK(concat({"3", "4"}, {"1", "6", "2", "5"}) ==
        std::vector<std::string>{"3", "4", "1", "6", "2", "5"});
  CHECK_THROWS_MATCHES(concat({"1", "2"}, {"2"}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::DuplicateElement;
                       }));
}

TEST_CASE("interleave") {
  CHECK(interleave({"x1"}, {"y1"}) == std::vector<std::string>{"x1", "y1"});
  CHECK(interleave({"x1", "x2"}, {"y1", "y2"}) ==
        std::vector<std::string>{"x1", "y1", "x2", "y2"});
  CHECK_THROWS_MATCHES(interleave({"x1"}, {"y1", "y2"}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::Arity;
                       }));
}

TEST_CASE("gen_r unrolls the recursion") {
  GeneratedFamily r1 = gen_r(1);
  CHECK(r1.n == 2);
  CHECK(r1.to_poset().relation_count() == 1);

  GeneratedFamily r2 = gen_r(2);
  CHECK(r2.realizers.l1 == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  CHECK(r2.realizers.l2 == std::vector<std::string>{"3", "4", "1", "6", "2", "5"});

  CHECK(gen_r(3).n == 12);
  CHECK_THROWS_MATCHES(gen_r(0), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::Parameter;
                       }));
}

TEST_CASE("gen_r: size, width and first-realizer rainbow per level") {
  for (int w = 1; w <= 6; w++) {
    GeneratedFamily fam = gen_r(w);
    CAPTURE(w);
    CHECK(fam.n == w * (w + 1));
    Poset p = fam.to_poset();
    CHECK(width(p).width == w);
    int k = rainbow_number(make_layout(p, p.realizers()->first)).k;
    CHECK(k == w * (w + 1) / 2);
  }
}

TEST_CASE("gen_r_bidirectional: both realizer layouts carry the rainbow") {
  GeneratedFamily q1 = gen_r_bidirectional(1);
  CHECK(q1.n == 4);
  {
    Poset p = q1.to_poset();
    CHECK(rainbow_number(make_layout(p, p.realizers()->first)).k == 1);
    CHECK(rainbow_number(make_layout(p, p.realizers()->second)).k == 1);
  }

  GeneratedFamily q2 = gen_r_bidirectional(2);
  CHECK(q2.n == 12);
  {
    Poset p = q2.to_poset();
    CHECK(rainbow_number(make_layout(p, p.realizers()->first)).k == 3);
    CHECK(rainbow_number(make_layout(p, p.realizers()->second)).k == 3);
  }

  for (int w = 3; w <= 5; w++) {
    Poset p = gen_r_bidirectional(w).to_poset();
    CAPTURE(w);
    CHECK(rainbow_number(make_layout(p, p.realizers()->first)).k >= w * (w + 1) / 2);
    CHECK(rainbow_number(make_layout(p, p.realizers()->second)).k >= w * (w + 1) / 2);
  }
}

TEST_CASE("gen_p base case and element counts") {
  GeneratedFamily p2 = gen_p(2);
  CHECK(p2.realizers.l1 == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(p2.realizers.l2 == std::vector<std::string>{"2", "1", "4", "3"});

  CHECK(gen_p(3).n == 38);
  CHECK(gen_p(4).n == 130);
  // |P_w| = 2 |P_{w-1}| + 4w^2 - 4w + 6
  int expected = 4;
  for (int w = 3; w <= 5; w++) {
    expected = 2 * expected + 4 * w * w - 4 * w + 6;
    CHECK(gen_p(w).n == expected);
  }
  CHECK_THROWS_MATCHES(gen_p(1), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::Parameter;
                       }));
}

TEST_CASE("gen_p: width is exactly w") {
  for (int w = 2; w <= 5; w++) {
    CAPTURE(w);
    CHECK(width(gen_p(w).to_poset()).width == w);
  }
}

TEST_CASE("gen_p: block metadata covers every element") {
  GeneratedFamily fam = gen_p(3);
  std::vector<std::string> all;
  for (const auto& [tag, members] : fam.groups) {
    all.insert(all.end(), members.begin(), members.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<std::string> elements = fam.realizers.l1;
  std::sort(elements.begin(), elements.end());
  CHECK(all == elements);
}

TEST_CASE("gen_random_2d: deterministic, valid, extension-consistent") {
  GeneratedFamily one = gen_random_2d(1, 7);
  CHECK(one.to_poset().size() == 1);

  GeneratedFamily a = gen_random_2d(5, 1);
  GeneratedFamily b = gen_random_2d(5, 1);
  CHECK(a.realizers.l1 == b.realizers.l1);
  CHECK(a.realizers.l2 == b.realizers.l2);

  for (int seed = 1; seed <= 100; seed++) {
    GeneratedFamily fam = gen_random_2d(20, seed);
    Poset p = fam.to_poset();
    CAPTURE(seed);
    REQUIRE(oracle::poset_invariants_hold(p));
    CHECK(is_linear_extension(p, p.realizers()->first));
    CHECK(is_linear_extension(p, p.realizers()->second));
  }

  CHECK_THROWS_AS(gen_random_2d(0, 1), Error);
}

TEST_CASE("generators reproduce bit-for-bit") {
  CHECK(gen_r(5).realizers.l2 == gen_r(5).realizers.l2);
  CHECK(gen_p(4).realizers.l1 == gen_p(4).realizers.l1);
  CHECK(gen_p(4).realizers.l2 == gen_p(4).realizers.l2);
  CHECK(gen_r_bidirectional(3).realizers.l2 == gen_r_bidirectional(3).realizers.l2);
}
