#include <catch2/catch_amalgamated.hpp>

#include "qlay/verify.hpp"

using namespace qlay;

TEST_CASE("claim runners pass on reduced parameters") {
  CHECK(verify_lemma_rainbow(5).pass());
  CHECK(verify_thm2_bound(20, 40).pass());
  CHECK(verify_props(20, 40).pass());
  CHECK(verify_pw_selfdual(3).pass());
  CHECK(verify_hp_square(20, 40).pass());
}

TEST_CASE("claim reports carry one check per instance") {
  ClaimReport lemma = verify_lemma_rainbow(6);
  REQUIRE(lemma.checks.size() == 6);
  CHECK(lemma.checks[5].detail.find("21") != std::string::npos);

  ClaimReport bounds = verify_thm2_bound(12, 10);
  CHECK(bounds.checks.size() == 10);

  // props adds the fixture check on top of the corpus
  ClaimReport props = verify_props(12, 10);
  CHECK(props.checks.size() == 11);
  CHECK(props.checks.back().name == "abaab-fixture");
}

TEST_CASE("corpus instances are deterministic and sized as documented") {
  GeneratedFamily a = corpus_instance(7, 40);
  GeneratedFamily b = corpus_instance(7, 40);
  CHECK(a.realizers.l2 == b.realizers.l2);
  CHECK(corpus_instance(1, 40).n == 2);
  CHECK(corpus_instance(40, 40).n == 2 + 39 % 39);
  for (int s = 1; s <= 80; s++) {
    int n = corpus_instance(s, 40).n;
    CHECK(n >= 2);
    CHECK(n <= 40);
  }
}
