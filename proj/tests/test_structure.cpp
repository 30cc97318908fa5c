#include <doctest.h>

#include "generators.hpp"
#include "ucayley/cayley.hpp"
#include "ucayley/indsets.hpp"
#include "ucayley/structure.hpp"

using namespace ucayley;

namespace {

FactorList factors(std::initializer_list<SimpleFactor> f) { return FactorList(f); }

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("semisimple_quotient examples") {
  CHECK(semisimple_quotient(parse_spec("Z(12)")) == factors({{1, 2}, {1, 3}}));
  CHECK(semisimple_quotient(parse_spec("T(3,GF(2))")) == factors({{1, 2}, {1, 2}, {1, 2}}));
  CHECK(semisimple_quotient(parse_spec("M(2,Z(4))")) == factors({{2, 2}}));
  CHECK(semisimple_quotient(parse_spec("M(2,prod(Z(2),GF(4)))")) == factors({{2, 2}, {2, 4}}));
  CHECK(semisimple_quotient(parse_spec("Z(1)")).empty());
  CHECK(is_semisimple(parse_spec("prod(Z(2),M(2,GF(3)))")));
  CHECK_FALSE(is_semisimple(parse_spec("Z(4)")));
}

TEST_CASE("classify_well_covered examples") {
  const Verdict m25 = classify_well_covered(parse_spec("M(2,GF(5))"));
  CHECK(m25.answer == Answer::yes);
  CHECK(m25.clause == "R/J(R) ≅ M_2(F)");
  CHECK(classify_well_covered(parse_spec("M(3,GF(2))")).answer == Answer::no);
  CHECK(classify_well_covered(parse_spec("prod(Z(2),Z(3))")).answer == Answer::no);
  CHECK(classify_well_covered(parse_spec("prod(GF(4),T(2,GF(4)))")).answer == Answer::no);
  CHECK(classify_well_covered(parse_spec("T(2,GF(3))")).clause == "R/J(R) ≅ F × F");
  CHECK(classify_well_covered(parse_spec("T(3,GF(2))")).clause == "R/J(R) ≅ Z_2^k");
  CHECK(classify_well_covered(parse_spec("Z(9)")).clause == "R/J(R) ≅ F");
  CHECK_FALSE(classify_well_covered(parse_spec("prod(Z(2),M(2,GF(2)))")).witness_hint.empty());
}

TEST_CASE("classify_cm examples") {
  const Verdict f7 = classify_cm(parse_spec("GF(7)"));
  CHECK(f7.answer == Answer::yes);
  CHECK(f7.clause == "R is a field");
  const Verdict z22 = classify_cm(parse_spec("prod(Z(2),Z(2))"));
  CHECK(z22.answer == Answer::yes);
  CHECK(z22.clause == "R ≅ Z_2^k");
  CHECK(classify_cm(parse_spec("Z(4)")).answer == Answer::no);
  CHECK(classify_cm(parse_spec("M(2,GF(2))")).answer == Answer::no);
  CHECK(classify_cm(parse_spec("prod(GF(3),GF(3))")).answer == Answer::no);
}

TEST_CASE("classify_gorenstein examples") {
  CHECK(classify_gorenstein(parse_spec("prod(Z(2),Z(2),Z(2))")).answer == Answer::yes);
  CHECK(classify_gorenstein(parse_spec("GF(3)")).answer == Answer::no);
  CHECK(classify_gorenstein(parse_spec("Z(2)")).answer == Answer::yes);
  CHECK(classify_gorenstein(parse_spec("T(2,GF(2))")).answer == Answer::no);
}

TEST_CASE("question names") {
  CHECK(parse_question("wellcovered") == Question::well_covered);
  CHECK(parse_question("cm") == Question::cohen_macaulay);
  CHECK(parse_question("gorenstein") == Question::gorenstein);
  CHECK_THROWS_AS(parse_question("shellable"), std::invalid_argument);
  CHECK(classify(parse_spec("Z(2)"), Question::gorenstein).question == Question::gorenstein);
}

TEST_CASE("verdict implications and the product rule") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const RingSpec s = gen::random_spec(rng, 1 << 16);
    INFO(to_string(s));
    const bool wc = classify_well_covered(s).answer == Answer::yes;
    const bool cm = classify_cm(s).answer == Answer::yes;
    const bool gor = classify_gorenstein(s).answer == Answer::yes;
    CHECK((!cm || wc));
    CHECK((!gor || cm));
    CHECK_FALSE(classify_well_covered(s).clause.empty());
    if (const auto* p = std::get_if<ProductSpec>(&s.node)) {
      FactorList merged;
      for (const auto& f : p->factors) {
        const FactorList part = semisimple_quotient(f);
        merged.insert(merged.end(), part.begin(), part.end());
      }
      std::sort(merged.begin(), merged.end());
      CHECK(semisimple_quotient(s) == merged);
    }
  }
}

TEST_CASE("classification agrees with enumeration on random small rings") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const RingSpec s = gen::random_spec(rng, 64);
    INFO(to_string(s));
    const WellCoveredReport rep = is_well_covered(build_graph(make_ring(s)));
    REQUIRE(rep.fully_enumerated);
    CHECK(rep.answer == classify_well_covered(s).answer);
  }
}

}  // TEST_SUITE
