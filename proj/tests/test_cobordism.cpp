#include "doctest.h"

#include "bottbord/cobordism.hpp"

using namespace bottbord;

TEST_CASE("verdict for the real projective plane")
{
    auto V = verdict(parse_matrix({2}, CoeffMode::Mod2, {{1, 1}}));
    CHECK(!V.sw_all_zero);
    CHECK(!V.unoriented_boundary);
    CHECK(V.pontryagin_all_zero == TriState::NotApplicable);
    CHECK(V.oriented_obstruction == Obstruction::SW);
}

TEST_CASE("verdict for the smallest nonzero-Pontryagin quasitoric manifold")
{
    auto V = verdict(parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}}));
    CHECK(V.sw_all_zero);
    CHECK(V.unoriented_boundary);
    CHECK(V.pontryagin_all_zero == TriState::False);
    CHECK(V.oriented_obstruction == Obstruction::Pontryagin);
    REQUIRE(V.pontryagin);
    CHECK(abs(V.pontryagin->values.at(0).value) == 6);
}

TEST_CASE("small covers over the 3-cube all bound")
{
    auto V = verdict(parse_matrix({1, 1, 1}, CoeffMode::Mod2,
                                  {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(V.sw_all_zero);
    CHECK(V.unoriented_boundary);
    CHECK(V.oriented_obstruction == Obstruction::None);
}

TEST_CASE("verdict is invariant under factor permutation")
{
    auto A = parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}});
    auto B = permute_factors(A, {1, 0});
    auto VA = verdict(A), VB = verdict(B);
    CHECK(VA.sw_all_zero == VB.sw_all_zero);
    CHECK(VA.pontryagin_all_zero == VB.pontryagin_all_zero);
    CHECK(VA.oriented_obstruction == VB.oriented_obstruction);
    CHECK(abs(VA.pontryagin->values.at(0).value) ==
          abs(VB.pontryagin->values.at(0).value));
}

TEST_CASE("both SW routes agree on integer matrices")
{
    CHECK(lemma41_crosscheck(parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}})));
    CHECK(lemma41_crosscheck(parse_matrix({1, 1}, CoeffMode::Integer, {{1, 0}, {0, 1}})));
    CHECK(lemma41_crosscheck(parse_matrix({2, 1}, CoeffMode::Integer,
                                          {{1, 1, -1}, {0, 0, 1}})));
}

TEST_CASE("known theorem ids")
{
    auto& ids = known_theorems();
    CHECK(ids.size() == 12);
    CHECK_THROWS_AS(verify("thm_9_9"), Error);
}

TEST_CASE("single-instance checkers")
{
    auto R = verify("example_3_7");
    CHECK(R.instances == 1);
    CHECK(R.pass());
    REQUIRE(!R.details.empty());
    CHECK(R.details[0].first == "w3_squared");
    CHECK(R.details[0].second == "1");
}

TEST_CASE("cyclic checker reports the smallest p-number")
{
    VerifyParams p;
    p.b = {2, 1};
    auto R = verify("thm_4_5", p);
    CHECK(R.pass());
    CHECK(R.instances == 1);
    REQUIRE(!R.details.empty());
    CHECK(R.details[0] == std::pair<std::string, std::string>{"p1_abs", "6"});
}

TEST_CASE("exhaustive checkers on small families")
{
    CHECK(verify("thm_2_5", {.n = 3}).instances == 8);
    CHECK(verify("thm_2_5", {.n = 3}).pass());
    CHECK(verify("thm_3_4", {.dims = {1, 1}}).pass());
    CHECK(verify("thm_4_3", {.dims = {1, 1}}).pass());
    CHECK(verify("prop_3_5", {.n = 3}).pass());
}

TEST_CASE("sampled checkers are deterministic in the seed")
{
    VerifyParams p;
    p.samples = 20;
    p.seed = 7;
    auto a = verify("lemma_3_3", p);
    auto b = verify("lemma_3_3", p);
    CHECK(a.pass());
    CHECK(a.instances == b.instances);
    CHECK(verify("lemma_2_4", p).pass());
    CHECK(verify("lemma_4_1", p).pass());
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(verify("thm_3_4", {.dims = {1, 2}}), Error);  // last factor not an interval
    CHECK_THROWS_AS(verify("thm_3_6", {.dims = {2, 2}}), Error);  // l+1 not a power of two
    CHECK_THROWS_AS(verify("thm_4_7", {.dims = {2, 1}}), Error);  // odd total dimension
    CHECK_THROWS_AS(verify("example_4_6", {.dims = {2, 3}}), Error); // even block order
}
