#include "doctest.h"

#include <functional>

#include "bottbord/charmatrix.hpp"

using namespace bottbord;

namespace {

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    FAIL("expected an Error");
    return Errc::UsageError;
}

} // namespace

TEST_CASE("parse enforces shape, diagonal and mod-two range")
{
    CHECK(code_of([] { parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 0}}); }) ==
          Errc::ShapeMismatch);
    CHECK(code_of([] { parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 0, 0}, {0, 1}}); }) ==
          Errc::ShapeMismatch);
    CHECK(code_of([] { parse_matrix({1, 1}, CoeffMode::Mod2, {{0, 0}, {0, 1}}); }) ==
          Errc::DiagonalNotOne);
    CHECK(code_of([] { parse_matrix({1, 1}, CoeffMode::Integer, {{-1, 0}, {0, 1}}); }) ==
          Errc::DiagonalNotOne);
    CHECK(code_of([] { parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 2}, {0, 1}}); }) ==
          Errc::EntryOutOfRange);
}

TEST_CASE("entry accessor follows the block layout")
{
    auto A = parse_matrix({3, 3}, CoeffMode::Mod2,
                          {{1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}});
    CHECK(A.entry(1, 2, 3) == 1); // a^2_{13}
    CHECK(A.entry(2, 1, 2) == 0); // a^1_{22}
}

TEST_CASE("characteristic condition at every vertex")
{
    auto good = parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}});
    CHECK(validate_characteristic(good).valid);

    auto bad = parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {2, 1}});
    auto rep = validate_characteristic(bad);
    CHECK(!rep.valid);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].vertex.choices == std::vector<int>{1, 1});
    CHECK(rep.failures[0].det == -3);
}

TEST_CASE("validity is a factor-permutation invariant")
{
    auto A = parse_matrix({2, 1}, CoeffMode::Mod2, {{1, 1, 1}, {1, 0, 1}});
    auto B = permute_factors(A, {1, 0});
    CHECK(B.polytope().dims() == std::vector<int>{1, 2});
    CHECK(validate_characteristic(A).valid == validate_characteristic(B).valid);
}

TEST_CASE("principal minors")
{
    CHECK(!principal_minors_all_one(
        parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}}))); // det -1
    CHECK(principal_minors_all_one(
        parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {0, 1}})));
    CHECK(principal_minors_all_one(parse_matrix(
        {3, 3}, CoeffMode::Mod2, {{1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}})));
}

TEST_CASE("triangularization by factor permutation")
{
    auto tri = parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 1}, {0, 1}});
    auto t = try_triangularize(tri);
    REQUIRE(t);
    CHECK(t->perm == std::vector<int>{0, 1});
    CHECK(t->matrix == tri);

    // needs a swap: the nonzero off-diagonal entry sits below the diagonal
    auto swap = parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 0}, {1, 1}});
    auto s = try_triangularize(swap);
    REQUIRE(s);
    CHECK(s->perm == std::vector<int>{1, 0});
    CHECK(s->matrix.rows() == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});

    CHECK(!try_triangularize(parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}})));
    CHECK(code_of([] {
              triangularize(parse_matrix({1, 1}, CoeffMode::Integer, {{1, 2}, {1, 1}}));
          }) == Errc::NotTriangularizable);
}

TEST_CASE("every valid mod-two vector matrix triangularizes")
{
    // dims [2,1]: sweep all 8 off-diagonal fillings, keep the valid ones
    for (int bits = 0; bits < 8; ++bits) {
        std::vector<std::vector<long long>> rows = {{1, 1, bits & 1},
                                                    {(bits >> 1) & 1, (bits >> 2) & 1, 1}};
        auto A = parse_matrix({2, 1}, CoeffMode::Mod2, rows);
        if (validate_characteristic(A).valid)
            CHECK(try_triangularize(A).has_value());
    }
}

TEST_CASE("triangularization with a prescribed last factor")
{
    auto swap = parse_matrix({1, 1}, CoeffMode::Mod2, {{1, 0}, {1, 1}});
    REQUIRE(try_triangularize_factor_last(swap, 0));
    CHECK(try_triangularize_factor_last(swap, 0)->perm == std::vector<int>{1, 0});
    CHECK(!try_triangularize_factor_last(swap, 1));
    CHECK(try_triangularize_interval_last(swap));

    // triangular only in the order (2,3,1): no order puts the interval last
    auto C = parse_matrix({2, 2, 1}, CoeffMode::Mod2,
                          {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {1, 0, 0, 0, 1}});
    auto t = try_triangularize(C);
    REQUIRE(t);
    CHECK(t->perm == std::vector<int>{1, 2, 0});
    CHECK(!try_triangularize_interval_last(C));

    // zeroing the interval's feedback into the first block restores it
    auto D = parse_matrix({2, 2, 1}, CoeffMode::Mod2,
                          {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 0, 1}});
    auto d = try_triangularize_interval_last(D);
    REQUIRE(d);
    CHECK(d->perm.back() == 2);

    CHECK(code_of([&] { try_triangularize_factor_last(swap, 2); }) == Errc::BadParams);
}

TEST_CASE("orientability test on cubes")
{
    auto id3 = parse_matrix({1, 1, 1}, CoeffMode::Mod2,
                            {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(orientability_column_test(id3));

    auto ex = parse_matrix({1, 1, 1}, CoeffMode::Mod2,
                           {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(!orientability_column_test(ex)); // w_1 = u_1

    CHECK(code_of([] {
              orientability_column_test(parse_matrix({2}, CoeffMode::Mod2, {{1, 1}}));
          }) == Errc::NotACube);
    CHECK(code_of([&] {
              orientability_column_test(
                  parse_matrix({1, 1}, CoeffMode::Integer, {{1, 0}, {0, 1}}));
          }) == Errc::ModeMismatch);
}

TEST_CASE("mod-two reduction")
{
    auto A = parse_matrix({1, 1}, CoeffMode::Integer, {{1, -1}, {0, 1}});
    auto R = mod2_reduce(A);
    CHECK(R.mode() == CoeffMode::Mod2);
    CHECK(R.rows() == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
}

TEST_CASE("integer determinant")
{
    CHECK(det_ll({{1, 2}, {1, 1}}) == -1);
    CHECK(det_ll({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
    CHECK(det_ll({{0, 1}, {1, 0}}) == -1);
    CHECK(det_ll({{1, 1}, {1, 1}}) == 0);
}

TEST_CASE("cyclic matrices have determinant 1 + (-1)^{n+1} prod b")
{
    // order 4, b = (1,1,1,2): det should be 1 - 2 = -1
    auto A = parse_matrix({1, 1, 1, 1}, CoeffMode::Integer,
                          {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {2, 0, 0, 1}});
    std::vector<std::vector<long long>> M(4, std::vector<long long>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            M[i][j] = A.rows()[i][j];
    CHECK(det_ll(M) == -1);
    CHECK(validate_characteristic(A).valid);
    CHECK(!try_triangularize(A));
}
