#include "doctest.h"

#include "bottbord/poly.hpp"

using namespace bottbord;

namespace {
Monomial mo(std::vector<int> e) { return Monomial{std::move(e)}; }
} // namespace

TEST_CASE("graded-lex order with u_1 < ... < u_m")
{
    GrlexLess less;
    CHECK(less(mo({1, 0}), mo({0, 2})));  // degree first
    CHECK(less(mo({2, 0}), mo({1, 1})));  // then highest variable
    CHECK(less(mo({1, 1}), mo({0, 2})));
    CHECK(!less(mo({0, 2}), mo({0, 2})));
}

TEST_CASE("Frobenius cube over GF(2)")
{
    auto u1 = Polynomial<Gf2>::var(2, 1), u2 = Polynomial<Gf2>::var(2, 2);
    auto p = (u1 + u2).pow(3);
    auto want = u1.pow(3) + u1.pow(2) * u2 + u1 * u2.pow(2) + u2.pow(3);
    CHECK(p == want);
}

TEST_CASE("difference of squares over Z")
{
    auto one = Polynomial<Rational>::constant(1, 1);
    auto u = Polynomial<Rational>::var(1, 1);
    CHECK((one - u) * (one + u) == one - u * u);
}

TEST_CASE("zero coefficients never stored")
{
    auto u = Polynomial<Rational>::var(1, 1);
    auto p = u - u;
    CHECK(p.is_zero_poly());
    CHECK(p.degree() == -1);
    CHECK((Rational(0) * u).is_zero_poly());
}

TEST_CASE("homogeneous parts and degrees")
{
    auto u1 = Polynomial<Rational>::var(2, 1), u2 = Polynomial<Rational>::var(2, 2);
    auto p = (Polynomial<Rational>::constant(2, 1) + u1) * (Polynomial<Rational>::constant(2, 1) + u2);
    CHECK(p.homogeneous_part(0) == Polynomial<Rational>::constant(2, 1));
    CHECK(p.homogeneous_part(1) == u1 + u2);
    CHECK(p.homogeneous_part(2) == u1 * u2);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous(2) == false);
    CHECK((u1 * u2).is_homogeneous(2));
}

TEST_CASE("relabel permutes variables")
{
    auto u1 = Polynomial<Rational>::var(2, 1), u2 = Polynomial<Rational>::var(2, 2);
    auto p = u1.pow(2) + Rational(3) * u2;
    auto q = p.relabel({1, 0}); // u_1 <-> u_2
    CHECK(q == u2.pow(2) + Rational(3) * u1);
}

TEST_CASE("elementary symmetric polynomials")
{
    auto x = Polynomial<Rational>::var(2, 1), y = Polynomial<Rational>::var(2, 2);
    auto e = elementary_symmetric<Rational>({x, y}, 2);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Polynomial<Rational>::constant(2, 1));
    CHECK(e[1] == x + y);
    CHECK(e[2] == x * y);
}

TEST_CASE("coeff lookup")
{
    auto u1 = Polynomial<Rational>::var(2, 1);
    auto p = Rational(5) * u1.pow(2);
    CHECK(p.coeff(mo({2, 0})) == 5);
    CHECK(p.coeff(mo({0, 2})) == 0);
}
