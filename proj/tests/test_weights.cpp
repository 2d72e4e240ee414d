#include <doctest.h>

#include "helpers.hpp"

using namespace residua;
using residua::testing::P;

TEST_SUITE("weight-order") {

TEST_CASE("weighted degree") {
    auto f = testing::reference_file();
    const WeightVector& w = *f.weight;
    CHECK(weighted_degree(P(f.system.vars, "x1^5"), w) == 15);
    CHECK(weighted_degree(P(f.system.vars, "1"), w) == 0);
    CHECK(weighted_degree(f.system.generators[2], w) == 21);
    CHECK_THROWS_AS(weighted_degree(Polynomial(f.system.vars), w), PreconditionError);
}

TEST_CASE("initial forms") {
    auto f = testing::reference_file();
    const WeightVector& w = *f.weight;
    const auto& v = f.system.vars;
    CHECK(initial_form(f.system.generators[0], w) == P(v, "x1^5"));
    CHECK(initial_form(P(v, "x1^2 + x2^2 + x3 - 1"), w) == P(v, "x2^2"));
    Polynomial homog = P(v, "x1^4*x2^3 + x2^6");
    CHECK(initial_form(homog, w) == homog); // already w-homogeneous (degree 24)
}

TEST_CASE("verify_basis on the reference system") {
    auto f = testing::reference_file();
    BasisProfile p = verify_basis(f.system, *f.weight);
    CHECK(p.r == ExponentVec{4, 1, 2});
    CHECK(p.degrees == std::vector<long long>{15, 8, 21});
    CHECK(p.weighted_sum == 44);
    CHECK(p.quotient_dimension() == 30);
    CHECK(p.residue_scale == 1);
    CHECK(p.system == f.system); // already monic and in standard position
}

TEST_CASE("verify_basis accepts pure powers and rejects ties") {
    auto v = testing::vars({"x1", "x2"});
    PolySystem pure{v, {P(v, "x1^2"), P(v, "x2^3")}};
    BasisProfile p = verify_basis(pure, {1, 1});
    CHECK(p.r == ExponentVec{1, 2});

    auto f = testing::reference_file();
    CHECK_THROWS_AS(verify_basis(f.system, WeightVector{1, 1, 1}), PreconditionError);
}

TEST_CASE("verify_basis normalizes permutation and scalars") {
    auto v = testing::vars({"x1", "x2"});
    PolySystem swapped{v, {P(v, "3*x2^2 - 1"), P(v, "2*x1^3 + x2")}};
    BasisProfile p = verify_basis(swapped, {1, 1});
    CHECK(p.r == ExponentVec{2, 1});
    CHECK(p.system.generators[0] == P(v, "x1^3 + 1/2*x2"));
    CHECK(p.system.generators[1] == P(v, "x2^2 - 1/3"));
    CHECK(p.permutation == std::vector<std::size_t>{1, 0});
    // swap sign -1, scalars 3 and 2
    CHECK(p.residue_scale == make_rational(Integer(-1), Integer(6)));
}

TEST_CASE("discover_weight finds a compatible weight") {
    auto f = testing::reference_file();
    WeightVector w = discover_weight(f.system);
    BasisProfile p = verify_basis(f.system, w);
    CHECK(p.r == ExponentVec{4, 1, 2});

    auto v = testing::vars({"x1", "x2"});
    PolySystem linear{v, {P(v, "x1 - 1"), P(v, "x2 - 1")}};
    CHECK_NOTHROW(verify_basis(linear, discover_weight(linear)));

    PolySystem bad{v, {P(v, "x1 + x2"), P(v, "x1 - x2")}};
    CHECK_THROWS_AS(discover_weight(bad), PreconditionError);
}

TEST_CASE("s_of") {
    BasisProfile p = testing::reference_profile();
    CHECK(p.s_of(p.r) == 0);
    CHECK(p.s_of({15, 15, 15}) == 180);
    CHECK(p.s_of({6, 1, 1}) == -1);
}

TEST_CASE("euler_jacobi_vanishes") {
    BasisProfile p = testing::reference_profile();
    const auto& v = p.system.vars;
    CHECK(euler_jacobi_vanishes(P(v, "1"), p));                 // 0 < 44 - 14
    CHECK_FALSE(euler_jacobi_vanishes(P(v, "x1^4*x2*x3^2"), p)); // boundary: 30

    auto u = testing::vars({"x"});
    BasisProfile uni = verify_basis(PolySystem{u, {P(u, "x^2 - 1")}}, {1});
    CHECK(euler_jacobi_vanishes(P(u, "1"), uni)); // 0 < 2 - 1
}

TEST_CASE("discover_weight then verify always agrees") {
    // property: whenever discover_weight succeeds, verify_basis accepts it
    std::mt19937 rng(13);
    auto v = testing::vars({"x1", "x2"});
    int found = 0;
    for (int rep = 0; rep < 60; ++rep) {
        Polynomial a = testing::random_polynomial(rng, v, 3, 3);
        Polynomial b = testing::random_polynomial(rng, v, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        PolySystem sys{v, {a, b}};
        try {
            WeightVector w = discover_weight(sys);
            CHECK_NOTHROW(verify_basis(sys, w));
            ++found;
        } catch (const PreconditionError&) {
        }
    }
    CHECK(found > 0);
}

} // TEST_SUITE
