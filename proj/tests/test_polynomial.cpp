#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "residua/weights.hpp"

using namespace residua;
using residua::testing::P;
using residua::testing::random_polynomial;

TEST_SUITE("poly-core") {

TEST_CASE("parsing the reference generators") {
    auto v = testing::vars({"x1", "x2", "x3"});
    Polynomial g1 = P(v, "x1^5 + x2^3 + x3^2 - 1");
    CHECK(g1.term_count() == 4);
    CHECK(g1.coefficient_of({5, 0, 0}) == 1);
    CHECK(g1.coefficient_of({0, 0, 0}) == -1);

    CHECK(P(v, "0").is_zero());
    CHECK(P(v, "0").term_count() == 0);

    Polynomial p = P(v, "3/2*x1*x2 - x1");
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient_of({1, 1, 0}) == make_rational(Integer(3), Integer(2)));
    CHECK(p.coefficient_of({1, 0, 0}) == -1);
}

TEST_CASE("parse errors carry positions") {
    auto v = testing::vars({"x", "y"});
    CHECK_THROWS_AS(P(v, "x + + y"), ParseError);
    CHECK_THROWS_AS(P(v, "x *"), ParseError);
    CHECK_THROWS_AS(P(v, ""), ParseError);
    CHECK_THROWS_AS(P(v, "x + 1/0"), ParseError);
    try {
        P(v, "x + z");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
        CHECK(e.position() == 4);
    }
}

TEST_CASE("printer conventions") {
    auto v = testing::vars({"x", "y"});
    CHECK(P(v, "y + x^2 - 1").to_string() == "x^2 + y - 1");
    CHECK((P(v, "x - 1") * P(v, "x + 1")).to_string() == "x^2 - 1");
    CHECK(P(v, "3/2*x - 2*y").to_string() == "3/2*x - 2*y");
    CHECK(P(v, "0*x").to_string() == "0");
    CHECK(P(v, "x^2*y - x*y^2").to_string() == "x^2*y - x*y^2");
    CHECK(Polynomial::monomial(v, {-2, 1}, Rational(1)).to_string() == "x^-2*y");
}

TEST_CASE("arithmetic basics") {
    auto v = testing::vars({"x"});
    Polynomial p = P(v, "x^3 - 2*x + 5");
    CHECK(p + Polynomial(v) == p);
    CHECK((P(v, "x - 1") * P(v, "x + 1")) == P(v, "x^2 - 1"));
    CHECK((p - p).is_zero());
    CHECK(p.scaled(Rational(0)).is_zero());
    CHECK(P(v, "x + 1").pow(2) == P(v, "x^2 + 2*x + 1"));

    auto w = testing::vars({"y"});
    CHECK_THROWS_AS(p + Polynomial(w), PreconditionError);
}

TEST_CASE("reference product has weighted degree 44") {
    auto f = testing::reference_file();
    Polynomial prod = f.system.generators[0] * f.system.generators[1] * f.system.generators[2];
    CHECK(weighted_degree(prod, *f.weight) == 44);
}

TEST_CASE("partial derivatives") {
    auto v = testing::vars({"x1", "x2", "x3"});
    CHECK(P(v, "x1^5").derivative(0) == P(v, "5*x1^4"));
    CHECK(P(v, "x2^3").derivative(0).is_zero());
    CHECK(P(v, "x1^2 + x2^2 + x3 - 1").derivative(2) == P(v, "1"));
    CHECK_THROWS_AS(Polynomial::monomial(v, {-1, 0, 0}, Rational(1)).derivative(0), PreconditionError);
}

TEST_CASE("jacobian determinants") {
    auto v2 = testing::vars({"x1", "x2"});
    PolySystem trivial{v2, {P(v2, "x1"), P(v2, "x2")}};
    CHECK(jacobian_determinant(trivial) == P(v2, "1"));

    auto v1 = testing::vars({"x"});
    PolySystem square{v1, {P(v1, "x^2")}};
    CHECK(jacobian_determinant(square) == P(v1, "2*x"));

    auto f = testing::reference_file();
    Polynomial j = jacobian_determinant(f.system);
    CHECK(j == P(f.system.vars, "18*x1^5*x2^2 - 24*x1^5*x2*x3 - 25*x1^4*x2^4 + 30*x1^4*x2*x3^2"
                                " + 20*x1*x2^4*x3 - 18*x1*x2^2*x3^2"));
}

TEST_CASE("coefficient_of") {
    auto v = testing::vars({"x"});
    Polynomial p = P(v, "x^2 - 1");
    CHECK(p.coefficient_of({2}) == 1);
    CHECK(p.coefficient_of({1}) == 0);
    CHECK(p.coefficient_of({0}) == -1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    auto v = testing::vars({"x", "y"});
    for (int rep = 0; rep < 50; ++rep) {
        Polynomial a = random_polynomial(rng, v, 4, 5);
        Polynomial b = random_polynomial(rng, v, 4, 5);
        Polynomial c = random_polynomial(rng, v, 4, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("parse-print round trip") {
    std::mt19937 rng(9);
    auto v = testing::vars({"x", "y", "z_2"});
    for (int rep = 0; rep < 50; ++rep) {
        Polynomial p = random_polynomial(rng, v, 5, 6);
        CHECK(parse_polynomial(p.to_string(), v) == p);
    }
    // Laurent polynomials round trip too
    Polynomial q = Polynomial::from_terms(
        v, {Term{{-3, 2, 0}, Rational(5)}, Term{{0, -1, -1}, make_rational(Integer(-7), Integer(3))}});
    CHECK(parse_polynomial(q.to_string(), v) == q);
}

TEST_CASE("product rule on random polynomials") {
    std::mt19937 rng(11);
    auto v = testing::vars({"x", "y"});
    for (int rep = 0; rep < 40; ++rep) {
        Polynomial p = random_polynomial(rng, v, 4, 4);
        Polynomial q = random_polynomial(rng, v, 4, 4);
        for (std::size_t var = 0; var < 2; ++var) {
            Polynomial lhs = (p * q).derivative(var);
            Polynomial rhs = p * q.derivative(var) + q * p.derivative(var);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluation") {
    auto v = testing::vars({"x", "y"});
    Polynomial p = P(v, "x^2*y - 3*x + 1/2");
    std::vector<Rational> at{Rational(2), make_rational(Integer(1), Integer(2))};
    CHECK(p.evaluate(at) == make_rational(Integer(-7), Integer(2)));
}

} // TEST_SUITE
