#include <doctest.h>

#include <random>

#include "residua/matrix.hpp"

using namespace residua;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

// independent determinant oracle: fraction-free (Bareiss) elimination
Integer bareiss_det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sign_of(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sign_of(a[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

} // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("rationals stay canonical") {
    Rational q = make_rational(Integer(4), Integer(-6));
    CHECK(to_string(q) == "-2/3");
    CHECK(q.get_den() == 3);
    CHECK(rational_from_string("-258756707658424020014953731203").get_den() == 1);
    CHECK(to_string(rational_from_string("7/2") + rational_from_string("1/2")) == "4");
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), PreconditionError);
}

TEST_CASE("char_poly on small fixed matrices") {
    CharPoly ident = char_poly(RationalMatrix::identity(2));
    CHECK(ident.coefficients == std::vector<Rational>{1, -2, 1});

    CharPoly swap = char_poly(from_rows({{0, 1}, {1, 0}}));
    CHECK(swap.coefficients == std::vector<Rational>{1, 0, -1});

    CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3)), PreconditionError);
}

TEST_CASE("rank and signature on diagonal matrices") {
    auto rs = rank_and_signature(from_rows({{1, 0}, {0, -1}}));
    CHECK(rs.rank == 2);
    CHECK(rs.signature == 0);

    rs = rank_and_signature(from_rows({{2, 0}, {0, 3}}));
    CHECK(rs.rank == 2);
    CHECK(rs.signature == 2);

    CHECK_THROWS_AS(rank_and_signature(from_rows({{0, 1}, {2, 0}})), PreconditionError);
}

TEST_CASE("solve_linear basics and error split") {
    std::vector<Rational> v{Rational(3), Rational(-7)};
    CHECK(solve_linear(RationalMatrix::identity(2), v) == v);

    auto x = solve_linear(from_rows({{0, 1}, {1, 0}}), v);
    CHECK(x == std::vector<Rational>{Rational(-7), Rational(3)});

    std::string shape, singular;
    try {
        solve_linear(RationalMatrix::identity(2), std::vector<Rational>(3));
    } catch (const PreconditionError& e) {
        shape = e.what();
    }
    try {
        solve_linear(from_rows({{1, 2}, {2, 4}}), v);
    } catch (const PreconditionError& e) {
        singular = e.what();
    }
    CHECK(shape.find("right-hand side") != std::string::npos);
    CHECK(singular.find("singular") != std::string::npos);
    CHECK(shape != singular);
}

TEST_CASE("char_poly constant term matches fraction-free determinant") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t n = size(rng);
        RationalMatrix m(n, n);
        std::vector<std::vector<Integer>> raw(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long v = entry(rng);
                m(i, j) = Rational(v);
                raw[i][j] = Integer(v);
            }
        Rational constant = char_poly(m).coefficients.back();
        Rational det = (n % 2 == 1) ? Rational(-constant) : constant;
        CHECK(det == Rational(bareiss_det(raw)));
        CHECK(determinant(m) == det);
    }
}

TEST_CASE("signature symmetry and rank bound on random symmetric matrices") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int rep = 0; rep < 40; ++rep) {
        std::size_t n = size(rng);
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational v(entry(rng));
                m(i, j) = v;
                m(j, i) = v;
            }
        auto rs = rank_and_signature(m);
        CHECK(rs.rank <= n);
        CHECK(std::abs(rs.signature) <= static_cast<long long>(rs.rank));

        RationalMatrix neg(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) neg(i, j) = -m(i, j);
        auto nrs = rank_and_signature(neg);
        CHECK(nrs.rank == rs.rank);
        CHECK(nrs.signature == -rs.signature);

        // rank + multiplicity of the zero eigenvalue = dimension
        CharPoly p = char_poly(m);
        std::size_t trailing = 0;
        for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend() && sign_of(*it) == 0; ++it)
            ++trailing;
        CHECK(rs.rank + trailing == n);

        // random solve against multiply-back
        if (sign_of(p.coefficients.back()) != 0) {
            std::vector<Rational> rhs(n);
            for (auto& x : rhs) x = Rational(entry(rng));
            auto sol = solve_linear(m, rhs);
            for (std::size_t i = 0; i < n; ++i) {
                Rational acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * sol[j];
                CHECK(acc == rhs[i]);
            }
        }
    }
}

} // TEST_SUITE
