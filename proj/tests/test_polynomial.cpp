#include <doctest.h>

#include <random>

#include "viennot/ideal.hpp"
#include "viennot/polynomial.hpp"
#include "viennot/shadow.hpp"

using namespace viennot;

namespace {

const Field Q = Field::rationals();

Polynomial random_polynomial(int n, std::mt19937& rng, Field field, int max_terms = 8,
                             int max_degree = 3) {
    Polynomial f(n, field);
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<Cell, int>> factors;
        const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        for (int e = 0; e < degree; ++e)
            factors.emplace_back(
                Cell{1 + static_cast<int>(rng() % static_cast<unsigned>(n)),
                     1 + static_cast<int>(rng() % static_cast<unsigned>(n))},
                1);
        const long coeff = static_cast<long>(rng() % 21) - 10;
        f.add_term(GridMonomial(n, factors), Scalar(coeff, field));
    }
    return f;
}

}  // namespace

TEST_CASE("injection sums from the worked example") {
    const Polynomial a = injection_sum_a({2, 4}, {1, 3, 4}, 4, Q);
    const Polynomial expected = parse_polynomial(
        "x[2,1]*x[4,3] + x[2,1]*x[4,4] + x[2,3]*x[4,1] + x[2,3]*x[4,4] + x[2,4]*x[4,1] + "
        "x[2,4]*x[4,3]",
        4, Q);
    CHECK(a == expected);
    CHECK(injection_sum_b({2, 4}, {1, 3, 4}, 4, Q) == a.transpose());
    CHECK(injection_sum_a({1, 2, 3}, {1, 2}, 4, Q).is_zero());
}

TEST_CASE("leading terms of injection sums") {
    const Polynomial a = injection_sum_a({2, 4}, {1, 4, 5}, 5, Q);
    const auto [lead, coeff] = a.leading_term();
    CHECK(lead == GridMonomial(5, {{Cell{2, 1}, 1}, {Cell{4, 4}, 1}}));
    CHECK(coeff == Scalar::one(Q));
    // Order-preserving assignment onto the smallest elements of T, generally.
    const Polynomial b = injection_sum_b({3, 6, 7}, {4, 7, 8, 10}, 11, Q);
    CHECK(b.leading_term().first ==
          GridMonomial(11, {{Cell{4, 3}, 1}, {Cell{7, 6}, 1}, {Cell{8, 7}, 1}}));
}

TEST_CASE("leading term basics") {
    const Polynomial c = Polynomial::constant(3, Scalar(5, Q));
    CHECK(c.leading_term().first.is_one());
    CHECK(c.leading_term().second == Scalar(5, Q));
    CHECK_THROWS_AS(Polynomial::zero(3, Q).leading_term(), std::invalid_argument);

    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        const Polynomial f = random_polynomial(3, rng, Q, 20);
        if (f.is_zero()) continue;
        const auto lead = f.leading_term().first;
        for (const auto& [m, s] : f.terms()) CHECK(toeplitz_compare(lead, m) >= 0);
    }
}

TEST_CASE("top component") {
    Polynomial f(2, Q);
    f.add_term(GridMonomial(2, {{Cell{1, 1}, 2}}), Scalar::one(Q));
    f.add_term(GridMonomial::variable(2, {1, 1}), -Scalar::one(Q));
    const Polynomial top = f.top_component();
    CHECK(top == Polynomial::monomial(2, GridMonomial(2, {{Cell{1, 1}, 2}}), Q));

    std::mt19937 rng(19);
    for (int t = 0; t < 100; ++t) {
        Polynomial a = random_polynomial(3, rng, Q);
        Polynomial b = random_polynomial(3, rng, Q);
        if (a.is_zero() || b.is_zero()) continue;
        if (a.is_homogeneous()) CHECK(a.top_component() == a);
        const Polynomial product = a * b;
        if (!product.is_zero())
            CHECK(product.top_component() == a.top_component() * b.top_component());
    }
    CHECK_THROWS_AS(Polynomial::zero(3, Q).top_component(), std::invalid_argument);
}

TEST_CASE("evaluation at permutation matrices") {
    const Polynomial one = Polynomial::constant(4, Scalar::one(Q));
    for_each_permutation(4, [&](const Permutation& w) {
        CHECK(one.evaluate(w) == Scalar::one(Q));
    });
    // Row sums evaluate to 1 everywhere.
    for (const Polynomial& g : ideal_generators(4, Q)) {
        if (g.degree() != 1) continue;
        for_each_permutation(4, [&](const Permutation& w) {
            CHECK(g.evaluate(w) == Scalar::one(Q));
        });
    }
    // A rook monomial evaluates to 1 exactly on the permutations extending
    // its support.
    for_each_permutation(4, [&](const Permutation& w) {
        const RookPlacement s = shadow_set(w);
        const Polynomial m = Polynomial::monomial(4, GridMonomial::of_placement(s), Q);
        for_each_permutation(4, [&](const Permutation& v) {
            CHECK(m.evaluate(v) == (s.extended_by(v) ? Scalar::one(Q) : Scalar::zero(Q)));
        });
    });
}

TEST_CASE("a shadow monomial can vanish on its own permutation") {
    // S([2,1]) = {(2,2)} is not contained in the graph {(1,2),(2,1)}.
    const Permutation w({2, 1});
    const Polynomial m = Polynomial::monomial(2, GridMonomial::of_placement(shadow_set(w)), Q);
    CHECK(m.evaluate(w) == Scalar::zero(Q));
    CHECK(m.evaluate(Permutation::identity(2)) == Scalar::one(Q));
}

TEST_CASE("polynomial text form round trips") {
    const std::string text = "3*x[2,4]*x[5,5] - x[1,1]^2";
    const Polynomial f = parse_polynomial(text, 5, Q);
    CHECK(f.term_count() == 2);
    CHECK(format_polynomial(f) == "-x[1,1]^2 + 3*x[2,4]*x[5,5]");  // reprinted in Toeplitz order
    CHECK(parse_polynomial(format_polynomial(f), 5, Q) == f);

    CHECK(format_polynomial(Polynomial::zero(3, Q)) == "0");
    const Polynomial half = parse_polynomial("1/2*x[1,1] + 2", 3, Q);
    CHECK(parse_polynomial(format_polynomial(half), 3, Q) == half);

    CHECK_THROWS_AS(parse_polynomial("x[1,1] +", 3, Q), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x[4,1]", 3, Q), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1.5*x[1,1]", 3, Q), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", 3, Q), ParseError);
    try {
        parse_polynomial("x[1,1] @ 2", 3, Q);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("polynomial json form round trips") {
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        const Polynomial f = random_polynomial(4, rng, Q);
        CHECK(polynomial_from_json(polynomial_to_json(f), 4, Q) == f);
    }
}

TEST_CASE("scalar parsing and canonical form") {
    CHECK(format_scalar(parse_scalar("6/4", Q)) == "3/2");
    CHECK(format_scalar(parse_scalar("-6/4", Q)) == "-3/2");
    CHECK(format_scalar(parse_scalar("7", Q)) == "7");
    CHECK_THROWS_AS(parse_scalar("1.5", Q), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), ParseError);

    const Field f5 = Field::prime(5);
    CHECK(format_scalar(parse_scalar("7", f5)) == "2");
    CHECK(format_scalar(parse_scalar("1/2", f5)) == "3");  // 2 * 3 = 6 = 1 mod 5
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
}

TEST_CASE("prime field arithmetic inside polynomials") {
    const Field f2 = Field::prime(2);
    Polynomial f(2, f2);
    f.add_term(GridMonomial::variable(2, {1, 1}), Scalar::one(f2));
    f.add_term(GridMonomial::variable(2, {1, 1}), Scalar::one(f2));
    CHECK(f.is_zero());
    CHECK_THROWS_AS(Polynomial::constant(2, Scalar::one(Q)) +
                        Polynomial::constant(2, Scalar::one(f2)),
                    std::invalid_argument);
}
