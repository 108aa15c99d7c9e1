#include <doctest.h>

#include <algorithm>
#include <random>

#include "viennot/monomial.hpp"

using namespace viennot;

namespace {

GridMonomial var(int n, int i, int j) { return GridMonomial::variable(n, {i, j}); }

GridMonomial random_monomial(int n, std::mt19937& rng, int max_degree) {
    std::vector<std::pair<Cell, int>> factors;
    const int degree = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    for (int k = 0; k < degree; ++k)
        factors.emplace_back(
            Cell{1 + static_cast<int>(rng() % static_cast<unsigned>(n)),
                 1 + static_cast<int>(rng() % static_cast<unsigned>(n))},
            1);
    return GridMonomial(n, factors);
}

}  // namespace

TEST_CASE("variable chain for n = 4 matches the listing") {
    const ToeplitzOrder order(4);
    const std::vector<Cell> expected{{1, 1}, {2, 1}, {1, 2}, {3, 1}, {2, 2}, {1, 3}, {4, 1},
                                     {3, 2}, {2, 3}, {1, 4}, {4, 2}, {3, 3}, {2, 4}, {4, 3},
                                     {3, 4}, {4, 4}};
    for (int rank = 0; rank < 16; ++rank) {
        CHECK(order.variable_at(rank) == expected[static_cast<std::size_t>(rank)]);
        CHECK(order.rank_of(expected[static_cast<std::size_t>(rank)]) == rank);
    }
}

TEST_CASE("single-variable comparisons") {
    CHECK(toeplitz_compare(var(4, 1, 1), var(4, 2, 1)) > 0);
    CHECK(toeplitz_compare(var(4, 2, 1), var(4, 1, 2)) > 0);
    CHECK(toeplitz_compare(var(4, 3, 1), var(4, 1, 2)) < 0);
    CHECK(toeplitz_compare(var(4, 2, 2), var(4, 2, 2)) == 0);
    CHECK_THROWS_AS(toeplitz_compare(var(3, 1, 1), var(4, 1, 1)), std::invalid_argument);
}

TEST_CASE("one is the minimum monomial") {
    const GridMonomial one(4);
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const GridMonomial m = random_monomial(4, rng, 4);
        if (m.is_one()) continue;
        CHECK(toeplitz_compare(one, m) < 0);
    }
}

TEST_CASE("order is total and multiplicative") {
    std::mt19937 rng(11);
    for (int t = 0; t < 400; ++t) {
        const GridMonomial a = random_monomial(3, rng, 3);
        const GridMonomial b = random_monomial(3, rng, 3);
        const GridMonomial c = random_monomial(3, rng, 3);
        const int ab = toeplitz_compare(a, b);
        CHECK(ab == -toeplitz_compare(b, a));
        if (ab <= 0) CHECK(toeplitz_compare(a.times(c), b.times(c)) <= 0);
        if (ab == 0) CHECK(a == b);
    }
}

TEST_CASE("lexicographic comparison against brute-force exponent vectors") {
    const ToeplitzOrder order(3);
    std::mt19937 rng(13);
    auto exponent_vector = [&](const GridMonomial& m) {
        std::vector<int> exps(static_cast<std::size_t>(order.variable_count()), 0);
        for (const auto& [cell, exp] : m.factors())
            exps[static_cast<std::size_t>(order.rank_of(cell))] = exp;
        return exps;
    };
    for (int t = 0; t < 300; ++t) {
        const GridMonomial a = random_monomial(3, rng, 4);
        const GridMonomial b = random_monomial(3, rng, 4);
        const auto ea = exponent_vector(a);
        const auto eb = exponent_vector(b);
        int expected = 0;
        for (std::size_t k = 0; k < ea.size(); ++k)
            if (ea[k] != eb[k]) {
                expected = ea[k] > eb[k] ? 1 : -1;
                break;
            }
        const int got = toeplitz_compare(a, b);
        CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == expected);
    }
}

TEST_CASE("rook monomial predicate") {
    CHECK(GridMonomial(3).is_rook_monomial());
    CHECK(var(3, 2, 2).times(var(3, 3, 3)).is_rook_monomial());
    CHECK_FALSE(var(3, 2, 2).times(var(3, 2, 3)).is_rook_monomial());  // shared row
    CHECK_FALSE(var(3, 2, 2).times(var(3, 3, 2)).is_rook_monomial());  // shared column
    CHECK_FALSE(GridMonomial(3, {{Cell{1, 1}, 2}}).is_rook_monomial());  // square
    CHECK(var(3, 1, 2).times(var(3, 2, 1)).support_placement() ==
          RookPlacement(3, {{1, 2}, {2, 1}}));
}

TEST_CASE("monomial formatting") {
    CHECK(format_monomial(GridMonomial(3)) == "1");
    CHECK(format_monomial(var(3, 2, 3).times(var(3, 1, 1)).times(var(3, 1, 1))) ==
          "x[1,1]^2*x[2,3]");
}
