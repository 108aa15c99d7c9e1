#include <doctest.h>

#include <set>

#include "viennot/schensted.hpp"

using namespace viennot;

namespace {

Tableau rows(std::vector<std::vector<int>> r) { return Tableau(std::move(r)); }

}  // namespace

TEST_CASE("insertion schensted on small cases") {
    const TableauPair pair = insertion_schensted(Permutation({2, 1}));
    CHECK(pair.P == rows({{1}, {2}}));
    CHECK(pair.Q == rows({{1}, {2}}));

    CHECK(insertion_schensted(Permutation({3, 1, 2})).P.shape() == std::vector<int>{2, 1});

    const TableauPair id3 = insertion_schensted(Permutation({1, 2, 3}));
    CHECK(id3.P == rows({{1, 2, 3}}));
    CHECK(id3.Q == rows({{1, 2, 3}}));
}

TEST_CASE("the worked 8-element example") {
    const Permutation w({4, 1, 8, 5, 3, 6, 2, 7});
    const TableauPair geometric = viennot_schensted(w);
    CHECK(geometric.P == rows({{1, 2, 6, 7}, {3, 5}, {4}, {8}}));
    CHECK(geometric.Q == rows({{1, 3, 6, 8}, {2, 4}, {5}, {7}}));
    CHECK(insertion_schensted(w) == geometric);
    CHECK(inverse_schensted(geometric) == w);
    CHECK(lis(w) == 4);
}

TEST_CASE("geometric route agrees with insertion across S_5") {
    for_each_permutation(5, [](const Permutation& w) {
        CHECK(viennot_schensted(w) == insertion_schensted(w));
    });
}

TEST_CASE("inverse schensted is a bijection onto shape-matched pairs, n=4") {
    // sum over shapes of (f^lambda)^2 = 24 standard pairs
    std::vector<std::vector<int>> shapes{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    std::set<std::vector<int>> words;
    int pairs = 0;
    for (const auto& shape : shapes) {
        const auto tableaux = standard_tableaux(shape);
        for (const Tableau& p : tableaux)
            for (const Tableau& q : tableaux) {
                ++pairs;
                const Permutation w = inverse_schensted({p, q});
                words.insert(w.word());
                CHECK(insertion_schensted(w) == TableauPair{p, q});
            }
    }
    CHECK(pairs == 24);
    CHECK(words.size() == 24);
}

TEST_CASE("inverse schensted rejects bad input") {
    const Tableau single_row = rows({{1, 2, 3}});
    const Tableau column = rows({{1}, {2}, {3}});
    CHECK_THROWS_AS(inverse_schensted({single_row, column}), std::invalid_argument);
    // Partial standard but not standard.
    const Tableau sparse = rows({{1, 3, 7}});
    CHECK_THROWS_AS(inverse_schensted({sparse, sparse}), std::invalid_argument);
}

TEST_CASE("round trip across S_5") {
    for_each_permutation(5, [](const Permutation& w) {
        CHECK(inverse_schensted(insertion_schensted(w)) == w);
    });
}

TEST_CASE("lis basics") {
    CHECK(lis(Permutation::identity(6)) == 6);
    CHECK(lis(Permutation::reversal(6)) == 1);
    for_each_permutation(6, [](const Permutation& w) { CHECK(lis(w) == lis_dp(w)); });
}

TEST_CASE("lis histogram") {
    CHECK(lis_histogram(1) == std::vector<std::uint64_t>{1});
    CHECK(lis_histogram(2) == std::vector<std::uint64_t>{1, 1});
    CHECK(lis_histogram(4) == std::vector<std::uint64_t>{1, 13, 9, 1});

    const auto h5 = lis_histogram(5);
    std::uint64_t total = 0;
    for (auto c : h5) total += c;
    CHECK(total == 120);
    CHECK(h5.front() == 1);
    CHECK(h5.back() == 1);
    CHECK(lis_histogram(5, {}, 4) == h5);  // threaded run merges identically

    CHECK_THROWS_AS(lis_histogram(12), ResourceLimitError);
}
