#include <doctest.h>

#include <json.hpp>

#include "viennot/module_structure.hpp"
#include "viennot/quotient.hpp"

using namespace viennot;

TEST_CASE("graded character equals the character-theory prediction, n = 3") {
    const CharacterTable table(3);
    for (int k = 0; k <= 2; ++k) {
        const GradedCharacter traced = graded_character(3, k);
        const GradedCharacter expected = graded_character_expected(table, k);
        CHECK(traced.values == expected.values);
    }
}

TEST_CASE("graded character for n = 4 at selected values") {
    const CharacterTable table(4);
    const GradedCharacter k1 = graded_character(4, 1);
    const GradedCharacter expected1 = graded_character_expected(table, 1);
    CHECK(k1.values == expected1.values);
    // Identity pair sits at the last class (cycle type 1^n); value a_{4,3} = 9.
    CHECK(k1.values.back().back() == 9);

    // Degree 0 carries the trivial character of the product group.
    const GradedCharacter k0 = graded_character(4, 0);
    for (const auto& row : k0.values)
        for (const mpz_class& v : row) CHECK(v == 1);
}

TEST_CASE("graded dimensions sum to n!") {
    for (int n : {4, 5}) {
        mpz_class total = 0;
        for (int k = 0; k <= n - 1; ++k) total += graded_character_identity_value(n, k);
        mpz_class order;
        mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(total == order);
    }
}

TEST_CASE("identity values match the hilbert series, n = 5") {
    const auto series = hilbert_series(5);
    for (int k = 0; k < static_cast<int>(series.size()); ++k)
        CHECK(graded_character_identity_value(5, k) ==
              mpz_class(static_cast<unsigned long>(series[static_cast<std::size_t>(k)])));
}

TEST_CASE("restriction to one factor gives alpha") {
    const CharacterTable table(4);
    const auto& types = table.classes();
    const std::size_t identity_index = types.size() - 1;  // 1^n is last
    for (int k = 0; k <= 3; ++k) {
        const GradedCharacter traced = graded_character(4, k);
        const ClassFunction expected = table.alpha(4 - k);
        for (std::size_t c = 0; c < types.size(); ++c)
            CHECK(mpq_class(traced.values[c][identity_index]) == expected.values()[c]);
    }
}

TEST_CASE("transposing the grid swaps the two group factors") {
    const GradedCharacter traced = graded_character(4, 2);
    for (std::size_t a = 0; a < traced.values.size(); ++a)
        for (std::size_t b = 0; b < traced.values.size(); ++b)
            CHECK(traced.values[a][b] == traced.values[b][a]);
}

TEST_CASE("novak-rhoades check holds through n = 6") {
    for (int n = 3; n <= 6; ++n) {
        const ConjectureReport report = check_novak_rhoades(n);
        CHECK(report.holds);
        CHECK(report.steps.size() == static_cast<std::size_t>(n - 2));
        for (const auto& step : report.steps) CHECK(step.holds);
    }
}

TEST_CASE("novak-rhoades difference at the identity for n = 4, k = 2") {
    const CharacterTable table(4);
    const ClassFunction difference = kronecker(table.alpha(2), table.alpha(2)) -
                                     kronecker(table.alpha(1), table.alpha(3));
    CHECK(difference.at_identity() == 169 - 9);
}

TEST_CASE("novak-rhoades difference at the identity for n = 3, k = 2") {
    const CharacterTable table(3);
    const ClassFunction difference = kronecker(table.alpha(2), table.alpha(2)) -
                                     kronecker(table.alpha(1), table.alpha(3));
    CHECK(difference.at_identity() == 16 - 1);
}

TEST_CASE("equivariant check holds for n = 4 and n = 5") {
    for (int n : {4, 5}) {
        const ConjectureReport report = check_equivariant_conjecture(n);
        CHECK(report.holds);
        CHECK(report.steps.size() == static_cast<std::size_t>(n - 2));
    }
}

TEST_CASE("equivariant source dimensions never exceed the target, n = 4") {
    // Necessary numeric condition at d = 1: 1 * 13 <= 9 * 9.
    const auto series = hilbert_series(4);
    CHECK(series[0] * series[2] <= series[1] * series[1]);
}

TEST_CASE("conjecture reports serialize to JSON") {
    const ConjectureReport report = check_novak_rhoades(4);
    const auto parsed = nlohmann::json::parse(report.to_json());
    CHECK(parsed.at("conjecture") == "novak-rhoades");
    CHECK(parsed.at("n") == 4);
    CHECK(parsed.at("verdict") == "holds");
    CHECK(parsed.at("steps").size() == 2);

    const ConjectureReport equivariant = check_equivariant_conjecture(4);
    const auto parsed2 = nlohmann::json::parse(equivariant.to_json());
    CHECK(parsed2.at("steps").at(0).contains("d"));
}

TEST_CASE("resource guards") {
    CHECK_THROWS_AS(graded_character(7, 1), ResourceLimitError);
    CHECK_THROWS_AS(check_equivariant_conjecture(9), ResourceLimitError);
    Limits deep;
    deep.conjecture_n = 10;
    CHECK(check_equivariant_conjecture(9, deep).holds);
}
