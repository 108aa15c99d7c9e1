#pragma once

#include <optional>
#include <string>
#include <vector>

#include "viennot/characters.hpp"
#include "viennot/ideal.hpp"
#include "viennot/limits.hpp"

namespace viennot {

// Character of the degree-k slice of the quotient as a function on pairs of
// cycle types: values[a][b] at (class a, class b) in partitions(n) order.
struct GradedCharacter {
    int n = 0;
    int k = 0;
    std::vector<std::vector<mpz_class>> values;
};

// Trace route: act on the degree-k shadow-monomial basis by one canonical
// representative per class pair, reduce to normal form, read the diagonal.
GradedCharacter graded_character(int n, int k, const Limits& limits = {});

// Character-theory route: sum over shapes with first row n-k of
// chi^lambda x chi^lambda.
GradedCharacter graded_character_expected(const CharacterTable& table, int k);

// Identity-pair value only (the graded dimension); cheap for larger n.
mpz_class graded_character_identity_value(int n, int k, const Limits& limits = {});

struct ConjectureReport {
    std::string conjecture;  // "novak-rhoades" or "equivariant"
    int n = 0;
    bool holds = false;
    // One entry per k (resp. d); empty witness means the step verified.
    struct Step {
        int parameter = 0;
        bool holds = false;
        std::string witness;  // violating shape or pair, when found
    };
    std::vector<Step> steps;
    std::string to_json() const;
};

// Decomposes alpha_{n,k}^2 - alpha_{n,k-1} * alpha_{n,k+1} for 1 < k < n and
// reports whether every irreducible multiplicity is nonnegative.
ConjectureReport check_novak_rhoades(int n, const Limits& limits = {});

// For 0 < d < n-1 compares irreducible multiplicities of the diagonal
// S_n x S_n action on slice(d-1) (x) slice(d+1) against slice(d) (x) slice(d):
// the injection exists exactly when every source multiplicity is bounded by
// the target one.
ConjectureReport check_equivariant_conjecture(int n, const Limits& limits = {});

}  // namespace viennot
