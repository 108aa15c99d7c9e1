#include "viennot/module_structure.hpp"

#include <json.hpp>

#include <stdexcept>

#include "viennot/quotient.hpp"

namespace viennot {

namespace {

// Row permutation by u and column permutation by v on the variable grid.
GridMonomial act_on_monomial(const GridMonomial& m, const Permutation& u, const Permutation& v) {
    std::vector<std::pair<Cell, int>> factors;
    factors.reserve(m.factors().size());
    for (const auto& [cell, exp] : m.factors())
        factors.emplace_back(Cell{u(cell.i), v(cell.j)}, exp);
    return GridMonomial(m.n(), factors);
}

}  // namespace

GradedCharacter graded_character(int n, int k, const Limits& limits) {
    if (n > limits.trace_n)
        throw ResourceLimitError("graded_character: n=" + std::to_string(n) + " exceeds guard " +
                                 std::to_string(limits.trace_n));
    if (k < 0 || k > n - 1) throw std::invalid_argument("graded_character: k out of range");
    const std::vector<Partition> types = partitions(n);
    std::vector<GridMonomial> basis;
    for (const auto& [w, monomial] : standard_monomial_basis(n, limits))
        if (monomial.degree() == k) basis.push_back(monomial);

    const Field field = Field::rationals();
    GradedCharacter result{n, k, {}};
    result.values.assign(types.size(), std::vector<mpz_class>(types.size()));
    for (std::size_t a = 0; a < types.size(); ++a) {
        const Permutation u = canonical_of_cycle_type(types[a]);
        for (std::size_t b = 0; b < types.size(); ++b) {
            const Permutation v = canonical_of_cycle_type(types[b]);
            mpq_class trace = 0;
            for (const GridMonomial& m : basis) {
                const GridMonomial image = act_on_monomial(m, u, v);
                const Polynomial reduced = normal_form(Polynomial::monomial(n, image, field));
                const auto it = reduced.terms().find(m);
                if (it != reduced.terms().end()) trace += it->second.value();
            }
            if (trace.get_den() != 1)
                throw std::logic_error("graded_character: non-integral trace");
            result.values[a][b] = trace.get_num();
        }
    }
    return result;
}

GradedCharacter graded_character_expected(const CharacterTable& table, int k) {
    const int n = table.n();
    const auto& shapes = table.shapes();
    GradedCharacter result{n, k, {}};
    result.values.assign(shapes.size(), std::vector<mpz_class>(shapes.size(), 0));
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        if (shapes[s].first_part() != n - k) continue;
        for (std::size_t a = 0; a < shapes.size(); ++a)
            for (std::size_t b = 0; b < shapes.size(); ++b)
                result.values[a][b] += table.value(s, a) * table.value(s, b);
    }
    return result;
}

mpz_class graded_character_identity_value(int n, int k, const Limits& limits) {
    // At the identity pair every basis monomial is fixed, so the trace is the
    // graded dimension; still computed through the normal-form path.
    if (k < 0 || k > n - 1) throw std::invalid_argument("graded_character: k out of range");
    const Field field = Field::rationals();
    const Permutation id = Permutation::identity(n);
    mpq_class trace = 0;
    for (const auto& [w, monomial] : standard_monomial_basis(n, limits)) {
        if (monomial.degree() != k) continue;
        const Polynomial reduced = normal_form(Polynomial::monomial(n, monomial, field));
        const auto it = reduced.terms().find(monomial);
        if (it != reduced.terms().end()) trace += it->second.value();
    }
    if (trace.get_den() != 1) throw std::logic_error("graded_character: non-integral trace");
    return trace.get_num();
}

std::string ConjectureReport::to_json() const {
    nlohmann::json steps_json = nlohmann::json::array();
    for (const Step& step : steps) {
        nlohmann::json entry{{conjecture == "novak-rhoades" ? "k" : "d", step.parameter},
                             {"verdict", step.holds ? "holds" : "violated"}};
        if (!step.witness.empty()) entry["violating_pair"] = step.witness;
        steps_json.push_back(entry);
    }
    nlohmann::json out{{"conjecture", conjecture},
                       {"n", n},
                       {"verdict", holds ? "holds" : "violated"},
                       {"steps", steps_json}};
    return out.dump(2);
}

ConjectureReport check_novak_rhoades(int n, const Limits& limits) {
    const CharacterTable table(n, limits);
    ConjectureReport report{"novak-rhoades", n, true, {}};
    for (int k = 2; k < n; ++k) {
        const ClassFunction difference =
            kronecker(table.alpha(k), table.alpha(k)) -
            kronecker(table.alpha(k - 1), table.alpha(k + 1));
        const std::vector<mpq_class> multiplicities = table.decompose(difference);
        ConjectureReport::Step step{k, true, ""};
        for (std::size_t s = 0; s < multiplicities.size(); ++s) {
            if (multiplicities[s].get_den() != 1)
                throw std::logic_error("novak-rhoades: non-integral multiplicity");
            if (multiplicities[s] < 0) {
                step.holds = false;
                step.witness = format_partition(table.shapes()[s]) + " -> " +
                               multiplicities[s].get_str();
                break;
            }
        }
        report.holds = report.holds && step.holds;
        report.steps.push_back(std::move(step));
    }
    return report;
}

ConjectureReport check_equivariant_conjecture(int n, const Limits& limits) {
    if (n > limits.conjecture_n)
        throw ResourceLimitError("equivariant check: n=" + std::to_string(n) +
                                 " exceeds guard " + std::to_string(limits.conjecture_n));
    const CharacterTable table(n, limits);
    const auto& shapes = table.shapes();
    const std::size_t count = shapes.size();

    // g(lambda, mu, -) for all shape pairs, computed once.
    std::vector<std::vector<std::vector<mpz_class>>> kron(
        count, std::vector<std::vector<mpz_class>>(count));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            kron[a][b].reserve(count);
            for (std::size_t c = 0; c < count; ++c)
                kron[a][b].push_back(table.kronecker_coefficient(shapes[a], shapes[b], shapes[c]));
        }

    auto pair_multiplicities = [&](int slice_a, int slice_b, std::size_t nu, std::size_t rho) {
        // Multiplicity of V^nu (x) V^rho in slice_a (x) slice_b under the
        // diagonal action: sum over lambda_1 = n - slice_a, mu_1 = n - slice_b
        // of g(lambda, mu, nu) g(lambda, mu, rho).
        mpz_class total = 0;
        for (std::size_t l = 0; l < count; ++l) {
            if (shapes[l].first_part() != n - slice_a) continue;
            for (std::size_t m = 0; m < count; ++m) {
                if (shapes[m].first_part() != n - slice_b) continue;
                total += kron[l][m][nu] * kron[l][m][rho];
            }
        }
        return total;
    };

    ConjectureReport report{"equivariant", n, true, {}};
    for (int d = 1; d < n - 1; ++d) {
        ConjectureReport::Step step{d, true, ""};
        for (std::size_t nu = 0; nu < count && step.holds; ++nu)
            for (std::size_t rho = 0; rho < count; ++rho) {
                const mpz_class source = pair_multiplicities(d - 1, d + 1, nu, rho);
                const mpz_class target = pair_multiplicities(d, d, nu, rho);
                if (source > target) {
                    step.holds = false;
                    step.witness = "(" + format_partition(shapes[nu]) + ") x (" +
                                   format_partition(shapes[rho]) + "): " + source.get_str() +
                                   " > " + target.get_str();
                    break;
                }
            }
        report.holds = report.holds && step.holds;
        report.steps.push_back(std::move(step));
    }
    return report;
}

}  // namespace viennot
