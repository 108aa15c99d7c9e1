#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "viennot/local_stats.hpp"
#include "viennot/module_structure.hpp"
#include "viennot/quotient.hpp"

namespace py = pybind11;
using namespace viennot;

namespace {

Permutation make_permutation(const std::vector<int>& word) { return Permutation(word); }

RookPlacement make_placement(int n, const std::vector<std::pair<int, int>>& cells) {
    std::vector<Cell> converted;
    converted.reserve(cells.size());
    for (const auto& [i, j] : cells) converted.push_back({i, j});
    return RookPlacement(n, std::move(converted));
}

std::vector<std::pair<int, int>> cells_of(const RookPlacement& r) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(r.size()));
    for (const Cell& c : r.cells()) out.emplace_back(c.i, c.j);
    return out;
}

Field field_of(unsigned p) { return p == 0 ? Field::rationals() : Field::prime(p); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations around the Schensted correspondence and the "
              "permutation-matrix quotient ring";

    m.def(
        "rsk",
        [](const std::vector<int>& word) {
            const TableauPair pair = viennot_schensted(make_permutation(word));
            return std::make_pair(pair.P.rows(), pair.Q.rows());
        },
        py::arg("word"), "Tableau pair (P, Q) via the shadow-line construction");

    m.def(
        "insertion_rsk",
        [](const std::vector<int>& word) {
            const TableauPair pair = insertion_schensted(make_permutation(word));
            return std::make_pair(pair.P.rows(), pair.Q.rows());
        },
        py::arg("word"), "Tableau pair (P, Q) via classical row insertion");

    m.def(
        "inverse_rsk",
        [](const std::vector<std::vector<int>>& p, const std::vector<std::vector<int>>& q) {
            return inverse_schensted({Tableau(p), Tableau(q)}).word();
        },
        py::arg("P"), py::arg("Q"));

    m.def(
        "shadow_set",
        [](const std::vector<int>& word) { return cells_of(shadow_set(make_permutation(word))); },
        py::arg("word"));

    m.def(
        "iterated_shadow_sets",
        [](const std::vector<int>& word) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const RookPlacement& r : iterated_shadow_sets(make_permutation(word)))
                out.push_back(cells_of(r));
            return out;
        },
        py::arg("word"));

    m.def(
        "ballot_check",
        [](int n, const std::vector<std::pair<int, int>>& cells) {
            const BallotResult r = ballot_check(make_placement(n, cells));
            return py::make_tuple(r.is_shadow_set, r.x_seq, r.y_seq);
        },
        py::arg("n"), py::arg("cells"));

    m.def(
        "shadow_set_to_permutation",
        [](int n, const std::vector<std::pair<int, int>>& cells) {
            return shadow_set_to_permutation(make_placement(n, cells)).word();
        },
        py::arg("n"), py::arg("cells"));

    m.def(
        "lis", [](const std::vector<int>& word) { return lis(make_permutation(word)); },
        py::arg("word"));

    m.def(
        "lis_histogram", [](int n) { return lis_histogram(n); }, py::arg("n"));

    m.def(
        "hilbert_series", [](int n) { return hilbert_series(n); }, py::arg("n"));

    m.def(
        "standard_monomial_basis",
        [](int n) {
            std::vector<std::pair<std::vector<int>, std::string>> out;
            for (const auto& [w, monomial] : standard_monomial_basis(n))
                out.emplace_back(w.word(), format_monomial(monomial));
            return out;
        },
        py::arg("n"));

    m.def(
        "normal_form",
        [](int n, const std::string& poly, unsigned p) {
            const Field f = field_of(p);
            return format_polynomial(normal_form(parse_polynomial(poly, n, f)));
        },
        py::arg("n"), py::arg("polynomial"), py::arg("p") = 0,
        "Normal form onto the shadow monomial basis; p = 0 means rationals");

    m.def(
        "ideal_generators",
        [](int n, unsigned p) {
            std::vector<std::string> out;
            for (const Polynomial& g : ideal_generators(n, field_of(p)))
                out.push_back(format_polynomial(g));
            return out;
        },
        py::arg("n"), py::arg("p") = 0);

    m.def(
        "evaluate",
        [](int n, const std::string& poly, const std::vector<int>& word) {
            return format_scalar(
                parse_polynomial(poly, n, Field::rationals()).evaluate(make_permutation(word)));
        },
        py::arg("n"), py::arg("polynomial"), py::arg("word"));

    m.def(
        "evaluation_matrix_determinant",
        [](int n) { return evaluation_matrix_determinant(n).get_str(); }, py::arg("n"));

    m.def(
        "junta_basis",
        [](int n, int k) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const RookPlacement& r : junta_basis(n, k).elements) out.push_back(cells_of(r));
            return out;
        },
        py::arg("n"), py::arg("k"));

    m.def(
        "builtin_statistic",
        [](const std::string& name, int n) {
            std::vector<std::string> out;
            for (const Scalar& v : builtin_statistic(builtin_statistic_by_name(name), n).values())
                out.push_back(format_scalar(v));
            return out;
        },
        py::arg("name"), py::arg("n"));

    m.def(
        "decompose_statistic",
        [](int n, const std::vector<std::string>& values, int k,
           unsigned p) -> std::optional<std::vector<std::pair<std::vector<std::pair<int, int>>, std::string>>> {
            const Field f = field_of(p);
            std::vector<Scalar> scalars;
            scalars.reserve(values.size());
            for (const std::string& v : values) scalars.push_back(parse_scalar(v, f));
            const PermutationStatistic stat(n, f, std::move(scalars));
            const Decomposition d = decompose(stat, k);
            if (!d.k_local) return std::nullopt;
            std::vector<std::pair<std::vector<std::pair<int, int>>, std::string>> out;
            for (std::size_t c = 0; c < d.coefficients.size(); ++c)
                out.emplace_back(cells_of(d.basis.elements[c]), format_scalar(d.coefficients[c]));
            return out;
        },
        py::arg("n"), py::arg("values"), py::arg("k"), py::arg("p") = 0,
        "Coefficients over the junta basis, or None when not k-local");

    m.def(
        "minimal_locality",
        [](int n, const std::vector<std::string>& values) {
            std::vector<Scalar> scalars;
            scalars.reserve(values.size());
            for (const std::string& v : values) scalars.push_back(parse_scalar(v, Field::rationals()));
            return minimal_locality(PermutationStatistic(n, Field::rationals(), std::move(scalars)));
        },
        py::arg("n"), py::arg("values"));

    m.def(
        "character_table",
        [](int n) {
            const CharacterTable table(n);
            py::dict out;
            for (std::size_t s = 0; s < table.shapes().size(); ++s) {
                py::dict row;
                for (std::size_t c = 0; c < table.classes().size(); ++c)
                    row[py::str(format_partition(table.classes()[c]))] =
                        static_cast<long>(table.value(s, c).get_si());
                out[py::str(format_partition(table.shapes()[s]))] = row;
            }
            return out;
        },
        py::arg("n"));

    m.def(
        "alpha",
        [](int n, int k) {
            const CharacterTable table(n);
            const ClassFunction a = table.alpha(k);
            py::dict out;
            for (std::size_t c = 0; c < table.classes().size(); ++c)
                out[py::str(format_partition(table.classes()[c]))] = a.values()[c].get_str();
            return out;
        },
        py::arg("n"), py::arg("k"));

    m.def(
        "kronecker_coefficient",
        [](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
            const Partition pa(a), pb(b), pc(c);
            const CharacterTable table(pa.n());
            return static_cast<long>(table.kronecker_coefficient(pa, pb, pc).get_si());
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "check_novak_rhoades",
        [](int n) {
            const ConjectureReport r = check_novak_rhoades(n);
            return py::make_tuple(r.holds, r.to_json());
        },
        py::arg("n"));

    m.def(
        "check_equivariant",
        [](int n) {
            const ConjectureReport r = check_equivariant_conjecture(n);
            return py::make_tuple(r.holds, r.to_json());
        },
        py::arg("n"));

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError");
}
