// Command-line surface over the library: exact text/CSV/JSON output with
// fixed orderings, suitable for reproduction scripts.
//
// Exit codes: 0 success, 1 domain or parse error, 2 resource-guard refusal,
// 3 conjecture check found a violation.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "viennot/characters.hpp"
#include "viennot/ideal.hpp"
#include "viennot/local_stats.hpp"
#include "viennot/module_structure.hpp"
#include "viennot/quotient.hpp"

namespace {

using nlohmann::json;
using namespace viennot;

struct Options {
    std::string field_text = "rationals";
    std::string format = "text";
    std::string output_path;
    int threads = 1;
    int enum_guard = 9;
    bool deep = false;

    Field field() const {
        if (field_text == "rationals" || field_text == "Q" || field_text == "0")
            return Field::rationals();
        const long p = std::stol(field_text);
        if (p < 2) throw std::invalid_argument("--field must be 'rationals' or a prime");
        return Field::prime(static_cast<unsigned>(p));
    }
    Limits limits() const {
        Limits l;
        l.enumeration_n = enum_guard;
        if (deep) l.conjecture_n = 10;
        return l;
    }
};

void emit(const Options& opt, const std::string& text) {
    if (opt.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output_path);
    if (!out) throw std::invalid_argument("cannot open output file " + opt.output_path);
    out << text;
}

std::string header_line(const Options& opt, int n, std::size_t count) {
    return "n=" + std::to_string(n) + " field=" + format_field(opt.field()) +
           " count=" + std::to_string(count) + "\n";
}

std::string tableau_line(const Tableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += " / ";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(t.rows()[r][c]);
        }
    }
    return out;
}

json tableau_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

json placement_json(const RookPlacement& r) {
    json cells = json::array();
    for (const Cell& c : r.cells()) cells.push_back(json::array({c.i, c.j}));
    return json{{"n", r.n()}, {"cells", cells}};
}

int run_rsk(const Options& opt, const std::string& perm_text) {
    const Permutation w = parse_permutation(perm_text);
    const TableauPair viennot_pair = viennot_schensted(w);
    const TableauPair insertion_pair = insertion_schensted(w);
    if (!(viennot_pair == insertion_pair))
        throw std::logic_error("rsk: geometric and insertion routes disagree");
    if (opt.format == "json") {
        json out{{"n", w.n()},
                 {"w", w.word()},
                 {"P", tableau_json(viennot_pair.P)},
                 {"Q", tableau_json(viennot_pair.Q)}};
        emit(opt, out.dump(2) + "\n");
    } else {
        emit(opt, "P: " + tableau_line(viennot_pair.P) + "\nQ: " + tableau_line(viennot_pair.Q) +
                      "\n");
    }
    return 0;
}

RookPlacement placement_from_arg(const std::string& arg) {
    // A permutation literal, or a path to a rook-placement file.
    try {
        return RookPlacement::graph_of(parse_permutation(arg));
    } catch (const ParseError&) {
    }
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("argument is neither a permutation nor a readable file: " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return parse_rook_placement(text);
}

int run_shadow(const Options& opt, const std::string& arg) {
    const RookPlacement input = placement_from_arg(arg);
    // Iterate the shadow construction to exhaustion.
    std::vector<RookPlacement> iterates;
    RookPlacement current = shadow_set(input);
    iterates.push_back(current);
    while (!iterates.back().is_empty()) iterates.push_back(shadow_set(iterates.back()));
    if (opt.format == "json") {
        const ShadowDiagram diagram = shadow_lines(input);
        json lines = json::array();
        for (const ShadowLine& line : diagram.lines) {
            json cells = json::array(), corners = json::array(), path = json::array();
            for (const Cell& c : line.cells) cells.push_back(json::array({c.i, c.j}));
            for (const Cell& c : line.corners) corners.push_back(json::array({c.i, c.j}));
            for (const Cell& c : line.path) path.push_back(json::array({c.i, c.j}));
            lines.push_back(json{{"cells", cells},
                                 {"corners", corners},
                                 {"path", path},
                                 {"vertical_ray_x", line.vertical_ray_x},
                                 {"horizontal_ray_y", line.horizontal_ray_y}});
        }
        json iter = json::array();
        for (const RookPlacement& r : iterates) iter.push_back(placement_json(r));
        emit(opt, json{{"input", placement_json(input)},
                       {"lines", lines},
                       {"iterated_shadow_sets", iter}}
                      .dump(2) +
                      "\n");
    } else {
        std::string out = header_line(opt, input.n(), iterates.size());
        out += "shadow: " + format_rook_placement(iterates.front()) + "\n";
        for (std::size_t k = 1; k < iterates.size(); ++k)
            out += "iterate[" + std::to_string(k + 1) + "]: " + format_rook_placement(iterates[k]) +
                   "\n";
        emit(opt, out);
    }
    return 0;
}

std::string sign_sequence(const std::vector<int>& seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k > 0) out += ',';
        out += seq[k] > 0 ? "+1" : seq[k] < 0 ? "-1" : "0";
    }
    return out;
}

int run_check_rook(const Options& opt, const std::string& arg) {
    const RookPlacement r = placement_from_arg(arg);
    const BallotResult ballot = ballot_check(r);
    std::optional<Permutation> preimage;
    if (ballot.is_shadow_set) preimage = shadow_set_to_permutation(r);
    if (opt.format == "json") {
        json out{{"placement", placement_json(r)},
                 {"x_seq", ballot.x_seq},
                 {"y_seq", ballot.y_seq},
                 {"is_shadow_set", ballot.is_shadow_set}};
        if (preimage) out["w"] = preimage->word();
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string out = header_line(opt, r.n(), static_cast<std::size_t>(r.size()));
        out += "x: " + sign_sequence(ballot.x_seq) + "\n";
        out += "y: " + sign_sequence(ballot.y_seq) + "\n";
        out += std::string("is_shadow_set: ") + (ballot.is_shadow_set ? "true" : "false") + "\n";
        if (preimage) out += "w: " + format_permutation(*preimage) + "\n";
        emit(opt, out);
    }
    return 0;
}

int run_basis(const Options& opt, int n) {
    const auto basis = standard_monomial_basis(n, opt.limits());
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& [w, m] : basis)
            rows.push_back(json{{"w", w.word()}, {"monomial", format_monomial(m)}});
        emit(opt, json{{"n", n}, {"count", basis.size()}, {"basis", rows}}.dump(2) + "\n");
    } else {
        std::string out = header_line(opt, n, basis.size());
        for (const auto& [w, m] : basis)
            out += format_permutation(w) + ";" + format_monomial(m) + "\n";
        emit(opt, out);
    }
    return 0;
}

int run_hilbert(const Options& opt, int n) {
    const auto series = hilbert_series(n, opt.limits());
    if (opt.format == "json") {
        emit(opt, json{{"n", n}, {"coefficients", series}}.dump(2) + "\n");
    } else {
        std::string out;
        for (std::size_t k = 0; k < series.size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(series[k]);
        }
        emit(opt, out + "\n");
    }
    return 0;
}

int run_reduce(const Options& opt, int n, const std::string& poly_text,
               const std::string& a_subsets, const std::string& b_subsets) {
    const Field field = opt.field();
    Polynomial f(n, field);
    if (!a_subsets.empty()) {
        const auto [s, t] = parse_subset_pair(a_subsets);
        f = injection_sum_a(s, t, n, field);
    } else if (!b_subsets.empty()) {
        const auto [s, t] = parse_subset_pair(b_subsets);
        f = injection_sum_b(s, t, n, field);
    } else if (!poly_text.empty()) {
        f = parse_polynomial(poly_text, n, field);
    } else {
        throw std::invalid_argument("reduce: provide a polynomial, --a-st, or --b-st");
    }
    const Polynomial reduced = normal_form(f);
    if (opt.format == "json") {
        emit(opt, json{{"n", n},
                       {"field", format_field(field)},
                       {"input", json::parse(polynomial_to_json(f))},
                       {"normal_form", json::parse(polynomial_to_json(reduced))},
                       {"text", format_polynomial(reduced)}}
                      .dump(2) +
                      "\n");
    } else {
        emit(opt, format_polynomial(reduced) + "\n");
    }
    return 0;
}

int run_local_basis(const Options& opt, int n, int k) {
    const JuntaBasis basis = junta_basis(n, k, opt.limits());
    if (opt.format == "json") {
        json rows = json::array();
        for (const RookPlacement& r : basis.elements) rows.push_back(placement_json(r));
        emit(opt, json{{"n", n}, {"k", k}, {"count", basis.elements.size()}, {"elements", rows}}
                      .dump(2) +
                      "\n");
    } else {
        std::string out = header_line(opt, n, basis.elements.size());
        for (const RookPlacement& r : basis.elements) out += format_rook_placement(r) + "\n";
        emit(opt, out);
    }
    return 0;
}

int run_localize(const Options& opt, int n, const std::string& csv_path, int k, bool have_k) {
    const Field field = opt.field();
    std::ifstream in(csv_path);
    if (!in) throw std::invalid_argument("cannot open statistic file " + csv_path);
    const PermutationStatistic f = parse_statistic_csv(in, field);
    if (f.n() != n)
        throw std::invalid_argument("statistic file is over S_" + std::to_string(f.n()) +
                                    ", expected S_" + std::to_string(n));
    int use_k = have_k ? k : minimal_locality(f, opt.limits());
    const Decomposition result = decompose(f, use_k, opt.limits());
    if (opt.format == "json") {
        json out{{"n", n},
                 {"k", use_k},
                 {"field", format_field(field)},
                 {"status", result.k_local ? "ok" : "not_k_local"}};
        if (result.k_local) {
            json coeffs = json::array();
            for (std::size_t c = 0; c < result.coefficients.size(); ++c)
                coeffs.push_back(json{{"rook_placement", format_rook_placement(result.basis.elements[c])},
                                      {"coefficient", format_scalar(result.coefficients[c])}});
            out["coefficients"] = coeffs;
        } else {
            json residual = json::array();
            for_each_permutation(n, [&](const Permutation& w) {
                if (!result.residual->at(w).is_zero())
                    residual.push_back(json{{"permutation", format_permutation(w)},
                                            {"residual", format_scalar(result.residual->at(w))}});
            });
            out["residual"] = residual;
        }
        emit(opt, out.dump(2) + "\n");
    } else {
        std::string out = "status: " + std::string(result.k_local ? "ok" : "not_k_local") +
                          " k=" + std::to_string(use_k) + "\n";
        if (result.k_local) {
            out += format_decomposition_csv(result.basis, result.coefficients);
        } else {
            out += "permutation,residual\n";
            for_each_permutation(n, [&](const Permutation& w) {
                if (!result.residual->at(w).is_zero())
                    out += "\"" + format_permutation(w) + "\"," +
                           format_scalar(result.residual->at(w)) + "\n";
            });
        }
        emit(opt, out);
    }
    return 0;
}

int run_char_table(const Options& opt, int n) {
    if (!opt.field().is_rational())
        throw std::invalid_argument("char-table: representation theory runs over the rationals");
    const CharacterTable table(n, opt.limits());
    if (opt.format == "json") {
        json rows = json::object();
        for (std::size_t s = 0; s < table.shapes().size(); ++s) {
            json row = json::object();
            for (std::size_t c = 0; c < table.classes().size(); ++c)
                row[format_partition(table.classes()[c])] = table.value(s, c).get_str();
            rows[format_partition(table.shapes()[s])] = row;
        }
        emit(opt, json{{"n", n}, {"table", rows}}.dump(2) + "\n");
    } else {
        std::string out = "shape";
        for (const Partition& type : table.classes()) out += ",\"" + format_partition(type) + "\"";
        out += "\n";
        for (std::size_t s = 0; s < table.shapes().size(); ++s) {
            out += "\"" + format_partition(table.shapes()[s]) + "\"";
            for (std::size_t c = 0; c < table.classes().size(); ++c)
                out += "," + table.value(s, c).get_str();
            out += "\n";
        }
        emit(opt, out);
    }
    return 0;
}

int run_alpha(const Options& opt, int n, int k) {
    if (!opt.field().is_rational())
        throw std::invalid_argument("alpha: representation theory runs over the rationals");
    const CharacterTable table(n, opt.limits());
    const ClassFunction a = table.alpha(k);
    if (opt.format == "json") {
        json values = json::object();
        for (std::size_t c = 0; c < table.classes().size(); ++c)
            values[format_partition(table.classes()[c])] = a.values()[c].get_str();
        emit(opt, json{{"n", n}, {"k", k}, {"alpha", values}}.dump(2) + "\n");
    } else {
        std::string out = "cycle_type,value\n";
        for (std::size_t c = 0; c < table.classes().size(); ++c)
            out += "\"" + format_partition(table.classes()[c]) + "\"," + a.values()[c].get_str() +
                   "\n";
        emit(opt, out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify subcommands: print one line per check; exit 0/1/3.

struct VerifyOutcome {
    bool all_passed = true;
    bool counterexample = false;
    std::string text;

    void record(bool ok, const std::string& label) {
        text += std::string(ok ? "PASS" : "FAIL") + ": " + label + "\n";
        all_passed = all_passed && ok;
    }
};

VerifyOutcome verify_rsk(int n, const Limits& limits) {
    VerifyOutcome outcome;
    bool agree = true, shadow_law = true, round_trip = true;
    for_each_permutation(
        n,
        [&](const Permutation& w) {
            const TableauPair via_shadows = viennot_schensted(w);
            if (!(via_shadows == insertion_schensted(w))) agree = false;
            if (shadow_set(w).size() != n - lis(w)) shadow_law = false;
            const RookPlacement s = shadow_set(w);
            if (!ballot_check(s).is_shadow_set || !(shadow_set_to_permutation(s) == w))
                round_trip = false;
        },
        limits);
    outcome.record(agree, "viennot_schensted matches insertion_schensted on S_" + std::to_string(n));
    outcome.record(shadow_law, "|S(w)| = n - lis(w) on S_" + std::to_string(n));
    outcome.record(round_trip, "shadow_set_to_permutation inverts shadow_set on S_" + std::to_string(n));
    return outcome;
}

VerifyOutcome verify_basis(int n, Field field, const Limits& limits) {
    VerifyOutcome outcome;
    std::set<std::string> shadows;
    for (const auto& [w, m] : standard_monomial_basis(n, limits))
        shadows.insert(format_monomial(m));
    outcome.record(shadows.size() == factorial(n),
                   "shadow monomials are distinct (count n!)");
    bool irreducible_match = true;
    for_each_rook_placement(n, [&](const RookPlacement& r) {
        const Polynomial m = Polynomial::monomial(n, GridMonomial::of_placement(r), field);
        const bool fixed = normal_form(m) == m;
        const bool is_shadow = shadows.count(format_monomial(GridMonomial::of_placement(r))) > 0;
        if (fixed != is_shadow) irreducible_match = false;
    });
    outcome.record(irreducible_match,
                   "normal-form-irreducible rook monomials = shadow monomials, n=" +
                       std::to_string(n) + " field=" + format_field(field));
    bool generators_vanish = true;
    for (const Polynomial& g : ideal_generators(n, field))
        if (!normal_form(g).is_zero()) generators_vanish = false;
    outcome.record(generators_vanish, "normal_form annihilates every ideal generator");
    return outcome;
}

VerifyOutcome verify_hilbert(int n, const Limits& limits, int threads) {
    VerifyOutcome outcome;
    const auto series = hilbert_series(n, limits);
    const auto histogram = lis_histogram(n, limits, threads);
    bool reversed = series.size() == histogram.size();
    if (reversed)
        for (std::size_t d = 0; d < series.size(); ++d)
            if (series[d] != histogram[histogram.size() - 1 - d]) reversed = false;
    outcome.record(reversed, "hilbert_series equals reversed lis histogram, n=" + std::to_string(n));
    std::uint64_t total = 0;
    for (std::uint64_t c : series) total += c;
    outcome.record(total == factorial(n), "hilbert coefficients sum to n!");
    return outcome;
}

VerifyOutcome verify_graded(int n, const Limits& limits) {
    VerifyOutcome outcome;
    const CharacterTable table(n, limits);
    if (n <= 4) {
        bool match = true;
        for (int k = 0; k <= n - 1; ++k) {
            const GradedCharacter traced = graded_character(n, k, limits);
            const GradedCharacter expected = graded_character_expected(table, k);
            if (traced.values != expected.values) match = false;
        }
        outcome.record(match, "trace character equals sum of chi x chi at every class pair");
    } else {
        bool match = true;
        for (int k = 0; k <= n - 1; ++k) {
            const GradedCharacter expected = graded_character_expected(table, k);
            if (graded_character_identity_value(n, k, limits) != expected.values.back().back())
                match = false;
        }
        outcome.record(match, "graded dimensions match the character prediction");
    }
    return outcome;
}

VerifyOutcome verify_membership(int n, Field field, const Limits& limits) {
    VerifyOutcome outcome;
    std::mt19937 rng(20240601);
    bool consistent = true;
    const int max_degree = 3;
    std::vector<DegreeSliceOracle> oracles;
    for (int d = 0; d <= max_degree; ++d) oracles.emplace_back(n, d, field, limits);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f(n, field);
        const int terms = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < terms; ++t) {
            const int degree = static_cast<int>(rng() % (max_degree + 1));
            std::vector<std::pair<Cell, int>> factors;
            for (int e = 0; e < degree; ++e) {
                factors.emplace_back(Cell{1 + static_cast<int>(rng() % n),
                                          1 + static_cast<int>(rng() % n)},
                                     1);
            }
            const long coeff = static_cast<long>(rng() % 19) - 9;
            f.add_term(GridMonomial(n, factors), Scalar(coeff, field));
        }
        const Polynomial difference = f - normal_form(f);
        if (difference.is_zero()) continue;
        for (int d = 0; d <= max_degree && consistent; ++d) {
            const Polynomial component = difference.homogeneous_component(d);
            if (!component.is_zero() && !oracles[static_cast<std::size_t>(d)].contains(component))
                consistent = false;
        }
    }
    outcome.record(consistent,
                   "f - normal_form(f) passes the degree-slice membership oracle, n=" +
                       std::to_string(n));
    bool basis_free = true;
    for (const auto& [w, m] : standard_monomial_basis(n, limits)) {
        if (m.degree() > max_degree) continue;
        if (oracles[static_cast<std::size_t>(m.degree())].contains(
                Polynomial::monomial(n, m, field)))
            basis_free = false;
    }
    outcome.record(basis_free, "no shadow monomial lies in the ideal");
    return outcome;
}

int run_verify(const Options& opt, const std::string& which, int n) {
    const Limits limits = opt.limits();
    VerifyOutcome outcome;
    if (which == "rsk") outcome = verify_rsk(n, limits);
    else if (which == "basis") outcome = verify_basis(n, opt.field(), limits);
    else if (which == "hilbert") outcome = verify_hilbert(n, limits, opt.threads);
    else if (which == "graded") outcome = verify_graded(n, limits);
    else if (which == "membership") outcome = verify_membership(n, opt.field(), limits);
    else if (which == "novak-rhoades") {
        const ConjectureReport report = check_novak_rhoades(n, limits);
        emit(opt, opt.format == "json" ? report.to_json() + "\n"
                                       : "novak-rhoades n=" + std::to_string(n) + ": " +
                                             (report.holds ? "holds" : "violated") + "\n");
        return report.holds ? 0 : 3;
    } else if (which == "equivariant") {
        const ConjectureReport report = check_equivariant_conjecture(n, limits);
        emit(opt, opt.format == "json" ? report.to_json() + "\n"
                                       : "equivariant n=" + std::to_string(n) + ": " +
                                             (report.holds ? "holds" : "violated") + "\n");
        return report.holds ? 0 : 3;
    } else {
        throw std::invalid_argument("unknown verify target: " + which);
    }
    emit(opt, outcome.text);
    return outcome.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the permutation-matrix quotient ring"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--field", opt.field_text, "Coefficient field: 'rationals' or a prime p");
    app.add_option("--format", opt.format, "Output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("-o,--output", opt.output_path, "Write output to a file");
    app.add_option("--threads", opt.threads, "Worker threads for exhaustive enumerations");
    app.add_option("--enum-guard", opt.enum_guard, "Raise the n! enumeration guard");
    app.add_flag("--deep", opt.deep, "Allow the long-running conjecture scale (n <= 10)");

    std::string perm_text, shadow_arg, rook_arg, poly_text, a_subsets, b_subsets, csv_path,
        verify_target;
    int n = 0, k = 0;

    auto* rsk = app.add_subcommand("rsk", "Tableau pair of a permutation");
    rsk->add_option("permutation", perm_text)->required();

    auto* shadow = app.add_subcommand("shadow", "Iterated shadow sets of a permutation or placement");
    shadow->add_option("input", shadow_arg, "Permutation or rook-placement file")->required();

    auto* check = app.add_subcommand("check-rook", "Ballot criterion for a rook placement");
    check->add_option("input", rook_arg, "Permutation or rook-placement file")->required();

    auto* basis = app.add_subcommand("basis", "Standard monomial basis");
    basis->add_option("--n", n)->required();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    hilbert->add_option("--n", n)->required();

    auto* reduce = app.add_subcommand("reduce", "Normal form onto the shadow monomial basis");
    reduce->add_option("--n", n)->required();
    reduce->add_option("polynomial", poly_text, "Polynomial in text form");
    reduce->add_option("--a-st", a_subsets, "Reduce an injection sum a_{S,T}: \"S=2,4; T=1,3,4\"");
    reduce->add_option("--b-st", b_subsets, "Reduce an injection sum b_{S,T}");

    auto* local_basis = app.add_subcommand("local-basis", "Shadow junta basis of Loc_k");
    local_basis->add_option("--n", n)->required();
    local_basis->add_option("--k", k)->required();

    auto* localize = app.add_subcommand("localize", "Decompose a statistic over the junta basis");
    localize->add_option("--n", n)->required();
    localize->add_option("statistic", csv_path, "CSV file permutation,value")->required();
    auto* k_option = localize->add_option("--k", k, "Locality level (default: minimal)");

    auto* char_table = app.add_subcommand("char-table", "Character table of S_n");
    char_table->add_option("--n", n)->required();

    auto* alpha = app.add_subcommand("alpha", "Class function alpha_{n,k}");
    alpha->add_option("--n", n)->required();
    alpha->add_option("--k", k)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("target", verify_target,
                       "rsk|basis|hilbert|graded|membership|novak-rhoades|equivariant")
        ->required();
    verify->add_option("--n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rsk->parsed()) return run_rsk(opt, perm_text);
        if (shadow->parsed()) return run_shadow(opt, shadow_arg);
        if (check->parsed()) return run_check_rook(opt, rook_arg);
        if (basis->parsed()) return run_basis(opt, n);
        if (hilbert->parsed()) return run_hilbert(opt, n);
        if (reduce->parsed()) return run_reduce(opt, n, poly_text, a_subsets, b_subsets);
        if (local_basis->parsed()) return run_local_basis(opt, n, k);
        if (localize->parsed()) return run_localize(opt, n, csv_path, k, !k_option->empty());
        if (char_table->parsed()) return run_char_table(opt, n);
        if (alpha->parsed()) return run_alpha(opt, n, k);
        if (verify->parsed()) return run_verify(opt, verify_target, n);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
