#include "viennot/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "viennot/shadow.hpp"
#include "viennot/text.hpp"

namespace viennot {

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial g) {
    for (const Polynomial& have : out)
        if (have == g) return;
    out.push_back(std::move(g));
}

Polynomial line_sum(int n, Field field, bool row, int index) {
    Polynomial g(n, field);
    for (int k = 1; k <= n; ++k) {
        const Cell c = row ? Cell{index, k} : Cell{k, index};
        g.add_term(GridMonomial::variable(n, c), Scalar::one(field));
    }
    return g;
}

}  // namespace

std::vector<Polynomial> ideal_generators(int n, Field field) {
    if (n < 1) throw std::invalid_argument("ideal_generators: n must be positive");
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int j2 = j; j2 <= n; ++j2) {
                GridMonomial m = GridMonomial::variable(n, {i, j}).times(
                    GridMonomial::variable(n, {i, j2}));
                push_unique(out, Polynomial::monomial(n, m, field));
            }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int i2 = i; i2 <= n; ++i2) {
                GridMonomial m = GridMonomial::variable(n, {i, j}).times(
                    GridMonomial::variable(n, {i2, j}));
                push_unique(out, Polynomial::monomial(n, m, field));
            }
    for (int i = 1; i <= n; ++i) push_unique(out, line_sum(n, field, true, i));
    for (int j = 1; j <= n; ++j) push_unique(out, line_sum(n, field, false, j));
    return out;
}

std::vector<Polynomial> point_ideal_generators(int n, Field field) {
    if (n < 1) throw std::invalid_argument("point_ideal_generators: n must be positive");
    std::vector<Polynomial> out;
    const Scalar one = Scalar::one(field);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial g(n, field);
            g.add_term(GridMonomial(n, {{Cell{i, j}, 2}}), one);
            g.add_term(GridMonomial::variable(n, {i, j}), -one);
            out.push_back(std::move(g));
        }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int i2 = i + 1; i2 <= n; ++i2)
                out.push_back(Polynomial::monomial(
                    n, GridMonomial::variable(n, {i, j}).times(GridMonomial::variable(n, {i2, j})),
                    field));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int j2 = j + 1; j2 <= n; ++j2)
                out.push_back(Polynomial::monomial(
                    n, GridMonomial::variable(n, {i, j}).times(GridMonomial::variable(n, {i, j2})),
                    field));
    for (int i = 1; i <= n; ++i) {
        Polynomial g = line_sum(n, field, true, i);
        g.add_term(GridMonomial(n), -one);
        out.push_back(std::move(g));
    }
    for (int j = 1; j <= n; ++j) {
        Polynomial g = line_sum(n, field, false, j);
        g.add_term(GridMonomial(n), -one);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

void check_subset(const std::vector<int>& s, int n, const char* name) {
    std::set<int> seen;
    for (int v : s) {
        if (v < 1 || v > n) throw std::invalid_argument(std::string(name) + ": element out of [n]");
        if (!seen.insert(v).second)
            throw std::invalid_argument(std::string(name) + ": repeated element");
    }
}

}  // namespace

Polynomial injection_sum_a(const std::vector<int>& S, const std::vector<int>& T, int n,
                           Field field) {
    check_subset(S, n, "S");
    check_subset(T, n, "T");
    std::vector<int> s_sorted = S, t_sorted = T;
    std::sort(s_sorted.begin(), s_sorted.end());
    std::sort(t_sorted.begin(), t_sorted.end());
    Polynomial out(n, field);
    if (s_sorted.size() > t_sorted.size()) return out;
    std::vector<char> used(t_sorted.size(), 0);
    std::vector<std::pair<Cell, int>> factors;
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
        if (idx == s_sorted.size()) {
            out.add_term(GridMonomial(n, factors), Scalar::one(field));
            return;
        }
        for (std::size_t t = 0; t < t_sorted.size(); ++t) {
            if (used[t]) continue;
            used[t] = 1;
            factors.emplace_back(Cell{s_sorted[idx], t_sorted[t]}, 1);
            self(self, idx + 1);
            factors.pop_back();
            used[t] = 0;
        }
    };
    recurse(recurse, 0);
    return out;
}

Polynomial injection_sum_b(const std::vector<int>& S, const std::vector<int>& T, int n,
                           Field field) {
    return injection_sum_a(S, T, n, field).transpose();
}

namespace {

// Marching rewrite for a placement whose x-sequence has a positive prefix.
MarchingRewrite marching_rewrite_x_case(const RookPlacement& r, const BallotResult& ballot,
                                        Field field) {
    const int n = r.n();
    const ShadowDiagram diagram = shadow_lines(r);

    // Minimal a with x_1 + ... + x_a > 0; minimality forces x_a = +1.
    int a = 0, sum = 0;
    for (int i = 1; i <= n; ++i) {
        sum += ballot.x_seq[static_cast<std::size_t>(i - 1)];
        if (sum > 0) {
            a = i;
            break;
        }
    }
    if (a == 0) throw std::logic_error("marching_rewrite: x-sequence has no positive prefix");
    if (ballot.x_seq[static_cast<std::size_t>(a - 1)] != 1)
        throw std::logic_error("marching_rewrite: minimal positive prefix not at a ray");

    std::size_t p = diagram.lines.size();
    for (std::size_t idx = 0; idx < diagram.lines.size(); ++idx)
        if (diagram.lines[idx].vertical_ray_x == a) {
            p = idx;
            break;
        }
    if (p == diagram.lines.size())
        throw std::logic_error("marching_rewrite: no line has a vertical ray at x = a");

    // March: start at the first cell of line p, then repeatedly march west to
    // the previous line's vertical segment covering the current height and
    // south to the cell at its bottom.
    std::vector<Cell> visited(p + 1, Cell{});
    visited[p] = diagram.lines[p].cells.front();
    for (std::size_t q = p; q > 0; --q) {
        const Cell from = visited[q];
        const auto& cells = diagram.lines[q - 1].cells;
        const Cell* best = nullptr;
        for (const Cell& c : cells)
            if (c.j < from.j && (best == nullptr || c.j > best->j)) best = &c;
        if (best == nullptr || best->i >= from.i)
            throw std::logic_error("marching_rewrite: no vertical segment west of the march");
        visited[q - 1] = *best;
    }

    std::vector<Cell> remainder_cells;
    for (const Cell& c : r.cells())
        if (std::find(visited.begin(), visited.end(), c) == visited.end())
            remainder_cells.push_back(c);
    RookPlacement remainder(n, remainder_cells);

    // T = {i_1 < ... < i_p} together with everything above i_p, minus the
    // rows of the remainder; S = the visited columns.
    std::set<int> t_set;
    for (const Cell& c : visited) t_set.insert(c.i);
    for (int i = visited.back().i + 1; i <= n; ++i) t_set.insert(i);
    for (const Cell& c : remainder_cells) t_set.erase(c.i);
    std::vector<int> T(t_set.begin(), t_set.end());
    std::vector<int> S;
    S.reserve(visited.size());
    for (const Cell& c : visited) S.push_back(c.j);
    std::sort(S.begin(), S.end());

    // |S| + |T| must exceed the reduced grid size n - |R'|.
    const int reduced_n = n - remainder.size();
    if (static_cast<int>(S.size() + T.size()) <= reduced_n)
        throw std::logic_error("marching_rewrite: |S| + |T| does not exceed the reduced grid");

    MarchingRewrite result{
        injection_sum_b(S, T, n, field).times_monomial(GridMonomial::of_placement(remainder)),
        std::move(visited),
        std::move(remainder),
        std::move(T),
        std::move(S),
        false};

    const auto [lead, coeff] = result.polynomial.leading_term();
    if (!(lead == GridMonomial::of_placement(r)) || !(coeff == Scalar::one(field)))
        throw std::logic_error("marching_rewrite: leading term is not m(R)");
    return result;
}

}  // namespace

MarchingRewrite marching_rewrite(const RookPlacement& r, Field field) {
    const BallotResult ballot = ballot_check(r);
    if (ballot.is_shadow_set)
        throw std::invalid_argument("marching_rewrite: placement passes the ballot criterion");
    auto has_positive_prefix = [](const std::vector<int>& seq) {
        int sum = 0;
        for (int v : seq) {
            sum += v;
            if (sum > 0) return true;
        }
        return false;
    };
    // Deterministic preference: the x-sequence case whenever it applies; the
    // y-sequence case is its image under transposition.
    if (has_positive_prefix(ballot.x_seq))
        return marching_rewrite_x_case(r, ballot, field);
    const RookPlacement flipped = r.transpose();
    MarchingRewrite result = marching_rewrite_x_case(flipped, ballot_check(flipped), field);
    result.polynomial = result.polynomial.transpose();
    for (Cell& c : result.visited) c = Cell{c.j, c.i};
    result.remainder = result.remainder.transpose();
    result.used_transpose = true;
    const auto [lead, coeff] = result.polynomial.leading_term();
    if (!(lead == GridMonomial::of_placement(r)))
        throw std::logic_error("marching_rewrite: transposed leading term is not m(R)");
    return result;
}

std::pair<std::vector<int>, std::vector<int>> parse_subset_pair(std::string_view text) {
    TextCursor cur(text);
    auto read_side = [&](char label) {
        cur.skip_ws();
        cur.expect(label, "subset label");
        cur.skip_ws();
        cur.expect('=', "subset");
        std::vector<int> side;
        cur.skip_ws();
        if (cur.peek() != ';' && !cur.at_end()) {
            side.push_back(cur.read_positive_int("subset element"));
            cur.skip_ws();
            while (cur.try_consume(',')) {
                side.push_back(cur.read_positive_int("subset element"));
                cur.skip_ws();
            }
        }
        return side;
    };
    std::vector<int> s = read_side('S');
    cur.skip_ws();
    cur.expect(';', "between subsets");
    std::vector<int> t = read_side('T');
    cur.expect_end("subset pair");
    return {std::move(s), std::move(t)};
}

Polynomial normal_form(const Polynomial& f) {
    const int n = f.n();
    const Field field = f.field();
    // Terms whose monomial repeats a row or column are multiples of quadratic
    // generators and vanish modulo I_n; the survivors are rook monomials.
    Polynomial work(n, field);
    for (const auto& [m, c] : f.terms())
        if (m.is_rook_monomial()) work.add_term(m, c);

    Polynomial reduced(n, field);
    // The largest remaining monomial is only rewritten once: rewrites emit
    // strictly Toeplitz-smaller rook monomials, so processing the term map
    // from the top makes each monomial final when reached.
    while (!work.is_zero()) {
        const auto [mono, coeff] = work.leading_term();
        const RookPlacement support = mono.support_placement();
        if (ballot_check(support).is_shadow_set) {
            reduced.add_term(mono, coeff);
            work.add_term(mono, -coeff);
            continue;
        }
        const MarchingRewrite step = marching_rewrite(support, field);
        work = work - step.polynomial.scaled(coeff);
    }
    return reduced;
}

}  // namespace viennot
