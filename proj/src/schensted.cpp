#include "viennot/schensted.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <thread>

namespace viennot {

TableauPair insertion_schensted(const Permutation& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int step = 1; step <= w.n(); ++step) {
        int value = w(step);
        std::size_t row = 0;
        while (true) {
            if (row == p_rows.size()) {
                p_rows.emplace_back();
                q_rows.emplace_back();
            }
            auto& current = p_rows[row];
            const auto it = std::upper_bound(current.begin(), current.end(), value);
            if (it == current.end()) {
                current.push_back(value);
                q_rows[row].push_back(step);
                break;
            }
            std::swap(*it, value);  // bump the smallest entry larger than value
            ++row;
        }
    }
    return {Tableau(std::move(p_rows)), Tableau(std::move(q_rows))};
}

TableauPair viennot_schensted(const Permutation& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    RookPlacement current = RookPlacement::graph_of(w);
    while (!current.is_empty()) {
        const ShadowDiagram diagram = shadow_lines(current);
        std::vector<int> ys = diagram.horizontal_ray_ys();
        std::vector<int> xs = diagram.vertical_ray_xs();
        std::sort(ys.begin(), ys.end());
        std::sort(xs.begin(), xs.end());
        p_rows.push_back(std::move(ys));
        q_rows.push_back(std::move(xs));
        current = diagram.corner_set();
    }
    TableauPair pair{Tableau(std::move(p_rows)), Tableau(std::move(q_rows))};
    assert(pair.P.is_standard() && pair.Q.is_standard());
    return pair;
}

Permutation inverse_schensted(const TableauPair& pair) {
    if (!pair.P.is_standard() || !pair.Q.is_standard())
        throw std::invalid_argument("inverse_schensted: tableaux must be standard");
    if (pair.P.shape() != pair.Q.shape())
        throw std::invalid_argument("inverse_schensted: shape mismatch");
    std::vector<std::vector<int>> p_rows = pair.P.rows();
    const int n = pair.P.box_count();
    if (n == 0) throw std::invalid_argument("inverse_schensted: empty tableaux");

    // Location of each recording entry; entry k was created at step k.
    std::vector<std::size_t> row_of(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < pair.Q.rows().size(); ++r)
        for (int v : pair.Q.rows()[r]) row_of[static_cast<std::size_t>(v)] = r;

    std::vector<int> word(static_cast<std::size_t>(n));
    for (int step = n; step >= 1; --step) {
        std::size_t row = row_of[static_cast<std::size_t>(step)];
        int value = p_rows[row].back();
        p_rows[row].pop_back();
        while (row > 0) {
            --row;
            auto& above = p_rows[row];
            // Reverse bump: displace the largest entry smaller than value.
            const auto it = std::lower_bound(above.begin(), above.end(), value);
            assert(it != above.begin());
            std::swap(*(it - 1), value);
        }
        word[static_cast<std::size_t>(step - 1)] = value;
    }
    return Permutation(std::move(word));
}

int lis_dp(const Permutation& w) {
    std::vector<int> tails;  // tails[k] = least tail of an increasing run of length k+1
    for (int i = 1; i <= w.n(); ++i) {
        const int v = w(i);
        const auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end()) tails.push_back(v);
        else *it = v;
    }
    return static_cast<int>(tails.size());
}

int lis(const Permutation& w) {
    const int via_shape = static_cast<int>(shadow_lines(RookPlacement::graph_of(w)).lines.size());
    const int via_dp = lis_dp(w);
    if (via_shape != via_dp)
        throw std::logic_error("lis: shadow-line count disagrees with dynamic programming");
    return via_shape;
}

std::vector<std::uint64_t> lis_histogram(int n, const Limits& limits, int threads) {
    if (n < 1) throw std::invalid_argument("lis_histogram: n must be positive");
    if (n > limits.enumeration_n)
        throw ResourceLimitError("lis_histogram: n=" + std::to_string(n) +
                                 " exceeds enumeration guard " + std::to_string(limits.enumeration_n));
    threads = std::max(1, std::min(threads, 64));
    const std::uint64_t total = factorial(n);
    const auto worker_count = static_cast<std::uint64_t>(threads);
    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(threads), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& hist) {
        if (begin >= end) return;
        std::vector<int> word = Permutation::from_lex_rank(n, begin).word();
        for (std::uint64_t r = begin; r < end; ++r) {
            ++hist[static_cast<std::size_t>(lis(Permutation(word)) - 1)];
            std::next_permutation(word.begin(), word.end());
        }
    };
    if (threads == 1) {
        run_range(0, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t t = 0; t < worker_count; ++t) {
            const std::uint64_t begin = total * t / worker_count;
            const std::uint64_t end = total * (t + 1) / worker_count;
            pool.emplace_back(run_range, begin, end, std::ref(partial[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n), 0);
    for (const auto& hist : partial)
        for (std::size_t k = 0; k < hist.size(); ++k) histogram[k] += hist[k];
    return histogram;
}

Permutation shadow_set_to_permutation(const RookPlacement& r) {
    const BallotResult ballot = ballot_check(r);
    if (!ballot.is_shadow_set)
        throw std::invalid_argument(
            "shadow_set_to_permutation: placement fails the ballot criterion");
    const int n = r.n();
    // Iterated shadows of the placement give the partial pair (P', Q'); the
    // missing coordinates fill in the first rows.
    std::vector<std::vector<int>> p_rows(1), q_rows(1);
    std::set<int> used_y, used_x;
    for (const Cell& c : r.cells()) {
        used_x.insert(c.i);
        used_y.insert(c.j);
    }
    for (int v = 1; v <= n; ++v) {
        if (!used_y.count(v)) p_rows[0].push_back(v);
        if (!used_x.count(v)) q_rows[0].push_back(v);
    }
    RookPlacement current = r;
    while (!current.is_empty()) {
        const ShadowDiagram diagram = shadow_lines(current);
        std::vector<int> ys = diagram.horizontal_ray_ys();
        std::vector<int> xs = diagram.vertical_ray_xs();
        std::sort(ys.begin(), ys.end());
        std::sort(xs.begin(), xs.end());
        p_rows.push_back(std::move(ys));
        q_rows.push_back(std::move(xs));
        current = diagram.corner_set();
    }
    return inverse_schensted({Tableau(std::move(p_rows)), Tableau(std::move(q_rows))});
}

}  // namespace viennot
