#include "viennot/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "viennot/text.hpp"

namespace viennot {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    if (n == 0) throw std::invalid_argument("permutation: empty word");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation: value out of range [1,n]");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation: repeated value");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= n(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(w));
}

std::uint64_t Permutation::lex_rank() const {
    // Lehmer code with factorial weights.
    const int len = n();
    std::uint64_t rank = 0;
    for (int i = 0; i < len; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < len; ++j)
            if (word_[static_cast<std::size_t>(j)] < word_[static_cast<std::size_t>(i)]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial(len - 1 - i);
    }
    return rank;
}

Permutation Permutation::from_lex_rank(int n, std::uint64_t rank) {
    if (rank >= factorial(n)) throw std::invalid_argument("from_lex_rank: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        w.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<char> visited(word_.size() + 1, 0);
    std::vector<int> lengths;
    for (int start = 1; start <= n(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        int cur = start;
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = 1;
            cur = (*this)(cur);
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be positive");
    if (n > limits.enumeration_n)
        throw ResourceLimitError("for_each_permutation: n=" + std::to_string(n) +
                                 " exceeds enumeration guard " + std::to_string(limits.enumeration_n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

std::string format_permutation(const Permutation& w) {
    std::string out;
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    TextCursor cur(text);
    std::vector<int> word;
    word.push_back(cur.read_positive_int("permutation value"));
    cur.skip_ws();
    while (cur.try_consume(',')) {
        word.push_back(cur.read_positive_int("permutation value"));
        cur.skip_ws();
    }
    cur.expect_end("permutation");
    try {
        return Permutation(std::move(word));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace viennot
