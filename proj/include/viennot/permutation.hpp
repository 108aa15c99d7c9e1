#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "viennot/limits.hpp"

namespace viennot {

// A permutation of [n] in one-line notation.  Values are 1-based throughout.
class Permutation {
  public:
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation reversal(int n);

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    // (this o other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;

    // Lexicographic rank among all one-line words of S_n, starting at 0.
    std::uint64_t lex_rank() const;
    static Permutation from_lex_rank(int n, std::uint64_t rank);

    // Cycle lengths, weakly decreasing.
    std::vector<int> cycle_type() const;

    bool operator==(const Permutation& other) const = default;
    auto operator<=>(const Permutation& other) const = default;

  private:
    std::vector<int> word_;
};

// Visits S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          const Limits& limits = {});

std::string format_permutation(const Permutation& w);
Permutation parse_permutation(std::string_view text);

}  // namespace viennot
