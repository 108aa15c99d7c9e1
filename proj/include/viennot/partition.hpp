#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "viennot/permutation.hpp"

namespace viennot {

// Weakly decreasing positive parts.
class Partition {
  public:
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int n_;
};

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

// f^lambda by the hook length formula.
mpz_class hook_dimension(const Partition& shape);

// Size of the conjugacy class with the given cycle type.
mpz_class class_size(const Partition& cycle_type);

// +1 or -1: the sign of any permutation with this cycle type.
int cycle_type_sign(const Partition& cycle_type);

Partition cycle_type_of(const Permutation& w);

// Cycles of decreasing length filled with consecutive integers.
Permutation canonical_of_cycle_type(const Partition& type);

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace viennot
