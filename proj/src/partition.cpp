#include "viennot/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "viennot/text.hpp"

namespace viennot {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    n_ = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition: parts must weakly decrease");
        n_ += parts_[k];
    }
    if (parts_.empty()) throw std::invalid_argument("partition: empty");
}

Partition Partition::conjugate() const {
    std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_)
        for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

mpz_class hook_dimension(const Partition& shape) {
    const auto& parts = shape.parts();
    const Partition conj = shape.conjugate();
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(shape.n()));
    mpz_class hooks = 1;
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (int c = 0; c < parts[r]; ++c) {
            const int arm = parts[r] - c - 1;
            const int leg = conj.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= arm + leg + 1;
        }
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), hooks.get_mpz_t());
    return result;
}

mpz_class class_size(const Partition& cycle_type) {
    // n! / z_mu with z_mu = prod k^{m_k} m_k!.
    mpz_class z = 1;
    const auto& parts = cycle_type.parts();
    std::size_t k = 0;
    while (k < parts.size()) {
        std::size_t same = k;
        while (same < parts.size() && parts[same] == parts[k]) ++same;
        const auto multiplicity = static_cast<unsigned long>(same - k);
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[k]), multiplicity);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), multiplicity);
        z *= power * fact;
        k = same;
    }
    mpz_class total;
    mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(cycle_type.n()));
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), total.get_mpz_t(), z.get_mpz_t());
    return result;
}

int cycle_type_sign(const Partition& cycle_type) {
    int even_cycles = 0;
    for (int part : cycle_type.parts())
        if (part % 2 == 0) ++even_cycles;
    return even_cycles % 2 == 0 ? 1 : -1;
}

Partition cycle_type_of(const Permutation& w) { return Partition(w.cycle_type()); }

Permutation canonical_of_cycle_type(const Partition& type) {
    std::vector<int> word(static_cast<std::size_t>(type.n()));
    int next = 1;
    for (int len : type.parts()) {
        // cycle (next, next+1, ..., next+len-1)
        for (int k = 0; k < len; ++k)
            word[static_cast<std::size_t>(next + k - 1)] = k + 1 == len ? next : next + k + 1;
        next += len;
    }
    return Permutation(std::move(word));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t k = 0; k < p.parts().size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(p.parts()[k]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    TextCursor cur(text);
    std::vector<int> parts;
    parts.push_back(cur.read_positive_int("partition part"));
    cur.skip_ws();
    while (cur.try_consume(',')) {
        parts.push_back(cur.read_positive_int("partition part"));
        cur.skip_ws();
    }
    cur.expect_end("partition");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace viennot
