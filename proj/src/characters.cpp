#include "viennot/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace viennot {

ClassFunction::ClassFunction(int n, std::vector<mpq_class> values)
    : n_(n), values_(std::move(values)) {
    if (values_.size() != partitions(n).size())
        throw std::invalid_argument("class function: one value per cycle type required");
}

ClassFunction ClassFunction::zero(int n) {
    return ClassFunction(n, std::vector<mpq_class>(partitions(n).size(), mpq_class(0)));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    if (n_ != o.n_) throw std::invalid_argument("class function: size mismatch");
    std::vector<mpq_class> out = values_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += o.values_[k];
    return ClassFunction(n_, std::move(out));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    if (n_ != o.n_) throw std::invalid_argument("class function: size mismatch");
    std::vector<mpq_class> out = values_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= o.values_[k];
    return ClassFunction(n_, std::move(out));
}

ClassFunction ClassFunction::scaled(const mpq_class& c) const {
    std::vector<mpq_class> out = values_;
    for (auto& v : out) v *= c;
    return ClassFunction(n_, std::move(out));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return n_ == o.n_ && values_ == o.values_;
}

ClassFunction kronecker(const ClassFunction& a, const ClassFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("kronecker: size mismatch");
    std::vector<mpq_class> out = a.values();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= b.values()[k];
    return ClassFunction(a.n(), std::move(out));
}

namespace {

// Murnaghan-Nakayama on beta numbers: removing a border strip of length t
// replaces one beta number b by b - t; the strip height is the number of
// beta numbers strictly between them.
struct MnContext {
    std::vector<int> mu;
    std::map<std::pair<std::vector<int>, std::size_t>, mpz_class> memo;

    mpz_class eval(std::vector<int> beta, std::size_t pos) {
        if (pos == mu.size()) return 1;
        std::sort(beta.rbegin(), beta.rend());
        const auto key = std::make_pair(beta, pos);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int t = mu[pos];
        mpz_class total = 0;
        for (std::size_t k = 0; k < beta.size(); ++k) {
            const int target = beta[k] - t;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int height = 0;
            for (int other : beta)
                if (target < other && other < beta[k]) ++height;
            std::vector<int> next = beta;
            next[k] = target;
            const mpz_class sub = eval(std::move(next), pos + 1);
            if (height % 2 == 0) total += sub;
            else total -= sub;
        }
        memo.emplace(key, total);
        return total;
    }
};

}  // namespace

CharacterTable::CharacterTable(int n, const Limits& limits) : n_(n) {
    if (n < 1) throw std::invalid_argument("character table: n must be positive");
    if (n > limits.character_table_n)
        throw ResourceLimitError("character_table: n=" + std::to_string(n) + " exceeds guard " +
                                 std::to_string(limits.character_table_n));
    shapes_ = partitions(n);
    sizes_.reserve(shapes_.size());
    for (const Partition& type : shapes_) sizes_.push_back(class_size(type));

    table_.assign(shapes_.size(), std::vector<mpz_class>(shapes_.size()));
    for (std::size_t col = 0; col < shapes_.size(); ++col) {
        MnContext context;
        context.mu = shapes_[col].parts();
        for (std::size_t row = 0; row < shapes_.size(); ++row) {
            const auto& parts = shapes_[row].parts();
            const int k = static_cast<int>(parts.size());
            std::vector<int> beta(parts.size());
            for (int i = 0; i < k; ++i)
                beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (k - 1 - i);
            table_[row][col] = context.eval(std::move(beta), 0);
        }
    }

    // Identity column must be the hook-length dimensions.
    const std::size_t id = index_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    for (std::size_t row = 0; row < shapes_.size(); ++row)
        if (table_[row][id] != hook_dimension(shapes_[row]))
            throw std::logic_error("character table: identity column disagrees with hook lengths");
    // Row orthogonality with class-size weights.
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n));
    for (std::size_t a = 0; a < shapes_.size(); ++a)
        for (std::size_t b = a; b < shapes_.size(); ++b) {
            mpz_class acc = 0;
            for (std::size_t c = 0; c < shapes_.size(); ++c)
                acc += sizes_[c] * table_[a][c] * table_[b][c];
            if (acc != (a == b ? order : mpz_class(0)))
                throw std::logic_error("character table: row orthogonality failed");
        }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    const auto it = std::find(shapes_.begin(), shapes_.end(), p);
    if (it == shapes_.end()) throw std::invalid_argument("character table: unknown partition");
    return static_cast<std::size_t>(it - shapes_.begin());
}

ClassFunction CharacterTable::irreducible(std::size_t shape_index) const {
    std::vector<mpq_class> values;
    values.reserve(shapes_.size());
    for (std::size_t c = 0; c < shapes_.size(); ++c) values.emplace_back(table_[shape_index][c]);
    return ClassFunction(n_, std::move(values));
}

mpq_class CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
    if (a.n() != n_ || b.n() != n_) throw std::invalid_argument("inner product: size mismatch");
    mpq_class acc = 0;
    for (std::size_t c = 0; c < shapes_.size(); ++c)
        acc += mpq_class(sizes_[c]) * a.values()[c] * b.values()[c];
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n_));
    return acc / mpq_class(order);
}

std::vector<mpq_class> CharacterTable::decompose(const ClassFunction& f) const {
    std::vector<mpq_class> multiplicities;
    multiplicities.reserve(shapes_.size());
    for (std::size_t s = 0; s < shapes_.size(); ++s)
        multiplicities.push_back(inner_product(f, irreducible(s)));
    return multiplicities;
}

ClassFunction CharacterTable::alpha(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("alpha: k must satisfy 1 <= k <= n");
    ClassFunction total = ClassFunction::zero(n_);
    for (std::size_t s = 0; s < shapes_.size(); ++s) {
        if (shapes_[s].first_part() != k) continue;
        total = total + irreducible(s).scaled(mpq_class(hook_dimension(shapes_[s])));
    }
    return total;
}

mpz_class CharacterTable::kronecker_coefficient(const Partition& a, const Partition& b,
                                                const Partition& c) const {
    const std::size_t ia = index_of(a), ib = index_of(b), ic = index_of(c);
    mpz_class acc = 0;
    for (std::size_t cls = 0; cls < shapes_.size(); ++cls)
        acc += sizes_[cls] * table_[ia][cls] * table_[ib][cls] * table_[ic][cls];
    mpz_class order;
    mpz_fac_ui(order.get_mpz_t(), static_cast<unsigned long>(n_));
    mpz_class result, remainder;
    mpz_fdiv_qr(result.get_mpz_t(), remainder.get_mpz_t(), acc.get_mpz_t(), order.get_mpz_t());
    if (remainder != 0)
        throw std::logic_error("kronecker coefficient: inner product is not an integer");
    return result;
}

}  // namespace viennot
