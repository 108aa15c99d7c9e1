#pragma once

#include <map>
#include <vector>

#include "viennot/limits.hpp"
#include "viennot/partition.hpp"

namespace viennot {

// Values of a class function on S_n, indexed by the canonical partitions(n)
// order of cycle types.  Exact rationals; character values are integers.
class ClassFunction {
  public:
    ClassFunction(int n, std::vector<mpq_class> values);
    static ClassFunction zero(int n);

    int n() const { return n_; }
    const std::vector<mpq_class>& values() const { return values_; }
    const mpq_class& at_class(std::size_t index) const { return values_[index]; }
    // Value at the identity class (cycle type 1^n, last in canonical order).
    const mpq_class& at_identity() const { return values_.back(); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scaled(const mpq_class& c) const;
    bool operator==(const ClassFunction& o) const;

  private:
    int n_;
    std::vector<mpq_class> values_;
};

// Pointwise product: the character of the diagonal tensor product.
ClassFunction kronecker(const ClassFunction& a, const ClassFunction& b);

// Full character table of S_n by the Murnaghan-Nakayama recursion, with
// class sizes; orthogonality is asserted at construction.
class CharacterTable {
  public:
    explicit CharacterTable(int n, const Limits& limits = {});

    int n() const { return n_; }
    const std::vector<Partition>& shapes() const { return shapes_; }      // rows
    const std::vector<Partition>& classes() const { return shapes_; }     // columns
    const std::vector<mpz_class>& class_sizes() const { return sizes_; }

    std::size_t index_of(const Partition& p) const;
    const mpz_class& value(std::size_t shape_index, std::size_t class_index) const {
        return table_[shape_index][class_index];
    }
    ClassFunction irreducible(std::size_t shape_index) const;

    // <a, b> = (1/n!) sum over classes of |C| a b.
    mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) const;
    // Multiplicities over the irreducible characters, in shapes() order.
    std::vector<mpq_class> decompose(const ClassFunction& f) const;

    // alpha_{n,k} = sum over shapes with first row k of f^lambda chi^lambda.
    ClassFunction alpha(int k) const;

    // <chi^a * chi^b, chi^c>, totally symmetric.
    mpz_class kronecker_coefficient(const Partition& a, const Partition& b,
                                    const Partition& c) const;

  private:
    int n_;
    std::vector<Partition> shapes_;
    std::vector<mpz_class> sizes_;
    std::vector<std::vector<mpz_class>> table_;
};

}  // namespace viennot
