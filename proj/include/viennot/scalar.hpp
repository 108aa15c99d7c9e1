#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace viennot {

// Coefficient field of a computation: exact rationals (modulus 0) or a prime
// field F_p.  No floating point exists anywhere in the library.
struct Field {
    unsigned modulus = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(unsigned p);

    bool is_rational() const { return modulus == 0; }
    bool operator==(const Field&) const = default;
};

std::string format_field(const Field& f);

// An element of a Field.  Rational values are kept canonical (gcd 1, positive
// denominator); prime-field values are residues in [0, p).
class Scalar {
  public:
    Scalar() : field_{0}, value_(0) {}
    Scalar(long v, Field f);
    Scalar(mpz_class v, Field f);
    Scalar(mpq_class v, Field f);

    static Scalar zero(Field f) { return Scalar(0L, f); }
    static Scalar one(Field f) { return Scalar(1L, f); }

    const Field& field() const { return field_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;

  private:
    void reduce();
    Field field_;
    mpq_class value_;
};

// "p/q" with q > 0 and gcd 1; plain integers print without the slash.
std::string format_scalar(const Scalar& s);
// Accepts "p", "-p", "p/q"; rejects floating-point syntax.
Scalar parse_scalar(std::string_view text, Field f);

}  // namespace viennot
