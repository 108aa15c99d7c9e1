#include "viennot/scalar.hpp"

#include <stdexcept>

#include "viennot/text.hpp"

namespace viennot {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw std::invalid_argument("scalar: mixed coefficient fields");
}

}  // namespace

Field Field::prime(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("field: modulus must be prime");
    return Field{p};
}

std::string format_field(const Field& f) {
    return f.is_rational() ? "rationals" : "F" + std::to_string(f.modulus);
}

Scalar::Scalar(long v, Field f) : field_(f), value_(v) { reduce(); }

Scalar::Scalar(mpz_class v, Field f) : field_(f), value_(std::move(v)) { reduce(); }

Scalar::Scalar(mpq_class v, Field f) : field_(f), value_(std::move(v)) {
    value_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (field_.is_rational()) return;
    const mpz_class p(field_.modulus);
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    mpz_class den_mod = den % p;
    if (den_mod < 0) den_mod += p;
    if (den_mod == 0) throw std::invalid_argument("scalar: denominator divisible by the modulus");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("scalar: denominator not invertible");
    mpz_class res = (num % p) * inv % p;
    if (res < 0) res += p;
    value_ = mpq_class(res);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_), field_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(field_, o.field_);
    return Scalar(mpq_class(value_ + o.value_), field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(field_, o.field_);
    return Scalar(mpq_class(value_ - o.value_), field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(field_, o.field_);
    return Scalar(mpq_class(value_ * o.value_), field_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(field_, o.field_);
    if (o.is_zero()) throw std::invalid_argument("scalar: division by zero");
    if (field_.is_rational()) return Scalar(mpq_class(value_ / o.value_), field_);
    const mpz_class p(field_.modulus);
    mpz_class inv;
    mpz_class d = o.value_.get_num();
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(value_.get_num() * inv), field_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(field_, o.field_);
    return value_ == o.value_;
}

std::string format_scalar(const Scalar& s) { return s.value().get_str(); }

Scalar parse_scalar(std::string_view text, Field f) {
    TextCursor cur(text);
    cur.skip_ws();
    bool negative = cur.try_consume('-');
    std::string num = cur.read_digits("numerator");
    mpz_class numerator(num);
    if (negative) numerator = -numerator;
    cur.skip_ws();
    if (cur.peek() == '.' || cur.peek() == 'e' || cur.peek() == 'E')
        cur.fail("floating-point values are rejected; use exact rationals p/q");
    if (cur.try_consume('/')) {
        std::string den = cur.read_digits("denominator");
        mpz_class denominator(den);
        if (denominator == 0) cur.fail("zero denominator");
        cur.expect_end("scalar");
        return Scalar(mpq_class(numerator, denominator), f);
    }
    cur.expect_end("scalar");
    return Scalar(std::move(numerator), f);
}

}  // namespace viennot
