#include "powsum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace powsum {

namespace {

mpq_class make_canonical(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : value_(make_canonical(num, den)) {}

Rational::Rational(long num, long den) : value_(make_canonical(Integer(num), Integer(den))) {}

Rational Rational::normalized(const Integer& num, const Integer& den) { return Rational(num, den); }

bool Rational::is_canonical() const {
    if (value_.get_den() <= 0) {
        return false;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::pow(const Rational& base, unsigned long exponent) {
    // num and den are coprime, so their powers are as well.
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
    Rational r;
    mpq_set_num(r.value_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.value_.get_mpq_t(), den.get_mpz_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace powsum
