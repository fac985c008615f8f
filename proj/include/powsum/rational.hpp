#ifndef POWSUM_RATIONAL_HPP
#define POWSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace powsum {

using Integer = mpz_class;

/// Exact rational scalar. Always held in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // implicit: integer scalars mix freely
    Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Canonical reduced fraction num/den; the sign lives on the numerator.
    /// Throws std::domain_error when den == 0.
    static Rational normalized(const Integer& num, const Integer& den);

    Integer numerator() const { return Integer(value_.get_num()); }
    Integer denominator() const { return Integer(value_.get_den()); }

    bool is_zero() const { return mpq_sgn(value_.get_mpq_t()) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return mpq_sgn(value_.get_mpq_t()); }

    /// "p" when the denominator is 1, otherwise "p/q" with q > 0.
    std::string str() const { return value_.get_str(); }

    /// True when the stored fraction is reduced with a positive denominator.
    bool is_canonical() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws std::domain_error on rhs == 0

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    static Rational pow(const Rational& base, unsigned long exponent);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace powsum

#endif
