#ifndef POWSUM_POLYNOMIAL_HPP
#define POWSUM_POLYNOMIAL_HPP

#include <vector>

#include "powsum/rational.hpp"

namespace powsum {

/// The degree-(m+1) polynomial giving the order-m power sum. Coefficients are
/// stored dense and ascending so that index == exponent; the constant slot is
/// pinned at zero and the leading coefficient is strictly positive.
class PowerSumPoly {
public:
    /// coeffs[e] is the coefficient of n^e, e = 0..order+1.
    PowerSumPoly(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    int degree() const { return order_ + 1; }

    const Rational& coefficient(int exponent) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& n) const;

    friend bool operator==(const PowerSumPoly& a, const PowerSumPoly& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const PowerSumPoly& a, const PowerSumPoly& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> coeffs_;
};

}  // namespace powsum

#endif
