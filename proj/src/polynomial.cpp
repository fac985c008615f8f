#include "powsum/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace powsum {

PowerSumPoly::PowerSumPoly(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0) {
        throw std::invalid_argument("PowerSumPoly: negative order");
    }
    if (coeffs_.size() != static_cast<size_t>(order_) + 2) {
        throw std::invalid_argument("PowerSumPoly: coefficient list must cover exponents 0..order+1");
    }
    if (!coeffs_.front().is_zero()) {
        throw std::invalid_argument("PowerSumPoly: constant term must be zero");
    }
    if (coeffs_.back().sign() <= 0) {
        throw std::invalid_argument("PowerSumPoly: leading coefficient must be positive");
    }
}

const Rational& PowerSumPoly::coefficient(int exponent) const {
    if (exponent < 0 || exponent > order_ + 1) {
        throw std::invalid_argument("PowerSumPoly: exponent out of range");
    }
    return coeffs_[static_cast<size_t>(exponent)];
}

Rational PowerSumPoly::eval(const Rational& n) const {
    Rational acc;  // Horner, top exponent down to the zero constant slot
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * n + *it;
    }
    return acc;
}

}  // namespace powsum
