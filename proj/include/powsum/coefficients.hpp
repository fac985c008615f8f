#ifndef POWSUM_COEFFICIENTS_HPP
#define POWSUM_COEFFICIENTS_HPP

#include <vector>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"

namespace powsum {

/// One row of the power-sum coefficient triangle: the coefficients of the
/// order-m polynomial, indexed by exponent k = 1..m+1.
class CoeffRow {
public:
    CoeffRow(int order, std::vector<Rational> entries);

    int order() const { return order_; }

    /// Coefficient of n^k, k = 1..order+1.
    const Rational& a(int k) const;

    /// Offset indexing: distance x from the n^order slot, x = -1..order-1.
    /// x = -1 is the leading term.
    const Rational& a_offset(int x) const { return a(order_ - x); }

    PowerSumPoly to_poly() const;

    friend bool operator==(const CoeffRow& a, const CoeffRow& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const CoeffRow& a, const CoeffRow& b) { return !(a == b); }

private:
    int order_;
    std::vector<Rational> entries_;  // entries_[k-1] = coefficient of n^k
};

/// Triangle of coefficient rows for orders 0..max_order. Row m depends only
/// on rows < m; a finished table is immutable and freely shareable.
class CoeffTable {
public:
    /// Table holding only the seed row {n -> 1}.
    static CoeffTable base();

    int max_order() const { return static_cast<int>(rows_.size()) - 1; }
    bool has_row(int m) const { return m >= 0 && m <= max_order(); }
    const CoeffRow& row(int m) const;

    /// Appends a row; its order must be max_order() + 1.
    void append(CoeffRow row);

private:
    std::vector<CoeffRow> rows_;
};

/// Binomial-weighted combination of row-k coefficients, defined for
/// 0 <= j <= k+1. The j = 0 variant drops the (absent) constant slot.
Rational alpha(const CoeffTable& table, int k, int j);

/// Row m from rows 0..m-1 via the strong recursion. The leading and k = 1
/// entries use their dedicated formulas; the general formula is never
/// stretched to cover k = 1.
CoeffRow next_row(const CoeffTable& table);

CoeffTable build_table(int m_max);

/// Start of the offset-x coefficient sequence: the k = 1 entry of row x+1.
Rational condensed_base(int x, const Rational& c_x);

/// One step of the per-offset condensed recursion, m >= x+2.
Rational condensed_step(const Rational& prev, int m, int x, const Rational& c_x);

/// Closed form for the offset-x coefficient of row m, -1 <= x <= m-1.
Rational closed_coeff(int m, int x, const Rational& c_x);

}  // namespace powsum

#endif
