#include "powsum/coefficients.hpp"

#include <stdexcept>
#include <utility>

#include "powsum/combinatorics.hpp"

namespace powsum {

CoeffRow::CoeffRow(int order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order_ < 0) {
        throw std::invalid_argument("CoeffRow: negative order");
    }
    if (entries_.size() != static_cast<size_t>(order_) + 1) {
        throw std::invalid_argument("CoeffRow: entries must cover exponents 1..order+1");
    }
}

const Rational& CoeffRow::a(int k) const {
    if (k < 1 || k > order_ + 1) {
        throw std::invalid_argument("CoeffRow: exponent out of range");
    }
    return entries_[static_cast<size_t>(k) - 1];
}

PowerSumPoly CoeffRow::to_poly() const {
    std::vector<Rational> coeffs;
    coeffs.reserve(entries_.size() + 1);
    coeffs.emplace_back(0);
    coeffs.insert(coeffs.end(), entries_.begin(), entries_.end());
    return PowerSumPoly(order_, std::move(coeffs));
}

CoeffTable CoeffTable::base() {
    CoeffTable t;
    t.rows_.emplace_back(0, std::vector<Rational>{Rational(1)});
    return t;
}

const CoeffRow& CoeffTable::row(int m) const {
    if (!has_row(m)) {
        throw std::invalid_argument("CoeffTable: row not built");
    }
    return rows_[static_cast<size_t>(m)];
}

void CoeffTable::append(CoeffRow row) {
    if (row.order() != max_order() + 1) {
        throw std::invalid_argument("CoeffTable: rows must be appended in order");
    }
    rows_.push_back(std::move(row));
}

namespace {

Rational alpha_impl(const CoeffRow& row, int j, BinomialCache& binom) {
    const int k = row.order();
    Rational sum;
    // The t = 0 term never exists (no constant slot), so j = 0 starts at t = 1.
    for (int t = std::max(j, 1); t <= k + 1; ++t) {
        Rational term = row.a(t) * Rational(binom(t, j));
        if ((t - j) % 2 != 0) {
            term = -term;
        }
        sum += term;
    }
    return sum;
}

/// alpha(k, j) for all j = 0..k+1 with one shared binomial cache.
std::vector<Rational> alpha_row(const CoeffTable& table, int k) {
    BinomialCache binom;
    binom.grow_to(k + 1);
    const CoeffRow& row = table.row(k);
    std::vector<Rational> alphas;
    alphas.reserve(static_cast<size_t>(k) + 2);
    for (int j = 0; j <= k + 1; ++j) {
        alphas.push_back(alpha_impl(row, j, binom));
    }
    return alphas;
}

}  // namespace

Rational alpha(const CoeffTable& table, int k, int j) {
    if (j < 0 || j > k + 1) {
        throw std::invalid_argument("alpha: require 0 <= j <= k+1");
    }
    BinomialCache binom;
    return alpha_impl(table.row(k), j, binom);
}

CoeffRow next_row(const CoeffTable& table) {
    const int m = table.max_order() + 1;
    const std::vector<Rational> al = alpha_row(table, m - 1);  // al[j] = alpha(m-1, j)

    const Rational denom = Rational(1) + al[static_cast<size_t>(m)];
    if (denom.is_zero()) {
        // The leading alpha equals the (positive) leading coefficient, so this
        // cannot happen for a well-formed table.
        throw std::logic_error("next_row: 1 + alpha(m-1, m) vanished");
    }

    const CoeffRow& prev = table.row(m - 1);
    std::vector<Rational> entries(static_cast<size_t>(m) + 1);

    // Leading term.
    entries[static_cast<size_t>(m)] = prev.a(m) / denom;

    // Interior terms, exponents k = 2..m (offsets 0..m-2).
    for (int k = 2; k <= m; ++k) {
        Rational acc;
        for (int r = k - 1; r <= m - 1; ++r) {
            acc += al[static_cast<size_t>(r)] * table.row(r).a(k);
        }
        entries[static_cast<size_t>(k) - 1] = (prev.a(k - 1) - acc) / denom;
    }

    // k = 1 has no carry-in from n * S_{m-1}(n); it gets its own all-alpha form.
    Rational acc;
    for (int r = 0; r <= m - 1; ++r) {
        acc += al[static_cast<size_t>(r)] * table.row(r).a(1);
    }
    entries[0] = -acc / denom;

    return CoeffRow(m, std::move(entries));
}

CoeffTable build_table(int m_max) {
    if (m_max < 0) {
        throw std::invalid_argument("build_table: m_max must be >= 0");
    }
    CoeffTable table = CoeffTable::base();
    for (int m = 1; m <= m_max; ++m) {
        table.append(next_row(table));
    }
    return table;
}

Rational condensed_base(int x, const Rational& c_x) {
    if (x < -1) {
        throw std::invalid_argument("condensed_base: x must be >= -1");
    }
    return c_x * Rational(factorial(static_cast<unsigned long>(x + 1)), Integer(x + 2));
}

Rational condensed_step(const Rational& prev, int m, int x, const Rational& c_x) {
    if (x < -1 || m < x + 2) {
        throw std::invalid_argument("condensed_step: require m >= x+2 (use condensed_base below)");
    }
    const Rational carry(Integer(m) * Integer(m - x - 1), Integer(m + 1) * Integer(m - x));
    const Rational inject(factorial(static_cast<unsigned long>(m)),
                          Integer(m + 1) * factorial(static_cast<unsigned long>(m - x)));
    return prev * carry + c_x * inject;
}

Rational closed_coeff(int m, int x, const Rational& c_x) {
    if (x < -1 || x > m - 1) {
        throw std::invalid_argument("closed_coeff: require -1 <= x <= m-1");
    }
    return c_x * Rational(factorial(static_cast<unsigned long>(m)),
                          Integer(x + 2) * factorial(static_cast<unsigned long>(m - x)));
}

}  // namespace powsum
