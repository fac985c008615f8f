#include "powsum/combinatorics.hpp"

#include <stdexcept>

namespace powsum {

void BinomialCache::grow_to(int n) {
    if (n < 0) {
        throw std::invalid_argument("BinomialCache: negative row");
    }
    while (static_cast<int>(rows_.size()) <= n) {
        const size_t m = rows_.size();
        std::vector<Integer> row(m + 1, 1);
        for (size_t k = 1; k < m; ++k) {
            row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& BinomialCache::operator()(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("BinomialCache: index out of range");
    }
    grow_to(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

void FactorialCache::grow_to(int n) {
    if (n < 0) {
        throw std::invalid_argument("FactorialCache: negative argument");
    }
    if (values_.empty()) {
        values_.push_back(1);
    }
    while (static_cast<int>(values_.size()) <= n) {
        values_.push_back(values_.back() * static_cast<long>(values_.size()));
    }
}

const Integer& FactorialCache::operator()(int n) {
    grow_to(n);
    return values_[static_cast<size_t>(n)];
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace powsum
