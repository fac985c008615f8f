#include "powsum/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powsum::oracle {

namespace {

Integer pow_ui(long base, int exp) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return p;
}

Integer brute_range(int m, long lo, long hi) {
    Integer sum = 0;
    for (long i = lo; i <= hi; ++i) {
        sum += pow_ui(i, m);
    }
    return sum;
}

void check_brute_args(int m, long n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("brute_sum: require m >= 0 and n >= 0");
    }
}

/// Exact Gaussian elimination with pivoting on nonzero pivots. The system is
/// square; a singular matrix raises logic_error.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::logic_error("oracle: singular interpolation system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) {
                continue;
            }
            const Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t rev = 0; rev < n; ++rev) {
        const size_t r = n - 1 - rev;
        Rational acc = b[r];
        for (size_t c = r + 1; c < n; ++c) {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    return x;
}

}  // namespace

Integer brute_sum(int m, long n) {
    check_brute_args(m, n);
    return brute_range(m, 1, n);
}

Integer brute_sum_parallel(int m, long n) {
    check_brute_args(m, n);
#ifdef _OPENMP
    Integer total = 0;
#pragma omp parallel
    {
        const int nt = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const long chunk = n / nt;
        const long lo = 1 + tid * chunk;
        const long hi = (tid == nt - 1) ? n : lo + chunk - 1;
        Integer part = (lo <= hi) ? brute_range(m, lo, hi) : Integer(0);
#pragma omp critical
        total += part;
    }
    return total;
#else
    return brute_range(m, 1, n);
#endif
}

OracleRow coeffs(int m) {
    if (m < 0) {
        throw std::invalid_argument("oracle::coeffs: m must be >= 0");
    }
    const size_t dim = static_cast<size_t>(m) + 1;

    std::vector<long> nodes(dim);
    std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(dim));
    std::vector<Rational> rhs(dim);
    for (size_t r = 0; r < dim; ++r) {
        const long n = static_cast<long>(r) + 1;
        nodes[r] = n;
        for (size_t c = 0; c < dim; ++c) {
            // Column c carries exponent c+1: the constant term is imposed as zero.
            matrix[r][c] = Rational(pow_ui(n, static_cast<int>(c) + 1));
        }
        rhs[r] = Rational(brute_sum(m, n));
    }

    CoeffRow row(m, solve(std::move(matrix), std::move(rhs)));

    const long holdout = m + 2;
    if (row.to_poly().eval(Rational(holdout)) != Rational(brute_sum(m, holdout))) {
        throw std::logic_error("oracle: fitted row failed the held-out node");
    }
    return OracleRow{std::move(row), std::move(nodes), holdout};
}

std::vector<OracleRow> rows(int m_max, bool parallel) {
    if (m_max < 0) {
        throw std::invalid_argument("oracle::rows: m_max must be >= 0");
    }
    std::vector<std::optional<OracleRow>> staged(static_cast<size_t>(m_max) + 1);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int m = 0; m <= m_max; ++m) {
            staged[static_cast<size_t>(m)] = coeffs(m);
        }
    } else
#else
    (void)parallel;
#endif
    {
        for (int m = 0; m <= m_max; ++m) {
            staged[static_cast<size_t>(m)] = coeffs(m);
        }
    }
    std::vector<OracleRow> out;
    out.reserve(staged.size());
    for (auto& r : staged) {
        out.push_back(std::move(*r));
    }
    return out;
}

Rational d(int x, const OracleRow& row_above) {
    if (row_above.row.order() != x + 1) {
        throw std::invalid_argument("oracle::d: row order must be x+1");
    }
    return Rational(x + 2) * row_above.row.a(1);
}

Rational d(int x) {
    if (x < -1) {
        throw std::invalid_argument("oracle::d: x must be >= -1");
    }
    if (x == -1) {
        return Rational(1);
    }
    return d(x, coeffs(x + 1));
}

}  // namespace powsum::oracle
