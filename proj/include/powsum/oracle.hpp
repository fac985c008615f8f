#ifndef POWSUM_ORACLE_HPP
#define POWSUM_ORACLE_HPP

#include <vector>

#include "powsum/coefficients.hpp"
#include "powsum/rational.hpp"

namespace powsum::oracle {

/// Sum of i^m for i = 1..n by direct exact summation; n = 0 is the empty sum.
Integer brute_sum(int m, long n);

/// OpenMP twin of brute_sum: per-thread partial sums, exact merge. Always
/// returns the same Integer as the serial reference.
Integer brute_sum_parallel(int m, long n);

/// Coefficients recovered from brute sums alone, plus the evidence used.
struct OracleRow {
    CoeffRow row;
    std::vector<long> sample_nodes;  // fitted at n = 1..m+1
    long verify_node;                // reproduced at the held-out n = m+2
};

/// Fits the degree-(m+1), zero-constant polynomial to brute sums at
/// n = 1..m+1 by exact rational elimination and verifies it at n = m+2.
OracleRow coeffs(int m);

/// Rows 0..m_max; each row is independent, so they may be built in parallel.
std::vector<OracleRow> rows(int m_max, bool parallel = true);

/// Reference D_x read off the oracle row of order x+1; D_{-1} = 1.
Rational d(int x);
Rational d(int x, const OracleRow& row_above);

}  // namespace powsum::oracle

#endif
