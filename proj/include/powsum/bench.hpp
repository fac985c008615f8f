#ifndef POWSUM_BENCH_HPP
#define POWSUM_BENCH_HPP

#include <string>
#include <vector>

#include "powsum/sequences.hpp"

namespace powsum {

struct BenchSeries {
    std::string method;
    double total_ms = 0.0;
    std::vector<double> per_term_ms;  // entry t: cost of extending to D_t, t = 0..x_max
    long peak_numerator_bits = 0;
};

struct BenchReport {
    int x_max = 0;
    int repeats = 0;
    std::vector<BenchSeries> series;  // ordered by method name
};

/// Times each backend extending a fresh sequence to x_max. Per-term entries
/// are minima over `repeats` cold runs; backends run one after another so
/// measurements never contend.
BenchReport run_bench(int x_max, std::vector<Backend> methods, int repeats = 3);

std::string render_plain(const BenchReport& report);
std::string render_json(const BenchReport& report);
std::string render_csv(const BenchReport& report);

}  // namespace powsum

#endif
