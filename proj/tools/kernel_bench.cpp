// Compares the OpenMP kernels against their serial reference twins and
// reports wall time plus an exactness cross-check for each pair.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "powsum/oracle.hpp"
#include "powsum/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_of_ms(int repeats, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        best = std::min(best, ms);
    }
    return best;
}

void print_row(const std::string& kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s %12.2f %12.2f %9.2fx   %s\n", kernel.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial-vs-OpenMP kernel benchmark"};
    int rows_m = 44;
    int brute_m = 8;
    long brute_n = 1500000;
    int verify_m = 10, verify_x = 32;
    int repeats = 3;
    app.add_option("--rows-m", rows_m, "oracle row range 0..m");
    app.add_option("--brute-m", brute_m, "brute sum exponent");
    app.add_option("--brute-n", brute_n, "brute sum upper limit");
    app.add_option("--verify-m", verify_m, "verify coefficient range");
    app.add_option("--verify-x", verify_x, "verify sequence range");
    app.add_option("--repeats", repeats, "runs per kernel, best kept");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP; both columns run serial)\n");
#endif
    std::printf("%-34s %12s %12s %10s   %s\n", "kernel", "serial_ms", "openmp_ms", "speedup",
                "identical");

    {
        std::vector<powsum::oracle::OracleRow> serial_rows, parallel_rows;
        const double s = best_of_ms(repeats, [&] { serial_rows = powsum::oracle::rows(rows_m, false); });
        const double p = best_of_ms(repeats, [&] { parallel_rows = powsum::oracle::rows(rows_m, true); });
        bool same = serial_rows.size() == parallel_rows.size();
        for (size_t i = 0; same && i < serial_rows.size(); ++i) {
            same = serial_rows[i].row == parallel_rows[i].row;
        }
        print_row("oracle-rows(m_max=" + std::to_string(rows_m) + ")", s, p, same);
    }

    {
        powsum::Integer serial_sum, parallel_sum;
        const double s =
            best_of_ms(repeats, [&] { serial_sum = powsum::oracle::brute_sum(brute_m, brute_n); });
        const double p = best_of_ms(
            repeats, [&] { parallel_sum = powsum::oracle::brute_sum_parallel(brute_m, brute_n); });
        print_row("brute-sum(m=" + std::to_string(brute_m) + ", n=" + std::to_string(brute_n) + ")",
                  s, p, serial_sum == parallel_sum);
    }

    {
        powsum::VerifyReport serial_rep, parallel_rep;
        const double s = best_of_ms(
            repeats, [&] { serial_rep = powsum::run_verify(verify_m, verify_x, false, false); });
        const double p = best_of_ms(
            repeats, [&] { parallel_rep = powsum::run_verify(verify_m, verify_x, false, true); });
        // Timing fields differ run to run; the data lines must not.
        const auto data_only = [](const powsum::VerifyReport& r) {
            const std::string text = powsum::render(r);
            return text.substr(0, text.find("# timing"));
        };
        print_row("verify(max_m=" + std::to_string(verify_m) + ", max_x=" + std::to_string(verify_x) + ")",
                  s, p, data_only(serial_rep) == data_only(parallel_rep));
    }

    return 0;
}
