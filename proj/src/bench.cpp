#include "powsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace powsum {

namespace {

using Clock = std::chrono::steady_clock;

BenchSeries bench_one(Backend backend, int x_max, int repeats) {
    BenchSeries series;
    series.method = std::string(backend_name(backend));
    series.per_term_ms.assign(static_cast<size_t>(x_max) + 1,
                              std::numeric_limits<double>::infinity());
    for (int rep = 0; rep < repeats; ++rep) {
        SequenceGenerator gen(backend);
        for (int x = 0; x <= x_max; ++x) {
            const auto t0 = Clock::now();
            gen.extend_to(x);
            const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            auto& slot = series.per_term_ms[static_cast<size_t>(x)];
            slot = std::min(slot, ms);
        }
        series.peak_numerator_bits = gen.peak_numerator_bits();
    }
    series.total_ms = 0.0;
    for (double ms : series.per_term_ms) {
        series.total_ms += ms;
    }
    return series;
}

}  // namespace

BenchReport run_bench(int x_max, std::vector<Backend> methods, int repeats) {
    if (x_max < 0 || repeats < 1) {
        throw std::invalid_argument("run_bench: require x_max >= 0 and repeats >= 1");
    }
    if (methods.empty()) {
        throw std::invalid_argument("run_bench: no methods given");
    }
    // Deterministic merge: by backend name, duplicates dropped.
    std::sort(methods.begin(), methods.end(), [](Backend a, Backend b) {
        return backend_name(a) < backend_name(b);
    });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    BenchReport report;
    report.x_max = x_max;
    report.repeats = repeats;
    for (Backend b : methods) {
        report.series.push_back(bench_one(b, x_max, repeats));
    }
    return report;
}

std::string render_plain(const BenchReport& report) {
    std::ostringstream os;
    os << "bench: x_max = " << report.x_max << ", repeats = " << report.repeats << "\n";
    os << "method      total_ms      peak_numerator_bits\n";
    for (const auto& s : report.series) {
        os << s.method;
        for (size_t i = s.method.size(); i < 12; ++i) {
            os << ' ';
        }
        std::ostringstream t;
        t << s.total_ms;
        os << t.str();
        for (size_t i = t.str().size(); i < 14; ++i) {
            os << ' ';
        }
        os << s.peak_numerator_bits << "\n";
    }
    os << "# per-term series: use --format json or csv\n";
    return os.str();
}

std::string render_json(const BenchReport& report) {
    nlohmann::json methods = nlohmann::json::array();
    for (const auto& s : report.series) {
        methods.push_back({{"method", s.method},
                           {"total_ms", s.total_ms},
                           {"peak_numerator_bits", s.peak_numerator_bits},
                           {"per_term_ms", s.per_term_ms}});
    }
    nlohmann::json j = {{"bench",
                         {{"x_max", report.x_max},
                          {"repeats", report.repeats},
                          {"methods", methods}}}};
    return j.dump() + "\n";
}

std::string render_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "method,index,term_ms\n";
    for (const auto& s : report.series) {
        for (size_t i = 0; i < s.per_term_ms.size(); ++i) {
            os << s.method << ',' << i << ',' << s.per_term_ms[i] << "\n";
        }
    }
    return os.str();
}

}  // namespace powsum
