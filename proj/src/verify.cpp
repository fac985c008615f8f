#include "powsum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "powsum/coefficients.hpp"
#include "powsum/oracle.hpp"
#include "powsum/sequences.hpp"

namespace powsum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string index_mk(int m, int k) {
    return "m = " + std::to_string(m) + ", k = " + std::to_string(k);
}

std::string index_x(int x) { return "x = " + std::to_string(x); }

Rational ref_d(int x, const std::vector<oracle::OracleRow>& ref) {
    if (x == -1) {
        return Rational(1);
    }
    return oracle::d(x, ref[static_cast<size_t>(x) + 1]);
}

/// C_{-1}..C_{max_m - 1} from the native non-linear C chain.
std::vector<Rational> c_values(int max_m) {
    CSequenceGenerator gen;
    std::vector<Rational> cs;
    cs.reserve(static_cast<size_t>(max_m) + 1);
    for (int x = -1; x <= max_m - 1; ++x) {
        cs.push_back(gen.c(x));
    }
    return cs;
}

const Rational& c_at(const std::vector<Rational>& cs, int x) {
    return cs[static_cast<size_t>(x + 1)];
}

CheckResult check_strong_vs_oracle(int max_m, const std::vector<oracle::OracleRow>& ref) {
    const auto t0 = Clock::now();
    CheckResult res;
    res.name = "coeffs/strong-vs-oracle";
    res.pass = true;
    const CoeffTable table = build_table(max_m);
    for (int m = 0; m <= max_m && res.pass; ++m) {
        for (int k = 1; k <= m + 1; ++k) {
            ++res.cells;
            const Rational& lhs = table.row(m).a(k);
            const Rational& rhs = ref[static_cast<size_t>(m)].row.a(k);
            if (lhs != rhs) {
                res.pass = false;
                res.first_divergence =
                    Divergence{index_mk(m, k), "strong", lhs.str(), "oracle", rhs.str()};
                break;
            }
        }
    }
    res.wall_ms = ms_since(t0);
    return res;
}

CheckResult check_closed_vs_oracle(int max_m, const std::vector<oracle::OracleRow>& ref) {
    const auto t0 = Clock::now();
    CheckResult res;
    res.name = "coeffs/closed-vs-oracle";
    res.pass = true;
    const std::vector<Rational> cs = c_values(max_m);
    for (int m = 0; m <= max_m && res.pass; ++m) {
        for (int x = -1; x <= m - 1; ++x) {
            ++res.cells;
            const Rational lhs = closed_coeff(m, x, c_at(cs, x));
            const Rational& rhs = ref[static_cast<size_t>(m)].row.a(m - x);
            if (lhs != rhs) {
                res.pass = false;
                res.first_divergence =
                    Divergence{index_mk(m, m - x), "closed", lhs.str(), "oracle", rhs.str()};
                break;
            }
        }
    }
    res.wall_ms = ms_since(t0);
    return res;
}

CheckResult check_condensed_vs_oracle(int max_m, const std::vector<oracle::OracleRow>& ref) {
    const auto t0 = Clock::now();
    CheckResult res;
    res.name = "coeffs/condensed-vs-oracle";
    res.pass = true;
    const std::vector<Rational> cs = c_values(max_m);
    for (int x = -1; x <= max_m - 1 && res.pass; ++x) {
        Rational value = condensed_base(x, c_at(cs, x));  // a_{x+1,1}
        for (int m = x + 1; m <= max_m; ++m) {
            if (m > x + 1) {
                value = condensed_step(value, m, x, c_at(cs, x));
            }
            ++res.cells;
            const Rational& rhs = ref[static_cast<size_t>(m)].row.a(m - x);
            if (value != rhs) {
                res.pass = false;
                res.first_divergence =
                    Divergence{index_mk(m, m - x), "condensed", value.str(), "oracle", rhs.str()};
                break;
            }
        }
    }
    res.wall_ms = ms_since(t0);
    return res;
}

CheckResult check_dseq(Backend backend, Form form, int max_x,
                       const std::vector<oracle::OracleRow>& ref) {
    const auto t0 = Clock::now();
    std::string label(backend_name(backend));
    if (form == Form::PaperLiteral) {
        label += "-literal";
    }
    CheckResult res;
    res.name = "dseq/" + label + "-vs-oracle";
    res.pass = true;
    SequenceGenerator gen(backend, form);
    for (int x = -1; x <= max_x; ++x) {
        ++res.cells;
        const Rational& lhs = gen.d(x);
        const Rational rhs = ref_d(x, ref);
        if (lhs != rhs) {
            res.pass = false;
            res.first_divergence = Divergence{index_x(x), label, lhs.str(), "oracle", rhs.str()};
            break;
        }
    }
    res.wall_ms = ms_since(t0);
    return res;
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

VerifyReport run_verify(int max_m, int max_x, bool paper_literal, bool parallel) {
    if (max_m < 0 || max_x < -1) {
        throw std::invalid_argument("run_verify: require max_m >= 0 and max_x >= -1");
    }
    VerifyReport report;
    report.max_m = max_m;
    report.max_x = max_x;
    report.paper_literal = paper_literal;

    const auto t0 = Clock::now();
    const std::vector<oracle::OracleRow> ref =
        oracle::rows(std::max(max_m, max_x + 1), parallel);
    report.oracle_ms = ms_since(t0);

    const Form rec_form = paper_literal ? Form::PaperLiteral : Form::Corrected;

    // Slots fix the report order; the workers may run in any order.
    report.checks.resize(7);
    const auto run_slot = [&](int slot) {
        switch (slot) {
            case 0: report.checks[0] = check_closed_vs_oracle(max_m, ref); break;
            case 1: report.checks[1] = check_condensed_vs_oracle(max_m, ref); break;
            case 2: report.checks[2] = check_strong_vs_oracle(max_m, ref); break;
            case 3: report.checks[3] = check_dseq(Backend::LinearEmpty, rec_form, max_x, ref); break;
            case 4: report.checks[4] = check_dseq(Backend::Nonlinear, rec_form, max_x, ref); break;
            case 5: report.checks[5] = check_dseq(Backend::StrongExtract, Form::Corrected, max_x, ref); break;
            case 6: report.checks[6] = check_dseq(Backend::LinearUnit, rec_form, max_x, ref); break;
            default: break;
        }
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int slot = 0; slot < 7; ++slot) {
            run_slot(slot);
        }
        return report;
    }
#else
    (void)parallel;
#endif
    for (int slot = 0; slot < 7; ++slot) {
        run_slot(slot);
    }
    return report;
}

std::string render(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify: max_m = " << report.max_m << ", max_x = " << report.max_x
       << ", forms = " << (report.paper_literal ? "paper-literal" : "corrected") << "\n";
    for (const auto& c : report.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cells << " cells)";
        if (c.first_divergence) {
            const auto& d = *c.first_divergence;
            os << " first divergence at " << d.index << ": " << d.lhs_name << " = " << d.lhs_value
               << ", " << d.rhs_name << " = " << d.rhs_value;
        }
        os << "\n";
    }
    os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    os << "# timing (ms; excluded from output determinism)\n";
    os << "# oracle-reference: " << report.oracle_ms << "\n";
    for (const auto& c : report.checks) {
        os << "# " << c.name << ": " << c.wall_ms << "\n";
    }
    return os.str();
}

}  // namespace powsum
