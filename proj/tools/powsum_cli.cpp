#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powsum/bench.hpp"
#include "powsum/coefficients.hpp"
#include "powsum/faulhaber.hpp"
#include "powsum/oracle.hpp"
#include "powsum/sequences.hpp"
#include "powsum/verify.hpp"

namespace {

using powsum::Backend;
using powsum::Rational;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct IndexedValue {
    int index;
    Rational value;
};

Backend parse_method(const std::string& name) {
    const auto b = powsum::backend_from_name(name);
    if (!b || *b == Backend::Oracle) {
        throw CLI::ValidationError("--method", "unknown method '" + name + "'");
    }
    return *b;
}

void emit_sequence(std::ostream& os, const std::string& format, const std::string& sequence,
                   const std::string& method, const std::vector<IndexedValue>& values,
                   const std::string& indexing = {}) {
    if (format == "plain") {
        for (const auto& v : values) {
            os << sequence << "[" << v.index << "] = " << v.value.str() << "\n";
        }
    } else if (format == "csv") {
        os << "index,value\n";
        for (const auto& v : values) {
            os << v.index << ',' << v.value.str() << "\n";
        }
    } else {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& v : values) {
            items.push_back({{"index", v.index}, {"value", v.value.str()}});
        }
        nlohmann::json j = {{"sequence", sequence}, {"method", method}, {"values", items}};
        if (!indexing.empty()) {
            j["indexing"] = indexing;
        }
        os << j.dump() << "\n";
    }
}

void emit_poly(std::ostream& os, const std::string& format, const powsum::PowerSumPoly& poly,
               const std::string& source) {
    if (format == "plain") {
        os << "S_" << poly.order() << "(n) =";
        bool first = true;
        for (int e = poly.order() + 1; e >= 1; --e) {
            const Rational& c = poly.coefficient(e);
            if (c.is_zero()) {
                continue;
            }
            const Rational mag = (c.sign() < 0) ? -c : c;
            os << (first ? " " : (c.sign() < 0 ? " - " : " + "));
            if (first && c.sign() < 0) {
                os << "-";
            }
            os << mag.str() << " n";
            if (e > 1) {
                os << "^" << e;
            }
            first = false;
        }
        os << "\n";
    } else if (format == "csv") {
        os << "exponent,value\n";
        for (int e = poly.order() + 1; e >= 1; --e) {
            os << e << ',' << poly.coefficient(e).str() << "\n";
        }
    } else {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int e = poly.order() + 1; e >= 1; --e) {
            coeffs.push_back({{"exponent", e}, {"value", poly.coefficient(e).str()}});
        }
        nlohmann::json j = {
            {"poly", {{"order", poly.order()}, {"source", source}, {"coefficients", coeffs}}}};
        os << j.dump() << "\n";
    }
}

std::vector<Backend> parse_method_list(const std::string& list) {
    std::vector<Backend> methods;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            methods.push_back(parse_method(item));
        }
    }
    if (methods.empty()) {
        throw CLI::ValidationError("--methods", "empty method list");
    }
    return methods;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact power-sum polynomials, C/D sequences and Bernoulli numbers"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"plain", "json", "csv"};

    // bernoulli <n>
    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "print the Bernoulli number B_n");
    long b_n = 0;
    std::string b_method = "unit", b_indexing = "zero", b_format = "plain";
    cmd_bernoulli->add_option("n", b_n, "index")->required();
    cmd_bernoulli->add_option("--method", b_method)->check(CLI::IsMember({"nonlinear", "unit", "empty", "strong"}));
    cmd_bernoulli->add_option("--indexing", b_indexing)->check(CLI::IsMember({"zero", "minus-one"}));
    cmd_bernoulli->add_option("--format", b_format)->check(CLI::IsMember(formats));

    // dseq / cseq
    auto* cmd_dseq = app.add_subcommand("dseq", "print D_{-1}..D_max");
    auto* cmd_cseq = app.add_subcommand("cseq", "print C_{-1}..C_max");
    long seq_max = 0;
    std::string seq_method = "unit", seq_format = "plain";
    for (auto* cmd : {cmd_dseq, cmd_cseq}) {
        cmd->add_option("--max", seq_max, "largest index")->required();
        cmd->add_option("--method", seq_method)->check(CLI::IsMember({"nonlinear", "unit", "empty", "strong"}));
        cmd->add_option("--format", seq_format)->check(CLI::IsMember(formats));
    }

    // poly <m>
    auto* cmd_poly = app.add_subcommand("poly", "print the power-sum polynomial S_m");
    long p_m = 0;
    std::string p_source = "d", p_format = "plain";
    cmd_poly->add_option("m", p_m, "order")->required();
    cmd_poly->add_option("--source", p_source)->check(CLI::IsMember({"d", "bernoulli", "strong"}));
    cmd_poly->add_option("--format", p_format)->check(CLI::IsMember(formats));

    // eval <m> <n>
    auto* cmd_eval = app.add_subcommand("eval", "evaluate S_m(n) exactly");
    long e_m = 0, e_n = 0;
    cmd_eval->add_option("m", e_m, "order")->required();
    cmd_eval->add_option("n", e_n, "argument")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "cross-check every backend against the oracle");
    long v_max_m = 12, v_max_x = 25;
    bool v_literal = false, v_serial = false;
    cmd_verify->add_option("--max-m", v_max_m, "largest polynomial order checked");
    cmd_verify->add_option("--max-x", v_max_x, "largest sequence index checked");
    cmd_verify->add_flag("--paper-literal", v_literal,
                         "run the printed, uncorrected recursions (expected to fail)");
    cmd_verify->add_flag("--serial", v_serial, "disable OpenMP fan-out");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "time backends term by term");
    long bench_max_x = 0;
    long bench_repeats = 3;
    std::string bench_methods = "nonlinear,unit,empty,strong", bench_format = "plain";
    cmd_bench->add_option("--max-x", bench_max_x, "largest index computed")->required();
    cmd_bench->add_option("--methods", bench_methods, "comma-separated backend list");
    cmd_bench->add_option("--repeats", bench_repeats, "cold runs per backend");
    cmd_bench->add_option("--format", bench_format)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);

        if (cmd_bernoulli->parsed()) {
            const Backend method = parse_method(b_method);
            std::vector<IndexedValue> out;
            if (b_indexing == "zero") {
                if (b_n < 0) {
                    throw CLI::ValidationError("n", "zero indexing starts at 0");
                }
                const auto view = powsum::bernoulli(static_cast<int>(b_n), method);
                out.push_back({static_cast<int>(b_n), view.at(static_cast<int>(b_n))});
            } else {
                if (b_n < -1) {
                    throw CLI::ValidationError("n", "minus-one indexing starts at -1");
                }
                const auto view = powsum::bernoulli(static_cast<int>(b_n) + 1, method,
                                                    powsum::Indexing::FromMinusOne);
                out.push_back({static_cast<int>(b_n), view.at(static_cast<int>(b_n))});
            }
            if (b_format == "plain") {
                std::cout << out.front().value.str() << "\n";
            } else {
                emit_sequence(std::cout, b_format, "B", b_method, out, b_indexing);
            }
            return kExitOk;
        }

        if (cmd_dseq->parsed() || cmd_cseq->parsed()) {
            if (seq_max < -1) {
                throw CLI::ValidationError("--max", "sequences start at index -1");
            }
            const Backend method = parse_method(seq_method);
            const bool want_c = cmd_cseq->parsed();
            std::vector<IndexedValue> out;
            if (want_c && method == Backend::Nonlinear) {
                powsum::CSequenceGenerator gen;  // native C-space chain
                for (int x = -1; x <= seq_max; ++x) {
                    out.push_back({x, gen.c(x)});
                }
            } else {
                powsum::SequenceGenerator gen(method);
                for (int x = -1; x <= seq_max; ++x) {
                    out.push_back({x, want_c ? gen.c(x) : gen.d(x)});
                }
            }
            emit_sequence(std::cout, seq_format, want_c ? "C" : "D", seq_method, out);
            return kExitOk;
        }

        if (cmd_poly->parsed()) {
            if (p_m < 0) {
                throw CLI::ValidationError("m", "order must be >= 0");
            }
            const auto source = powsum::poly_source_from_name(p_source);
            const auto poly = powsum::make_poly({static_cast<int>(p_m), *source});
            emit_poly(std::cout, p_format, poly, p_source);
            return kExitOk;
        }

        if (cmd_eval->parsed()) {
            if (e_m < 0) {
                throw CLI::ValidationError("m", "order must be >= 0");
            }
            std::cout << powsum::power_sum(static_cast<int>(e_m), powsum::Integer(e_n)).str()
                      << "\n";
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            const auto report = powsum::run_verify(static_cast<int>(v_max_m),
                                                   static_cast<int>(v_max_x), v_literal,
                                                   !v_serial);
            std::cout << powsum::render(report);
            return report.all_pass() ? kExitOk : kExitVerifyFailed;
        }

        if (cmd_bench->parsed()) {
            const auto report = powsum::run_bench(static_cast<int>(bench_max_x),
                                                  parse_method_list(bench_methods),
                                                  static_cast<int>(bench_repeats));
            if (bench_format == "plain") {
                std::cout << powsum::render_plain(report);
            } else if (bench_format == "json") {
                std::cout << powsum::render_json(report);
            } else {
                std::cout << powsum::render_csv(report);
            }
            return kExitOk;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
