#include <doctest.h>

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "powsum/bench.hpp"
#include "powsum/verify.hpp"

using namespace powsum;

namespace {

std::string data_section(const VerifyReport& report) {
    const std::string text = render(report);
    return text.substr(0, text.find("# timing"));
}

}  // namespace

TEST_CASE("corrected backends verify clean") {
    const VerifyReport report = run_verify(8, 12, false);
    CHECK(report.all_pass());
    REQUIRE(report.checks.size() == 7);
    for (const auto& c : report.checks) {
        CHECK(c.pass);
        CHECK(!c.first_divergence.has_value());
    }
    // 3 coefficient sweeps of (8+1)(8+2)/2 cells, 4 sequence sweeps of x = -1..12
    CHECK(report.checks[0].cells == 45);
    CHECK(report.checks[1].cells == 45);
    CHECK(report.checks[2].cells == 45);
    CHECK(report.checks[3].cells == 14);
    CHECK(data_section(report).find("result: PASS") != std::string::npos);
}

TEST_CASE("verify output is deterministic and parallel-invariant") {
    const std::string a = data_section(run_verify(6, 10, false, true));
    const std::string b = data_section(run_verify(6, 10, false, true));
    const std::string serial = data_section(run_verify(6, 10, false, false));
    CHECK(a == b);
    CHECK(a == serial);
}

TEST_CASE("paper-literal forms fail verification where documented") {
    const VerifyReport report = run_verify(4, 6, true);
    CHECK(!report.all_pass());

    REQUIRE(report.checks.size() == 7);
    for (int i = 0; i < 3; ++i) {
        CHECK(report.checks[static_cast<size_t>(i)].pass);  // coefficient paths unaffected
    }

    const auto& empty_literal = report.checks[3];
    CHECK(empty_literal.name == "dseq/empty-literal-vs-oracle");
    CHECK(!empty_literal.pass);
    REQUIRE(empty_literal.first_divergence.has_value());
    CHECK(empty_literal.first_divergence->index == "x = 0");
    CHECK(empty_literal.first_divergence->lhs_value == "1/2");

    const auto& nl_literal = report.checks[4];
    CHECK(nl_literal.name == "dseq/nonlinear-literal-vs-oracle");
    CHECK(!nl_literal.pass);
    REQUIRE(nl_literal.first_divergence.has_value());
    CHECK(nl_literal.first_divergence->index == "x = 1");
    CHECK(nl_literal.first_divergence->lhs_value == "1/4");
    CHECK(nl_literal.first_divergence->rhs_value == "1/2");

    const auto& strong = report.checks[5];
    CHECK(strong.name == "dseq/strong-vs-oracle");
    CHECK(strong.pass);

    const auto& unit_literal = report.checks[6];
    CHECK(unit_literal.name == "dseq/unit-literal-vs-oracle");
    CHECK(!unit_literal.pass);
    REQUIRE(unit_literal.first_divergence.has_value());
    CHECK(unit_literal.first_divergence->index == "x = 0");
    CHECK(unit_literal.first_divergence->lhs_value == "1/2");
    CHECK(unit_literal.first_divergence->rhs_value == "1");

    const std::string text = render(report);
    CHECK(text.find("FAIL dseq/unit-literal-vs-oracle") != std::string::npos);
    CHECK(text.find("first divergence at x = 0: unit-literal = 1/2, oracle = 1") !=
          std::string::npos);
    CHECK(text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("verify argument validation") {
    CHECK_THROWS_AS(run_verify(-1, 5, false), std::invalid_argument);
    CHECK_THROWS_AS(run_verify(3, -2, false), std::invalid_argument);
}

TEST_CASE("bench report shape and rendering") {
    const BenchReport report =
        run_bench(10, {Backend::LinearUnit, Backend::Nonlinear, Backend::LinearUnit}, 2);
    REQUIRE(report.series.size() == 2);  // duplicate collapsed
    CHECK(report.series[0].method == "nonlinear");
    CHECK(report.series[1].method == "unit");
    for (const auto& s : report.series) {
        CHECK(s.per_term_ms.size() == 11);
        CHECK(s.total_ms > 0.0);
        CHECK(s.peak_numerator_bits > 0);
    }

    const std::string csv = render_csv(report);
    CHECK(csv.rfind("method,index,term_ms\n", 0) == 0);
    size_t lines = 0;
    for (char ch : csv) {
        lines += (ch == '\n') ? 1 : 0;
    }
    CHECK(lines == 1 + 2 * 11);

    const std::string json_text = render_json(report);
    const auto parsed = nlohmann::json::parse(json_text);
    CHECK(parsed["bench"]["x_max"] == 10);
    CHECK(parsed["bench"]["methods"].size() == 2);
    CHECK(parsed["bench"]["methods"][0]["method"] == "nonlinear");
    CHECK(parsed.dump() + "\n" == json_text);  // serialize-parse-serialize identity

    CHECK_THROWS_AS(run_bench(-1, {Backend::LinearUnit}), std::invalid_argument);
    CHECK_THROWS_AS(run_bench(5, {}), std::invalid_argument);
}
