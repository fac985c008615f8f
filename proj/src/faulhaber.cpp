#include "powsum/faulhaber.hpp"

#include <stdexcept>
#include <vector>

#include "powsum/coefficients.hpp"
#include "powsum/combinatorics.hpp"

namespace powsum {

std::string_view poly_source_name(PolySource s) {
    switch (s) {
        case PolySource::DSequence: return "d";
        case PolySource::BernoulliFormula: return "bernoulli";
        case PolySource::StrongTable: return "strong";
    }
    throw std::logic_error("poly_source_name: unknown source");
}

std::optional<PolySource> poly_source_from_name(std::string_view name) {
    if (name == "d") return PolySource::DSequence;
    if (name == "bernoulli") return PolySource::BernoulliFormula;
    if (name == "strong") return PolySource::StrongTable;
    return std::nullopt;
}

PowerSumPoly faulhaber_poly(int m, const SeqTable& d_prefix) {
    if (m < 0) {
        throw std::invalid_argument("faulhaber_poly: m must be >= 0");
    }
    if (d_prefix.kind() != SeqKind::D || d_prefix.max_index() < m - 1) {
        throw std::invalid_argument("faulhaber_poly: need D_{-1}..D_{m-1}");
    }
    FactorialCache fact;
    std::vector<Rational> coeffs(static_cast<size_t>(m) + 2);
    for (int x = -1; x <= m - 1; ++x) {
        // exponent m - x, running m+1 down to 1
        coeffs[static_cast<size_t>(m - x)] =
            d_prefix.at(x) * Rational(fact(m), fact(x + 2) * fact(m - x));
    }
    return PowerSumPoly(m, std::move(coeffs));
}

PowerSumPoly bernoulli_formula_poly(int m, const BernoulliView& b) {
    if (m < 0) {
        throw std::invalid_argument("bernoulli_formula_poly: m must be >= 0");
    }
    if (b.indexing() != Indexing::FromZero || b.max_index() < m) {
        throw std::invalid_argument("bernoulli_formula_poly: need B_0..B_m indexed from zero");
    }
    FactorialCache fact;
    std::vector<Rational> coeffs(static_cast<size_t>(m) + 2);
    coeffs[static_cast<size_t>(m) + 1] = Rational(1, static_cast<long>(m) + 1);
    for (int k = 1; k <= m; ++k) {
        // exponent m - k + 1, running m down to 1
        coeffs[static_cast<size_t>(m - k + 1)] =
            b.at(k) * Rational(fact(m), fact(k) * fact(m - k + 1));
    }
    return PowerSumPoly(m, std::move(coeffs));
}

PowerSumPoly make_poly(const FaulhaberSpec& spec) {
    switch (spec.source) {
        case PolySource::DSequence: {
            SequenceGenerator gen(Backend::LinearUnit);
            gen.extend_to(spec.order - 1);
            return faulhaber_poly(spec.order, gen.d_prefix());
        }
        case PolySource::BernoulliFormula:
            return bernoulli_formula_poly(spec.order, bernoulli(spec.order, Backend::LinearUnit));
        case PolySource::StrongTable:
            return build_table(spec.order).row(spec.order).to_poly();
    }
    throw std::logic_error("make_poly: unknown source");
}

Rational power_sum(int m, const Integer& n, PolySource source) {
    if (m < 0) {
        throw std::invalid_argument("power_sum: m must be >= 0");
    }
    return make_poly({m, source}).eval(Rational(n));
}

}  // namespace powsum
