#ifndef POWSUM_FAULHABER_HPP
#define POWSUM_FAULHABER_HPP

#include <optional>
#include <string_view>

#include "powsum/polynomial.hpp"
#include "powsum/rational.hpp"
#include "powsum/sequences.hpp"

namespace powsum {

enum class PolySource { DSequence, BernoulliFormula, StrongTable };

std::string_view poly_source_name(PolySource s);
std::optional<PolySource> poly_source_from_name(std::string_view name);

/// Which order-m polynomial to build and from what. All three sources yield
/// the identical polynomial.
struct FaulhaberSpec {
    int order;
    PolySource source = PolySource::DSequence;
};

/// S_m from a D prefix: the n^{m-x} coefficient is D_x m!/((x+2)!(m-x)!).
PowerSumPoly faulhaber_poly(int m, const SeqTable& d_prefix);

/// S_m from the classical formula: n^{m+1}/(m+1) plus binomially weighted
/// Bernoulli terms. The 1/2 n^m term is folded into the sum as the k = 1
/// contribution with B_1 = 1/2, which also settles m = 0 (the literal
/// printed form would leave a spurious constant there).
PowerSumPoly bernoulli_formula_poly(int m, const BernoulliView& b);

PowerSumPoly make_poly(const FaulhaberSpec& spec);

/// Exact S_m(n); n may be negative. For integer n >= 0 the result is a
/// non-negative integer.
Rational power_sum(int m, const Integer& n, PolySource source = PolySource::DSequence);

}  // namespace powsum

#endif
