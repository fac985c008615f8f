#ifndef POWSUM_SEQUENCES_HPP
#define POWSUM_SEQUENCES_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powsum/coefficients.hpp"
#include "powsum/combinatorics.hpp"
#include "powsum/rational.hpp"

namespace powsum {

enum class SeqKind { C, D, Beta, BetaStar };

enum class Backend { Nonlinear, LinearUnit, LinearEmpty, StrongExtract, Oracle };

/// CLI-facing backend names: nonlinear, unit, empty, strong, oracle.
std::string_view backend_name(Backend b);
std::optional<Backend> backend_from_name(std::string_view name);

/// Corrected runs the oracle-consistent recursions; PaperLiteral runs the
/// printed forms, which lack a normalization factor and are expected to
/// diverge (see README, Errata).
enum class Form { Corrected, PaperLiteral };

/// Prefix of one sequence. C and D run from index -1, the beta caches from 0.
/// Public indices are the paper's; the storage offset stays internal.
class SeqTable {
public:
    SeqTable(SeqKind kind, Backend backend);

    SeqKind kind() const { return kind_; }
    Backend backend() const { return backend_; }

    int first_index() const { return first_index_; }
    /// Largest held index; first_index() - 1 when empty.
    int max_index() const { return first_index_ + static_cast<int>(values_.size()) - 1; }
    bool has(int x) const { return x >= first_index_ && x <= max_index(); }

    const Rational& at(int x) const;
    void append(Rational v) { values_.push_back(std::move(v)); }
    size_t size() const { return values_.size(); }

private:
    SeqKind kind_;
    Backend backend_;
    int first_index_;
    std::vector<Rational> values_;
};

/// Seeded C (or D) table holding only the index -1 value 1.
SeqTable seeded_c_table(Backend backend);
SeqTable seeded_d_table(Backend backend);

// Alternating-sign convolution auxiliaries. The C-form and D-form routes
// differ only by denominator bookkeeping and must agree exactly.
Rational beta(int x, const SeqTable& c_prefix);        // needs C_{-1}..C_x
Rational beta_star(int x, const SeqTable& c_prefix);   // needs C_{-1}..C_{x-1}
Rational beta_from_d(int x, const SeqTable& d_prefix);
Rational beta_star_from_d(int x, const SeqTable& d_prefix);

/// Next C value from the non-linear recursion; the prefix supplies every
/// beta term it needs.
Rational c_next(const SeqTable& c_prefix);

// The three recursive D definitions. Each needs D_{-1}..D_{x-1}.
Rational d_nonlinear(int x, const SeqTable& d_prefix, Form form = Form::Corrected);
Rational d_linear_unit(int x, const SeqTable& d_prefix, Form form = Form::Corrected);
Rational d_linear_empty(int x, const SeqTable& d_prefix, Form form = Form::Corrected);

/// D_x extracted from the strong-recursion triangle: (x+2) times the
/// exponent-1 entry of row x+1.
Rational d_from_strong(int x, const CoeffTable& table);

/// Incremental generator for one backend. The computed prefix is cached;
/// the non-linear backend additionally caches its beta values so extending
/// by one term costs O(x) exact operations.
class SequenceGenerator {
public:
    explicit SequenceGenerator(Backend backend, Form form = Form::Corrected);
    ~SequenceGenerator();
    SequenceGenerator(SequenceGenerator&&) noexcept;
    SequenceGenerator& operator=(SequenceGenerator&&) noexcept;

    Backend backend() const { return backend_; }
    Form form() const { return form_; }

    void extend_to(int x);
    const Rational& d(int x);
    /// C_x = D_x / (x+1)!.
    Rational c(int x);
    const SeqTable& d_prefix() const { return table_; }

    /// Largest numerator bit length seen among produced D values.
    long peak_numerator_bits() const { return peak_numerator_bits_; }

private:
    void step();  // appends the next D value

    Backend backend_;
    Form form_;
    SeqTable table_;
    std::vector<Rational> beta_;       // nonlinear only, D-form, index from 0
    std::vector<Rational> beta_star_;  // nonlinear only, index from 0
    std::unique_ptr<CoeffTable> strong_;
    FactorialCache fact_;
    long peak_numerator_bits_ = 0;
};

/// Native C-space twin of the non-linear D backend, used where C values are
/// wanted without the detour through D.
class CSequenceGenerator {
public:
    CSequenceGenerator();
    const Rational& c(int x);
    const SeqTable& c_prefix() const { return table_; }

private:
    SeqTable table_;
    std::vector<Rational> beta_;
    std::vector<Rational> beta_star_;
};

enum class Indexing { FromZero, FromMinusOne };

/// Bernoulli prefix under this derivation's sign convention (index-1 value
/// is +1/2). FromMinusOne exposes the same list shifted one slot down.
class BernoulliView {
public:
    BernoulliView(Indexing indexing, std::vector<Rational> values);

    Indexing indexing() const { return indexing_; }
    int first_index() const { return indexing_ == Indexing::FromZero ? 0 : -1; }
    int max_index() const { return first_index_plus_size() - 1; }
    const Rational& at(int index) const;
    const std::vector<Rational>& values() const { return values_; }

private:
    int first_index_plus_size() const { return first_index() + static_cast<int>(values_.size()); }

    Indexing indexing_;
    std::vector<Rational> values_;
};

/// B_0..B_{n_max} (or the shifted view) via the conversion B_{x+1} = D_x/(x+2).
BernoulliView bernoulli(int n_max, Backend backend, Indexing indexing = Indexing::FromZero);

}  // namespace powsum

#endif
