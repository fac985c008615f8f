#include "powsum/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "powsum/oracle.hpp"

namespace powsum {

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Nonlinear: return "nonlinear";
        case Backend::LinearUnit: return "unit";
        case Backend::LinearEmpty: return "empty";
        case Backend::StrongExtract: return "strong";
        case Backend::Oracle: return "oracle";
    }
    throw std::logic_error("backend_name: unknown backend");
}

std::optional<Backend> backend_from_name(std::string_view name) {
    if (name == "nonlinear") return Backend::Nonlinear;
    if (name == "unit") return Backend::LinearUnit;
    if (name == "empty") return Backend::LinearEmpty;
    if (name == "strong") return Backend::StrongExtract;
    if (name == "oracle") return Backend::Oracle;
    return std::nullopt;
}

SeqTable::SeqTable(SeqKind kind, Backend backend)
    : kind_(kind),
      backend_(backend),
      first_index_((kind == SeqKind::C || kind == SeqKind::D) ? -1 : 0) {}

const Rational& SeqTable::at(int x) const {
    if (!has(x)) {
        throw std::invalid_argument("SeqTable: index not in computed prefix");
    }
    return values_[static_cast<size_t>(x - first_index_)];
}

SeqTable seeded_c_table(Backend backend) {
    SeqTable t(SeqKind::C, backend);
    t.append(Rational(1));  // C_{-1} = 1
    return t;
}

SeqTable seeded_d_table(Backend backend) {
    SeqTable t(SeqKind::D, backend);
    t.append(Rational(1));  // D_{-1} = 1
    return t;
}

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

void require_prefix(const SeqTable& t, SeqKind kind, int up_to, const char* who) {
    if (t.kind() != kind) {
        throw std::invalid_argument(std::string(who) + ": wrong sequence kind");
    }
    if (t.max_index() < up_to) {
        throw std::invalid_argument(std::string(who) + ": insufficient prefix");
    }
}

Rational beta_sum_c(int x, const SeqTable& c_prefix, int j_hi) {
    FactorialCache fact;
    Rational sum;
    for (int j = -1; j <= j_hi; ++j) {
        Rational term = c_prefix.at(j) / Rational(Integer(j + 2) * fact(x - j));
        sum += (parity_sign(x - j) > 0) ? term : -term;
    }
    return sum;
}

Rational beta_sum_d(int x, const SeqTable& d_prefix, int j_hi) {
    FactorialCache fact;
    Rational sum;
    for (int j = -1; j <= j_hi; ++j) {
        Rational term = d_prefix.at(j) / Rational(fact(j + 2) * fact(x - j));
        sum += (parity_sign(x - j) > 0) ? term : -term;
    }
    return sum;
}

}  // namespace

Rational beta(int x, const SeqTable& c_prefix) {
    if (x < 0) {
        throw std::invalid_argument("beta: x must be >= 0");
    }
    require_prefix(c_prefix, SeqKind::C, x, "beta");
    return beta_sum_c(x, c_prefix, x);
}

Rational beta_star(int x, const SeqTable& c_prefix) {
    if (x < 0) {
        throw std::invalid_argument("beta_star: x must be >= 0");
    }
    require_prefix(c_prefix, SeqKind::C, x - 1, "beta_star");
    return beta_sum_c(x, c_prefix, x - 1);
}

Rational beta_from_d(int x, const SeqTable& d_prefix) {
    if (x < 0) {
        throw std::invalid_argument("beta_from_d: x must be >= 0");
    }
    require_prefix(d_prefix, SeqKind::D, x, "beta_from_d");
    return beta_sum_d(x, d_prefix, x);
}

Rational beta_star_from_d(int x, const SeqTable& d_prefix) {
    if (x < 0) {
        throw std::invalid_argument("beta_star_from_d: x must be >= 0");
    }
    require_prefix(d_prefix, SeqKind::D, x - 1, "beta_star_from_d");
    return beta_sum_d(x, d_prefix, x - 1);
}

Rational c_next(const SeqTable& c_prefix) {
    if (c_prefix.max_index() < -1) {
        throw std::invalid_argument("c_next: prefix must hold at least C_{-1}");
    }
    const int x = c_prefix.max_index() + 1;
    Rational acc;
    for (int j = 0; j <= x - 1; ++j) {
        acc += c_prefix.at(j) * beta(x - 1 - j, c_prefix) / Rational(j + 2);
    }
    acc += c_prefix.at(-1) * beta_star(x, c_prefix);
    return -acc;
}

Rational d_nonlinear(int x, const SeqTable& d_prefix, Form form) {
    if (x < 0) {
        throw std::invalid_argument("d_nonlinear: x must be >= 0");
    }
    require_prefix(d_prefix, SeqKind::D, x - 1, "d_nonlinear");
    FactorialCache fact;
    Rational acc;
    for (int j = 0; j <= x - 1; ++j) {
        acc += d_prefix.at(j) * beta_from_d(x - 1 - j, d_prefix) / Rational(fact(j + 2));
    }
    acc += d_prefix.at(-1) * beta_star_from_d(x, d_prefix);
    // As printed, the bracket evaluates to C_x = D_x/(x+1)!; the corrected
    // form restores the factorial.
    if (form == Form::PaperLiteral) {
        return -acc;
    }
    return -Rational(fact(x + 1)) * acc;
}

Rational d_linear_unit(int x, const SeqTable& d_prefix, Form form) {
    if (x < 0) {
        throw std::invalid_argument("d_linear_unit: x must be >= 0");
    }
    require_prefix(d_prefix, SeqKind::D, x - 1, "d_linear_unit");
    FactorialCache fact;
    Rational sum;
    for (int j = -1; j <= x - 1; ++j) {
        sum += d_prefix.at(j) / Rational(fact(j + 2) * fact(x + 1 - j));
    }
    const Rational core = Rational(1) - Rational(fact(x + 1)) * sum;
    // Moving the D_x term across leaves a 1/(x+2) coefficient the printed
    // form forgets to divide out.
    if (form == Form::PaperLiteral) {
        return core;
    }
    return Rational(x + 2) * core;
}

Rational d_linear_empty(int x, const SeqTable& d_prefix, Form form) {
    if (x < 0) {
        throw std::invalid_argument("d_linear_empty: x must be >= 0");
    }
    require_prefix(d_prefix, SeqKind::D, x - 1, "d_linear_empty");
    FactorialCache fact;
    Rational sum;
    for (int j = -1; j <= x - 1; ++j) {
        Rational term = d_prefix.at(j) / Rational(fact(j + 2) * fact(x + 1 - j));
        sum += (parity_sign(x + 1 - j) > 0) ? term : -term;
    }
    const Rational core = Rational(fact(x + 1)) * sum;
    if (form == Form::PaperLiteral) {
        return core;
    }
    return Rational(x + 2) * core;
}

Rational d_from_strong(int x, const CoeffTable& table) {
    if (x < -1) {
        throw std::invalid_argument("d_from_strong: x must be >= -1");
    }
    if (!table.has_row(x + 1)) {
        throw std::invalid_argument("d_from_strong: table lacks row x+1");
    }
    return Rational(x + 2) * table.row(x + 1).a(1);
}

SequenceGenerator::SequenceGenerator(Backend backend, Form form)
    : backend_(backend), form_(form), table_(seeded_d_table(backend)) {
    if (backend_ == Backend::StrongExtract) {
        strong_ = std::make_unique<CoeffTable>(CoeffTable::base());
    }
    peak_numerator_bits_ = 1;  // the seed D_{-1} = 1
}

SequenceGenerator::~SequenceGenerator() = default;
SequenceGenerator::SequenceGenerator(SequenceGenerator&&) noexcept = default;
SequenceGenerator& SequenceGenerator::operator=(SequenceGenerator&&) noexcept = default;

void SequenceGenerator::step() {
    const int x = table_.max_index() + 1;
    Rational value;
    switch (backend_) {
        case Backend::Nonlinear: {
            // One fresh O(x) pass for beta*_x; beta_{x-1} completes from the
            // cached beta*_{x-1}.
            const Rational bs_x = beta_star_from_d(x, table_);
            if (x >= 1) {
                beta_.push_back(beta_star_[static_cast<size_t>(x) - 1] +
                                table_.at(x - 1) / Rational(fact_(x + 1)));
            }
            Rational acc;
            for (int j = 0; j <= x - 1; ++j) {
                acc += table_.at(j) * beta_[static_cast<size_t>(x - 1 - j)] / Rational(fact_(j + 2));
            }
            acc += table_.at(-1) * bs_x;
            beta_star_.push_back(bs_x);
            value = (form_ == Form::PaperLiteral) ? -acc : -Rational(fact_(x + 1)) * acc;
            break;
        }
        case Backend::LinearUnit:
            value = d_linear_unit(x, table_, form_);
            break;
        case Backend::LinearEmpty:
            value = d_linear_empty(x, table_, form_);
            break;
        case Backend::StrongExtract:
            while (strong_->max_order() < x + 1) {
                strong_->append(next_row(*strong_));
            }
            value = d_from_strong(x, *strong_);
            break;
        case Backend::Oracle:
            value = oracle::d(x);
            break;
    }
    const long bits = static_cast<long>(mpz_sizeinbase(value.numerator().get_mpz_t(), 2));
    peak_numerator_bits_ = std::max(peak_numerator_bits_, bits);
    table_.append(std::move(value));
}

void SequenceGenerator::extend_to(int x) {
    if (x < -1) {
        throw std::invalid_argument("SequenceGenerator: index must be >= -1");
    }
    while (table_.max_index() < x) {
        step();
    }
}

const Rational& SequenceGenerator::d(int x) {
    extend_to(x);
    return table_.at(x);
}

Rational SequenceGenerator::c(int x) {
    extend_to(x);
    return table_.at(x) / Rational(fact_(x + 1));
}

CSequenceGenerator::CSequenceGenerator() : table_(seeded_c_table(Backend::Nonlinear)) {}

const Rational& CSequenceGenerator::c(int x) {
    if (x < -1) {
        throw std::invalid_argument("CSequenceGenerator: index must be >= -1");
    }
    while (table_.max_index() < x) {
        const int next = table_.max_index() + 1;
        const Rational bs = beta_star(next, table_);
        if (next >= 1) {
            beta_.push_back(beta_star_[static_cast<size_t>(next) - 1] +
                            table_.at(next - 1) / Rational(next + 1));
        }
        Rational acc;
        for (int j = 0; j <= next - 1; ++j) {
            acc += table_.at(j) * beta_[static_cast<size_t>(next - 1 - j)] / Rational(j + 2);
        }
        acc += table_.at(-1) * bs;
        beta_star_.push_back(bs);
        table_.append(-acc);
    }
    return table_.at(x);
}

BernoulliView::BernoulliView(Indexing indexing, std::vector<Rational> values)
    : indexing_(indexing), values_(std::move(values)) {}

const Rational& BernoulliView::at(int index) const {
    if (index < first_index() || index > max_index()) {
        throw std::invalid_argument("BernoulliView: index out of range");
    }
    return values_[static_cast<size_t>(index - first_index())];
}

BernoulliView bernoulli(int n_max, Backend backend, Indexing indexing) {
    if (n_max < 0) {
        throw std::invalid_argument("bernoulli: n_max must be >= 0");
    }
    SequenceGenerator gen(backend);
    gen.extend_to(n_max - 1);
    std::vector<Rational> values;
    values.reserve(static_cast<size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) {
        values.push_back(gen.d(k - 1) / Rational(k + 1));
    }
    return BernoulliView(indexing, std::move(values));
}

}  // namespace powsum
