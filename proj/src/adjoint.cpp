#include "liepoly/adjoint.hpp"

namespace liepoly {

BivariatePoly adjoint_power(const BivariatePoly& f, const BivariatePoly& g, unsigned n) {
    BivariatePoly cur = g;
    for (unsigned i = 0; i < n && !cur.is_zero(); ++i) cur = poisson_bracket(f, cur);
    return cur;
}

CoeffTable::CoeffTable(unsigned p, unsigned q, Rat epsilon) : p_(p), q_(q), epsilon_(std::move(epsilon)) {}

unsigned CoeffTable::row_bound(unsigned n) const { return (p_ * q_ - n) / p_; }

Rat CoeffTable::coefficient(unsigned k, unsigned n) const {
    if (n >= rows_.size() || k >= rows_[n].size()) return 0;
    return rows_[n][k];
}

BivariatePoly CoeffTable::reconstruct(unsigned n) const {
    BivariatePoly out;
    const auto& r = rows_.at(n);
    for (unsigned k = 0; k < r.size(); ++k) out.add_term({p_ * (q_ - k) - n, k}, r[k]);
    return out;
}

CoeffTable lemma2_table(unsigned p, unsigned q, const Rat& epsilon) {
    if (p == 0 || q == 0) throw PreconditionError("lemma2_table: p and q must be positive");
    CoeffTable t(p, q, epsilon);
    const unsigned last = p * q;
    t.rows_.reserve(last + 1);

    std::vector<Rat> row0(q + 1, Rat(0));
    row0[q] = 1;
    t.rows_.push_back(std::move(row0));

    for (unsigned n = 0; n < last; ++n) {
        const unsigned bound = t.row_bound(n + 1);
        std::vector<Rat> next(bound + 1);
        for (unsigned k = 0; k <= bound; ++k) {
            const long x_exp = static_cast<long>(p) * (q - k) - n;
            next[k] = epsilon * x_exp * t.coefficient(k, n) + Rat(p * (k + 1)) * t.coefficient(k + 1, n);
        }
        t.rows_.push_back(std::move(next));
    }
    return t;
}

NonvanishingValues lemma3_check(unsigned p, unsigned q) {
    if (p == 0 || q == 0) throw PreconditionError("lemma3_check: p and q must be positive");
    const CoeffTable t = lemma2_table(p, q, 1);
    const unsigned penult = p * (q - 1);
    return {t.coefficient(0, p * q), t.coefficient(0, penult), t.coefficient(1, penult)};
}

std::string format_table_human(const CoeffTable& t) {
    std::string out;
    for (unsigned n = 0; n <= t.last_row(); ++n) {
        out += std::to_string(n) + ":";
        const auto& r = t.row(n);
        for (unsigned k = 0; k < r.size(); ++k) {
            out += (k == 0 ? " " : ", ");
            out += std::to_string(k) + "=" + rat_to_short_string(r[k]);
        }
        out += '\n';
    }
    return out;
}

std::string format_table_lines(const CoeffTable& t) {
    std::string out;
    for (unsigned n = 0; n <= t.last_row(); ++n) {
        const auto& r = t.row(n);
        for (unsigned k = 0; k < r.size(); ++k) {
            out += std::to_string(n) + ' ' + std::to_string(k) + ' ' + rat_to_string(r[k]) + '\n';
        }
    }
    return out;
}

}  // namespace liepoly
