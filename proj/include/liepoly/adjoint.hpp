#pragma once

#include "liepoly/polynomial.hpp"

#include <string>
#include <vector>

namespace liepoly {

/// adj_f^n(g): n-fold iterated Poisson bracket {f, {f, ... {f, g}}}.
BivariatePoly adjoint_power(const BivariatePoly& f, const BivariatePoly& g, unsigned n);

/// Coefficients c[k][n] of adj^n_{x^p - eps*y}(y^q) = sum_k c[k][n] x^(p(q-k)-n) y^k,
/// for n = 0..pq. Row n holds k = 0..floor(q - n/p); anything outside reads as 0.
class CoeffTable {
public:
    CoeffTable(unsigned p, unsigned q, Rat epsilon);

    [[nodiscard]] unsigned p() const { return p_; }
    [[nodiscard]] unsigned q() const { return q_; }
    [[nodiscard]] const Rat& epsilon() const { return epsilon_; }
    [[nodiscard]] unsigned last_row() const { return p_ * q_; }

    /// floor(q - n/p), the largest y-exponent present in row n.
    [[nodiscard]] unsigned row_bound(unsigned n) const;

    [[nodiscard]] Rat coefficient(unsigned k, unsigned n) const;
    [[nodiscard]] const std::vector<Rat>& row(unsigned n) const { return rows_.at(n); }

    /// sum_k c[k][n] x^(p(q-k)-n) y^k
    [[nodiscard]] BivariatePoly reconstruct(unsigned n) const;

private:
    friend CoeffTable lemma2_table(unsigned, unsigned, const Rat&);

    unsigned p_;
    unsigned q_;
    Rat epsilon_;
    std::vector<std::vector<Rat>> rows_;
};

/// Fills every row through c[k][n+1] = eps (p(q-k) - n) c[k][n] + p (k+1) c[k+1][n].
/// Throws PreconditionError unless p, q >= 1.
CoeffTable lemma2_table(unsigned p, unsigned q, const Rat& epsilon);

/// Entries used by the nonvanishing argument, taken from the eps = 1 table.
struct NonvanishingValues {
    Rat c0_top;       // c[0][pq]
    Rat c0_penult;    // c[0][p(q-1)]
    Rat c1_penult;    // c[1][p(q-1)]

    [[nodiscard]] bool top_nonzero() const { return c0_top != 0; }
    [[nodiscard]] bool penult_sum_nonzero() const { return c0_penult + c1_penult != 0; }
};

NonvanishingValues lemma3_check(unsigned p, unsigned q);

/// "n: k=c, k=c, ..." per row, e.g. "3: 0=48, 1=0".
std::string format_table_human(const CoeffTable& t);
/// "n k num/den" per stored entry.
std::string format_table_lines(const CoeffTable& t);

}  // namespace liepoly
