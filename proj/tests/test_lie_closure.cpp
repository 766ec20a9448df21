#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liepoly/lie_closure.hpp"
#include "support/generators.hpp"

#include <algorithm>

using namespace liepoly;
using testsupport::dense_rank;
using testsupport::in_span;
using testsupport::naive_exponent_closure;
using testsupport::progression;

namespace {

BivariatePoly P(const char* text) { return parse_poly(text); }

bool contains(const PolyBasis& b, const char* text) { return b.contains(P(text)); }

std::vector<BivariatePoly> rows_of(const PolyBasis& b) {
    std::vector<BivariatePoly> out;
    for (const auto& [pivot, row] : b.rows()) out.push_back(row);
    return out;
}

std::set<Monomial> pivot_set(const PolyBasis& b, int max_degree) {
    std::set<Monomial> out;
    for (const auto& m : b.pivots()) {
        if (static_cast<int>(m.degree()) <= max_degree) out.insert(m);
    }
    return out;
}

PolyBasis closure(std::vector<BivariatePoly> gens, unsigned cap) { return vector_closure(gens, cap); }

}  // namespace

TEST_CASE("monomial orbit examples") {
    CHECK(monomial_closure(2, 2, 20).exponents == std::set<Monomial>{{2, 0}, {0, 2}, {1, 1}});
    CHECK(monomial_closure(1, 3, 20).exponents == std::set<Monomial>{{1, 0}, {0, 0}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(univariate_slice(monomial_closure(3, 3, 30), Var::X) == progression(3, 3, 30));
}

TEST_CASE("monomial orbit preconditions") {
    CHECK_THROWS_AS(monomial_closure(2, 3, 4), PreconditionError);
    CHECK_THROWS_AS(monomial_closure(0, 3, 10), PreconditionError);
    CHECK_NOTHROW(monomial_closure(2, 3, 5));
}

TEST_CASE("monomial orbit agrees with a naive fixed-point oracle") {
    for (unsigned p = 1; p <= 6; ++p) {
        for (unsigned q = 1; q <= 6; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(monomial_closure(p, q, 20).exponents == naive_exponent_closure(p, q, 20));
        }
    }
}

TEST_CASE("gap structure of pure-power slices") {
    CHECK(univariate_slice(monomial_closure(2, 3, 40), Var::X) == progression(2, 1, 40));
    CHECK(univariate_slice(monomial_closure(2, 5, 40), Var::Y) == progression(5, 3, 40));
    for (unsigned p = 2; p <= 6; ++p) {
        for (unsigned q = 2; q <= 6; ++q) {
            if (std::max(p, q) < 3) continue;
            const long step = static_cast<long>(p) * q - p - q;
            const auto orbit = monomial_closure(p, q, 30);
            CHECK(univariate_slice(orbit, Var::X) == progression(p, step, 30));
            CHECK(univariate_slice(orbit, Var::Y) == progression(q, step, 30));
        }
    }
}

TEST_CASE("vector closure examples") {
    const auto a0 = closure({P("x^2+2y"), P("y^3")}, 12);
    CHECK(contains(a0, "1"));
    CHECK(contains(a0, "x"));
    CHECK(contains(a0, "x^2"));
    CHECK(contains(a0, "y"));

    const auto single = closure({P("x^3 - y x + 2")}, 10);
    CHECK(single.size() == 1);
    CHECK(single.contains(P("2x^3 - 2xy + 4")));

    const auto b = closure({P("x^2 - y"), P("y^3")}, 12);
    CHECK(contains(b, "x^2"));
    CHECK(contains(b, "y"));
}

TEST_CASE("slices computed by linear algebra") {
    const auto b = closure({P("x^2"), P("y^2")}, 10);
    CHECK(b.size() == 3);
    CHECK(univariate_slice(b, Var::X) == std::set<unsigned>{2});
    CHECK(univariate_slice(b, Var::Y) == std::set<unsigned>{2});

    // x^2 + y^2 alone has no pure power in its span.
    const auto c = closure({P("x^2 + y^2")}, 10);
    CHECK(univariate_slice(c, Var::X).empty());
}

TEST_CASE("vector closure preconditions") {
    CHECK_THROWS_AS(closure({BivariatePoly{}}, 10), PreconditionError);
    CHECK_THROWS_AS(closure({P("x^11")}, 10), PreconditionError);
}

TEST_CASE("codimension reports") {
    const auto r = codimension_report(closure({P("x^3"), P("y^2")}, 20), 14);
    CHECK(r.dimension == 5);
    CHECK(std::set<Monomial>(r.complement.begin(), r.complement.end()) ==
          std::set<Monomial>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}});

    const auto gaps = closure({P("x^2"), P("y^2")}, 20);
    CHECK(codimension_report(gaps, 8).dimension < codimension_report(gaps, 12).dimension);

    const auto empty = closure({}, 10);
    CHECK(codimension_report(empty, 4).dimension == 15);
}

TEST_CASE("echelon invariants and closedness against a dense oracle") {
    const std::vector<std::vector<BivariatePoly>> cases{
        {P("x^2+2y"), P("y^3")},
        {P("x^3"), P("y^2")},
        {P("x^2 - y"), P("y^3")},
        {P("x^2 y + y"), P("x^3 - 1/2 x y^2")},
    };
    const unsigned cap = 9;
    for (const auto& gens : cases) {
        const auto b = closure(gens, cap);
        const auto rows = rows_of(b);
        CHECK(dense_rank(rows) == rows.size());
        for (const auto& [pivot, row] : b.rows()) {
            CHECK(row.leading_key() == pivot);
            CHECK(row.leading_coefficient() == 1);
            CHECK(row.degree() <= static_cast<int>(cap));
            for (const auto& [other_pivot, other] : b.rows()) {
                if (other_pivot != pivot) CHECK(other.coefficient(pivot) == 0);
            }
        }
        for (const auto& g : gens) CHECK(in_span(rows, g));
        for (const auto& u : rows) {
            for (const auto& v : rows) {
                if (u.degree() + v.degree() - 2 <= static_cast<int>(cap)) CHECK(in_span(rows, poisson_bracket(u, v)));
            }
        }
    }
}

TEST_CASE("monomial orbit span equals the echelon closure") {
    for (unsigned p = 2; p <= 5; ++p) {
        for (unsigned q = 2; q <= 5; ++q) {
            const auto orbit = monomial_closure(p, q, 16);
            const auto b = closure({BivariatePoly::monomial(p, 0), BivariatePoly::monomial(0, q)}, 16);
            CHECK(pivot_set(b, 16) == orbit.exponents);
            CHECK(pivot_set(orbit_span(orbit), 16) == orbit.exponents);
        }
    }
}

TEST_CASE("permutation stability") {
    std::vector<BivariatePoly> gens{P("x^2 - y"), P("y^3"), P("x y^2 + x")};
    const auto ref = pivot_set(closure(gens, 10), 10);
    std::sort(gens.begin(), gens.end(), [](const auto& l, const auto& r) { return to_string(l) < to_string(r); });
    do {
        CHECK(pivot_set(closure(gens, 10), 10) == ref);
    } while (std::next_permutation(gens.begin(), gens.end(),
                                   [](const auto& l, const auto& r) { return to_string(l) < to_string(r); }));
}

TEST_CASE("raising the cap never loses low-degree pivots") {
    const std::vector<BivariatePoly> gens{P("x^2+2y"), P("y^3")};
    std::set<Monomial> previous;
    for (unsigned cap = 6; cap <= 14; ++cap) {
        const auto low = pivot_set(closure(gens, cap), 6);
        CHECK(std::includes(low.begin(), low.end(), previous.begin(), previous.end()));
        previous = low;
    }
}

TEST_CASE("monomial text format") {
    const std::vector<Monomial> ms{{2, 0}, {1, 1}};
    CHECK(format_monomials(ms) == "2 0\n1 1\n");
}

TEST_CASE("x^p - y and y^q generate everything up to degree M at cap M + 8") {
    const unsigned M = 6;
    for (const auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {2, 5}, {3, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        const auto b = closure({BivariatePoly::monomial(p, 0) - P("y"), BivariatePoly::monomial(0, q)}, M + 8);
        for (unsigned d = 0; d <= M; ++d) {
            for (unsigned a = 0; a <= d; ++a) CHECK(b.has_pivot({a, d - a}));
        }
    }
}
