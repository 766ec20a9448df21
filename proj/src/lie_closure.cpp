#include "liepoly/lie_closure.hpp"

#include "liepoly/saturation.hpp"

#include <deque>

namespace liepoly {

ExponentOrbit monomial_closure(unsigned p, unsigned q, unsigned degree_cap) {
    if (p == 0 || q == 0) throw PreconditionError("monomial_closure: p and q must be positive");
    if (degree_cap < p + q) throw PreconditionError("monomial_closure: degree cap must be at least p + q");

    ExponentOrbit orbit{p, q, degree_cap, {}};
    std::deque<Monomial> frontier;
    auto visit = [&](const Monomial& m) {
        if (orbit.exponents.insert(m).second) frontier.push_back(m);
    };
    visit({p, 0});
    visit({0, q});
    while (!frontier.empty()) {
        const Monomial u = frontier.front();
        frontier.pop_front();
        // Snapshot: pairs with later discoveries are handled when those are dequeued.
        const std::vector<Monomial> known(orbit.exponents.begin(), orbit.exponents.end());
        for (const Monomial& v : known) {
            const auto [det, m] = monomial_bracket(u, v);
            if (det == 0 || m.degree() > degree_cap) continue;
            visit(m);
        }
    }
    return orbit;
}

PolyBasis vector_closure(std::span<const BivariatePoly> generators, unsigned working_cap) {
    for (const auto& g : generators) {
        if (g.is_zero()) throw PreconditionError("vector_closure: zero generator");
        if (g.degree() > static_cast<int>(working_cap)) {
            throw PreconditionError("vector_closure: generator degree exceeds working cap");
        }
    }
    const int cap = static_cast<int>(working_cap);
    return saturate<BivariatePoly>(
        generators, working_cap, [](const BivariatePoly& u, const BivariatePoly& v) { return poisson_bracket(u, v); },
        [cap](const BivariatePoly& u, const BivariatePoly& v) { return u.degree() + v.degree() - 2 <= cap; },
        [](const BivariatePoly&) { return true; });
}

std::set<unsigned> univariate_slice(const PolyBasis& basis, Var var) {
    std::set<unsigned> out;
    for (unsigned m = 0; m <= basis.degree_cap(); ++m) {
        const auto power = var == Var::X ? BivariatePoly::monomial(m, 0) : BivariatePoly::monomial(0, m);
        if (basis.contains(power)) out.insert(m);
    }
    return out;
}

std::set<unsigned> univariate_slice(const ExponentOrbit& orbit, Var var) {
    std::set<unsigned> out;
    for (const Monomial& m : orbit.exponents) {
        if (var == Var::X && m.b == 0) out.insert(m.a);
        if (var == Var::Y && m.a == 0) out.insert(m.b);
    }
    return out;
}

PolyBasis orbit_span(const ExponentOrbit& orbit) {
    PolyBasis basis(orbit.degree_cap);
    for (const Monomial& m : orbit.exponents) basis.insert(BivariatePoly::monomial(m.a, m.b));
    return basis;
}

CodimensionReport codimension_report(const PolyBasis& basis, unsigned report_degree) {
    CodimensionReport report;
    for (unsigned d = 0; d <= report_degree; ++d) {
        for (unsigned a = d + 1; a-- > 0;) {
            const Monomial m{a, d - a};
            if (!basis.has_pivot(m)) report.complement.push_back(m);
        }
    }
    report.dimension = report.complement.size();
    return report;
}

std::string format_monomials(std::span<const Monomial> monomials) {
    std::string out;
    for (const auto& m : monomials) out += std::to_string(m.a) + ' ' + std::to_string(m.b) + '\n';
    return out;
}

}  // namespace liepoly
