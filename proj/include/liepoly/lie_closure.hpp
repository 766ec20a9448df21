#pragma once

#include "liepoly/echelon.hpp"
#include "liepoly/polynomial.hpp"

#include <set>
#include <span>
#include <vector>

namespace liepoly {

using PolyBasis = EchelonBasis<BivariatePoly>;

/// Exponents (a, b) of the monomials reachable from x^p and y^q by brackets
/// whose result has total degree at most degree_cap.
struct ExponentOrbit {
    unsigned p = 0;
    unsigned q = 0;
    unsigned degree_cap = 0;
    std::set<Monomial> exponents;

    [[nodiscard]] bool contains(const Monomial& m) const { return exponents.contains(m); }
};

/// BFS over exponent pairs. (a,b) x (c,d) -> (a+c-1, b+d-1) exactly when
/// ad - bc != 0 and the result has degree <= degree_cap.
/// Throws PreconditionError for p == 0, q == 0 or degree_cap < p + q.
ExponentOrbit monomial_closure(unsigned p, unsigned q, unsigned degree_cap);

/// Saturates span(generators) under the Poisson bracket, only bracketing
/// pairs (u, v) with deg u + deg v - 2 <= working_cap. The result is the
/// largest subspace reachable without passing through degrees above the cap.
/// Throws PreconditionError on a zero generator or one of degree > working_cap.
PolyBasis vector_closure(std::span<const BivariatePoly> generators, unsigned working_cap);

/// {m : var^m is in the subspace}, 0 <= m <= degree_cap. Decided by reducing
/// each pure power against the basis.
std::set<unsigned> univariate_slice(const PolyBasis& basis, Var var);
std::set<unsigned> univariate_slice(const ExponentOrbit& orbit, Var var);

/// The span of {x^a y^b : (a,b) in orbit} as an echelon basis.
PolyBasis orbit_span(const ExponentOrbit& orbit);

/// Monomials of degree <= report_degree that are not pivots of the basis;
/// together they span a complement of (basis ∩ degree <= report_degree).
struct CodimensionReport {
    std::size_t dimension = 0;
    std::vector<Monomial> complement;
};

CodimensionReport codimension_report(const PolyBasis& basis, unsigned report_degree);

/// Sorted "a b" lines for a set of monomials.
std::string format_monomials(std::span<const Monomial> monomials);

}  // namespace liepoly
