#pragma once

#include "liepoly/rational.hpp"

#include <compare>
#include <limits>
#include <map>
#include <string>
#include <string_view>

namespace liepoly {

enum class Var { X, Y };

/// Exponent pair of x^a y^b.
struct Monomial {
    unsigned a = 0;
    unsigned b = 0;

    [[nodiscard]] constexpr unsigned degree() const { return a + b; }
    constexpr auto operator<=>(const Monomial&) const = default;
};

/// Graded lexicographic with x > y, sorting the largest monomial first.
struct GrlexGreater {
    constexpr bool operator()(const Monomial& l, const Monomial& r) const {
        if (l.degree() != r.degree()) return l.degree() > r.degree();
        return l.a > r.a;
    }
};

/// Degree of the zero polynomial. Far enough below zero that sums of a few
/// degrees stay negative without overflowing.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min() / 8;

/// Sparse polynomial in x, y with exact rational coefficients. No zero
/// coefficient is ever stored; terms iterate in GrlexGreater order, so the
/// first term is the leading one.
class BivariatePoly {
public:
    using key_type = Monomial;
    using key_compare = GrlexGreater;
    using Terms = std::map<Monomial, Rat, GrlexGreater>;

    BivariatePoly() = default;
    BivariatePoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
    BivariatePoly(int constant) : BivariatePoly(Rat(constant)) {}  // NOLINT

    static BivariatePoly monomial(unsigned a, unsigned b, const Rat& coeff = 1);
    static BivariatePoly x() { return monomial(1, 0); }
    static BivariatePoly y() { return monomial(0, 1); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] int degree() const;
    [[nodiscard]] Rat coefficient(const Monomial& m) const;

    // Preconditions for the two below: !is_zero().
    [[nodiscard]] const Monomial& leading_key() const { return terms_.begin()->first; }
    [[nodiscard]] const Rat& leading_coefficient() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const Rat& c);
    /// *this += c * other
    void add_scaled(const BivariatePoly& other, const Rat& c);
    void scale(const Rat& c);

    template <class F>
    void for_each_key(F&& f) const {
        for (const auto& [m, c] : terms_) f(m);
    }

    [[nodiscard]] Rat evaluate(const Rat& x, const Rat& y) const;
    /// f(sx * x, sy * y)
    [[nodiscard]] BivariatePoly scale_variables(const Rat& sx, const Rat& sy) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rat& c);

    friend BivariatePoly operator+(BivariatePoly l, const BivariatePoly& r) { return l += r; }
    friend BivariatePoly operator-(BivariatePoly l, const BivariatePoly& r) { return l -= r; }
    friend BivariatePoly operator*(BivariatePoly l, const Rat& c) { return l *= c; }
    friend BivariatePoly operator*(const Rat& c, BivariatePoly r) { return r *= c; }
    friend BivariatePoly operator*(const BivariatePoly& l, const BivariatePoly& r);
    friend BivariatePoly operator-(BivariatePoly p) { return p *= Rat(-1); }
    friend bool operator==(const BivariatePoly& l, const BivariatePoly& r) { return l.terms_ == r.terms_; }

private:
    Terms terms_;
};

BivariatePoly pow(const BivariatePoly& base, unsigned exponent);

/// Human form using the input grammar, e.g. "6*x*y^2 - 1/2*y + 3". Zero prints as "0".
std::string to_string(const BivariatePoly& f);

/// Parses terms "c*x^a*y^b" joined by + / -. Coefficients and exponents may be
/// omitted, '*' is optional ("2y", "3/4xy^2"). Throws std::invalid_argument.
BivariatePoly parse_poly(std::string_view text);

/// One term per line, "a b num/den", in canonical (grlex, x > y) order.
std::string serialize_lines(const BivariatePoly& f);
BivariatePoly parse_lines(std::string_view text);

// ---------------------------------------------------------------------------
// Poisson structure

BivariatePoly partial_derivative(const BivariatePoly& f, Var var);

/// {x^p y^q, x^r y^s} = (ps - qr) x^(p+r-1) y^(q+s-1). The coefficient is
/// returned together with the product monomial; when the coefficient is zero
/// the monomial is meaningless.
struct MonomialBracket {
    long coefficient;
    Monomial monomial;
};
MonomialBracket monomial_bracket(const Monomial& u, const Monomial& v);

/// f_x g_y - f_y g_x, evaluated term by term through monomial_bracket.
BivariatePoly poisson_bracket(const BivariatePoly& f, const BivariatePoly& g);

/// Same bracket built from partial derivatives. Kept as an independent path.
BivariatePoly poisson_bracket_by_partials(const BivariatePoly& f, const BivariatePoly& g);

/// f1 d/dx + f2 d/dy
struct PlaneVectorField {
    BivariatePoly f1;
    BivariatePoly f2;

    friend bool operator==(const PlaneVectorField&, const PlaneVectorField&) = default;
};

PlaneVectorField operator*(const Rat& c, const PlaneVectorField& v);
PlaneVectorField operator-(const PlaneVectorField& l, const PlaneVectorField& r);

/// V_f = f_y d/dx - f_x d/dy
PlaneVectorField hamiltonian_field(const BivariatePoly& f);

BivariatePoly field_divergence(const PlaneVectorField& v);

/// v(g) = f1 g_x + f2 g_y
BivariatePoly apply_field(const PlaneVectorField& v, const BivariatePoly& g);

/// Commutator of vector fields with the convention [v, w](g) = v(w(g)) - w(v(g)).
PlaneVectorField field_commutator(const PlaneVectorField& v, const PlaneVectorField& w);

/// Euler field x d/dx + y d/dy.
PlaneVectorField euler_field();

std::string to_string(const PlaneVectorField& v);

}  // namespace liepoly
