#pragma once

#include "liepoly/echelon.hpp"
#include "liepoly/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>

namespace liepoly {

/// Coordinate of the extended algebra: either delta or a monomial. Delta
/// sorts above every monomial.
struct HatKey {
    bool is_delta = false;
    Monomial monomial{};

    static HatKey delta() { return {true, {}}; }
    friend bool operator==(const HatKey&, const HatKey&) = default;
};

struct HatKeyGreater {
    bool operator()(const HatKey& l, const HatKey& r) const {
        if (l.is_delta != r.is_delta) return l.is_delta;
        if (l.is_delta) return false;
        return GrlexGreater{}(l.monomial, r.monomial);
    }
};

/// alpha * delta + f, where [delta, x^a y^b] = (a + b - 2) x^a y^b.
class HatElement {
public:
    using key_type = HatKey;
    using key_compare = HatKeyGreater;

    HatElement() = default;
    HatElement(Rat delta_coeff, BivariatePoly poly) : delta_(std::move(delta_coeff)), poly_(std::move(poly)) {}
    HatElement(BivariatePoly poly) : poly_(std::move(poly)) {}  // NOLINT(google-explicit-constructor)

    static HatElement delta() { return {Rat(1), BivariatePoly{}}; }

    [[nodiscard]] const Rat& delta_coeff() const { return delta_; }
    [[nodiscard]] const BivariatePoly& poly() const { return poly_; }

    [[nodiscard]] bool is_zero() const { return delta_ == 0 && poly_.is_zero(); }
    /// deg f; a bare multiple of delta counts as degree 0.
    [[nodiscard]] int degree() const { return poly_.is_zero() ? 0 : poly_.degree(); }
    [[nodiscard]] HatKey leading_key() const;
    [[nodiscard]] Rat coefficient(const HatKey& k) const;

    void add_scaled(const HatElement& other, const Rat& c);
    void scale(const Rat& c);

    template <class F>
    void for_each_key(F&& f) const {
        if (delta_ != 0) f(HatKey::delta());
        poly_.for_each_key([&](const Monomial& m) { f(HatKey{false, m}); });
    }

    friend bool operator==(const HatElement&, const HatElement&) = default;

private:
    Rat delta_ = 0;
    BivariatePoly poly_;
};

/// The grading operator x^a y^b -> (a + b - 2) x^a y^b.
BivariatePoly grading_action(const BivariatePoly& f);

/// [a1 delta + f, a2 delta + g] = {f, g} + a1 delta(g) - a2 delta(f)
HatElement hat_bracket(const HatElement& u, const HatElement& v);

using HatBasis = EchelonBasis<HatElement>;

/// Same saturation as vector_closure with an extra delta coordinate; pairs are
/// bracketed when deg u + deg v - 2 <= working_cap.
HatBasis hat_closure(std::span<const HatElement> generators, unsigned working_cap);

/// Polynomial grammar plus at most one term "c*delta" (e.g. "delta+y^3",
/// "-1/2*delta + x"). Throws std::invalid_argument.
HatElement parse_hat_element(std::string_view text);

/// "delta: num/den" followed by the polynomial's line serialization.
std::string serialize_lines(const HatElement& e);
std::string to_string(const HatElement& e);

/// Hamiltonian function h with x^s d/dy = V_h, namely -x^(s+1)/(s+1).
BivariatePoly hamiltonian_of_vertical_shear(unsigned s);
/// Hamiltonian function h with y^r d/dx = V_h, namely y^(r+1)/(r+1).
BivariatePoly hamiltonian_of_horizontal_shear(unsigned r);

}  // namespace liepoly
