#pragma once

#include "liepoly/automorphisms.hpp"
#include "liepoly/echelon.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liepoly {

/// Monomial x^a y^b z^c. In normal form a * b == 0.
struct SurfaceMonomial {
    unsigned a = 0;
    unsigned b = 0;
    unsigned c = 0;

    [[nodiscard]] unsigned degree() const { return a + b + c; }
    auto operator<=>(const SurfaceMonomial&) const = default;
};

/// Degree first, then x, then y, largest first.
struct SurfaceMonomialGreater {
    bool operator()(const SurfaceMonomial& l, const SurfaceMonomial& r) const {
        if (l.degree() != r.degree()) return l.degree() > r.degree();
        if (l.a != r.a) return l.a > r.a;
        return l.b > r.b;
    }
};

using SurfaceTerms = std::map<SurfaceMonomial, Rat, SurfaceMonomialGreater>;

/// Polynomial in x, y, z before reduction modulo xy - p(z).
class RawPoly {
public:
    RawPoly() = default;
    static RawPoly monomial(unsigned a, unsigned b, unsigned c, const Rat& coeff = 1);

    [[nodiscard]] const SurfaceTerms& terms() const { return terms_; }
    void add_term(const SurfaceMonomial& m, const Rat& coeff);

    friend RawPoly operator+(RawPoly l, const RawPoly& r);
    friend RawPoly operator-(RawPoly l, const RawPoly& r);
    friend RawPoly operator*(const RawPoly& l, const RawPoly& r);

private:
    SurfaceTerms terms_;
};

/// Defining data of Y_p = {xy = p(z)} with cached powers of p.
class SurfaceRing {
public:
    /// Throws PreconditionError when deg p < 2.
    explicit SurfaceRing(UnivariatePoly p);

    [[nodiscard]] const UnivariatePoly& p() const { return p_; }
    [[nodiscard]] const UnivariatePoly& p_prime() const { return p_prime_; }
    [[nodiscard]] unsigned nu() const { return static_cast<unsigned>(p_.degree()); }
    const UnivariatePoly& p_power(unsigned k) const;

private:
    UnivariatePoly p_;
    UnivariatePoly p_prime_;
    mutable std::vector<UnivariatePoly> powers_;
};

using SurfaceRingPtr = std::shared_ptr<const SurfaceRing>;
SurfaceRingPtr make_surface_ring(const UnivariatePoly& p);

/// Element of K[x,y,z]/(xy - p(z)) in the basis {x^a z^c} ∪ {y^b z^c, b >= 1}.
class SurfacePoly {
public:
    using key_type = SurfaceMonomial;
    using key_compare = SurfaceMonomialGreater;

    explicit SurfacePoly(SurfaceRingPtr ring) : ring_(std::move(ring)) {}

    static SurfacePoly constant(SurfaceRingPtr ring, const Rat& c);
    /// x^a y^b z^c, reduced.
    static SurfacePoly monomial(SurfaceRingPtr ring, unsigned a, unsigned b, unsigned c, const Rat& coeff = 1);
    static SurfacePoly x(SurfaceRingPtr ring) { return monomial(std::move(ring), 1, 0, 0); }
    static SurfacePoly y(SurfaceRingPtr ring) { return monomial(std::move(ring), 0, 1, 0); }
    static SurfacePoly z(SurfaceRingPtr ring) { return monomial(std::move(ring), 0, 0, 1); }
    /// f(z) embedded.
    static SurfacePoly from_z(SurfaceRingPtr ring, const UnivariatePoly& f);

    [[nodiscard]] const SurfaceRingPtr& ring() const { return ring_; }
    [[nodiscard]] const SurfaceTerms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int degree() const;
    [[nodiscard]] Rat coefficient(const SurfaceMonomial& m) const;
    [[nodiscard]] const SurfaceMonomial& leading_key() const { return terms_.begin()->first; }

    /// Adds coeff * x^a y^b z^c, rewriting xy -> p(z).
    void add_monomial(unsigned a, unsigned b, unsigned c, const Rat& coeff);
    void add_scaled(const SurfacePoly& other, const Rat& c);
    void scale(const Rat& c);
    template <class F>
    void for_each_key(F&& f) const {
        for (const auto& [m, c] : terms_) f(m);
    }

    [[nodiscard]] Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const;

    friend SurfacePoly operator+(SurfacePoly l, const SurfacePoly& r);
    friend SurfacePoly operator-(SurfacePoly l, const SurfacePoly& r);
    friend SurfacePoly operator*(const SurfacePoly& l, const SurfacePoly& r);
    friend SurfacePoly operator*(SurfacePoly l, const Rat& c);
    friend bool operator==(const SurfacePoly& l, const SurfacePoly& r) { return l.terms_ == r.terms_; }

private:
    SurfaceRingPtr ring_;
    SurfaceTerms terms_;
};

/// Rewrites every x^a y^b z^c as x^(a-k) y^(b-k) z^c p(z)^k, k = min(a, b).
SurfacePoly reduce_normal_form(const RawPoly& raw, const SurfaceRingPtr& ring);

std::string to_string(const SurfacePoly& f);

/// Coordinate of a derivation viewed as a vector: which image (0 = Dx,
/// 1 = Dy, 2 = Dz) and which monomial.
struct DerivationKey {
    unsigned component = 0;
    SurfaceMonomial monomial{};
    friend bool operator==(const DerivationKey&, const DerivationKey&) = default;
};

struct DerivationKeyGreater {
    bool operator()(const DerivationKey& l, const DerivationKey& r) const;
};

/// Derivation of K[Y_p] given by the images of x, y, z.
class SurfaceDerivation {
public:
    using key_type = DerivationKey;
    using key_compare = DerivationKeyGreater;

    SurfaceDerivation(SurfacePoly dx, SurfacePoly dy, SurfacePoly dz);
    explicit SurfaceDerivation(const SurfaceRingPtr& ring);

    [[nodiscard]] const SurfacePoly& image(unsigned component) const { return images_.at(component); }
    [[nodiscard]] const SurfacePoly& dx() const { return images_[0]; }
    [[nodiscard]] const SurfacePoly& dy() const { return images_[1]; }
    [[nodiscard]] const SurfacePoly& dz() const { return images_[2]; }
    [[nodiscard]] const SurfaceRingPtr& ring() const { return images_[0].ring(); }

    /// Dx * y + x * Dy - p'(z) * Dz == 0, i.e. D preserves (xy - p(z)).
    [[nodiscard]] bool is_well_defined() const;

    [[nodiscard]] bool is_zero() const;
    /// Largest image degree.
    [[nodiscard]] int degree() const;
    [[nodiscard]] DerivationKey leading_key() const;
    [[nodiscard]] Rat coefficient(const DerivationKey& k) const;
    void add_scaled(const SurfaceDerivation& other, const Rat& c);
    void scale(const Rat& c);
    template <class F>
    void for_each_key(F&& f) const {
        for (unsigned i = 0; i < 3; ++i) {
            images_[i].for_each_key([&](const SurfaceMonomial& m) { f(DerivationKey{i, m}); });
        }
    }

    /// f * D
    friend SurfaceDerivation operator*(const SurfacePoly& f, const SurfaceDerivation& d);
    friend bool operator==(const SurfaceDerivation& l, const SurfaceDerivation& r) { return l.images_ == r.images_; }

private:
    std::array<SurfacePoly, 3> images_;
};

/// D1 = p' d/dx + y d/dz, D2 = p' d/dy + x d/dz, D3 = y D1, D4 = x D2.
struct DanielewskiGenerators {
    SurfaceDerivation d1;
    SurfaceDerivation d2;
    SurfaceDerivation d3;
    SurfaceDerivation d4;
};
DanielewskiGenerators danielewski_generators(const SurfaceRingPtr& ring);

/// D(f) extended by the Leibniz rule. Throws PreconditionError if D is not
/// well defined.
SurfacePoly apply_derivation(const SurfaceDerivation& d, const SurfacePoly& f);

/// [D, E](w) = D(E(w)) - E(D(w)) on w = x, y, z.
SurfaceDerivation derivation_bracket(const SurfaceDerivation& d, const SurfaceDerivation& e);

struct ContainmentReport {
    unsigned nu = 0;
    unsigned k_max = 0;
    unsigned working_cap = 0;
    std::size_t dimension = 0;
    std::vector<bool> y_theta1;  // y^k D1 in the span, k = 0..k_max
    std::vector<bool> x_theta2;  // x^k D2 in the span, k = 0..k_max

    /// Every k with nu - 2 <= k <= k_max is present on both sides.
    [[nodiscard]] bool expected_range_present() const;
};

/// Saturates span(D1..D4) under derivation_bracket, dropping brackets whose
/// image degree exceeds working_cap, and reports which y^k D1, x^k D2 lie in it.
ContainmentReport surface_closure_containment(const UnivariatePoly& p, unsigned k_max, unsigned working_cap);

std::string format_report(const ContainmentReport& report);

}  // namespace liepoly
