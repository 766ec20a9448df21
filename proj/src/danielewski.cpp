#include "liepoly/danielewski.hpp"

#include "liepoly/saturation.hpp"

#include <algorithm>

namespace liepoly {

RawPoly RawPoly::monomial(unsigned a, unsigned b, unsigned c, const Rat& coeff) {
    RawPoly r;
    r.add_term({a, b, c}, coeff);
    return r;
}

void RawPoly::add_term(const SurfaceMonomial& m, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

RawPoly operator+(RawPoly l, const RawPoly& r) {
    for (const auto& [m, c] : r.terms_) l.add_term(m, c);
    return l;
}

RawPoly operator-(RawPoly l, const RawPoly& r) {
    for (const auto& [m, c] : r.terms_) l.add_term(m, -c);
    return l;
}

RawPoly operator*(const RawPoly& l, const RawPoly& r) {
    RawPoly out;
    for (const auto& [ml, cl] : l.terms_) {
        for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b, ml.c + mr.c}, cl * cr);
    }
    return out;
}

// ---------------------------------------------------------------------------

SurfaceRing::SurfaceRing(UnivariatePoly p) : p_(std::move(p)), p_prime_(p_.derivative()) {
    if (p_.degree() < 2) throw PreconditionError("danielewski: p(z) must have degree at least 2");
    powers_.push_back(UnivariatePoly({{0, Rat(1)}}));
}

const UnivariatePoly& SurfaceRing::p_power(unsigned k) const {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * p_);
    return powers_[k];
}

SurfaceRingPtr make_surface_ring(const UnivariatePoly& p) { return std::make_shared<const SurfaceRing>(p); }

// ---------------------------------------------------------------------------

SurfacePoly SurfacePoly::constant(SurfaceRingPtr ring, const Rat& c) {
    SurfacePoly f(std::move(ring));
    f.add_monomial(0, 0, 0, c);
    return f;
}

SurfacePoly SurfacePoly::monomial(SurfaceRingPtr ring, unsigned a, unsigned b, unsigned c, const Rat& coeff) {
    SurfacePoly f(std::move(ring));
    f.add_monomial(a, b, c, coeff);
    return f;
}

SurfacePoly SurfacePoly::from_z(SurfaceRingPtr ring, const UnivariatePoly& g) {
    SurfacePoly f(std::move(ring));
    for (const auto& [e, c] : g.terms()) f.add_monomial(0, 0, e, c);
    return f;
}

int SurfacePoly::degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    return static_cast<int>(leading_key().degree());
}

Rat SurfacePoly::coefficient(const SurfaceMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SurfacePoly::add_monomial(unsigned a, unsigned b, unsigned c, const Rat& coeff) {
    if (coeff == 0) return;
    const unsigned k = std::min(a, b);
    auto add = [&](const SurfaceMonomial& m, const Rat& v) {
        auto [it, inserted] = terms_.try_emplace(m, v);
        if (inserted) return;
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    };
    if (k == 0) {
        add({a, b, c}, coeff);
        return;
    }
    for (const auto& [e, pc] : ring_->p_power(k).terms()) add({a - k, b - k, c + e}, coeff * pc);
}

void SurfacePoly::add_scaled(const SurfacePoly& other, const Rat& c) {
    if (c == 0) return;
    for (const auto& [m, v] : other.terms_) add_monomial(m.a, m.b, m.c, c * v);
}

void SurfacePoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

Rat SurfacePoly::evaluate(const Rat& x, const Rat& y, const Rat& z) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) sum += c * rat_pow(x, m.a) * rat_pow(y, m.b) * rat_pow(z, m.c);
    return sum;
}

SurfacePoly operator+(SurfacePoly l, const SurfacePoly& r) {
    l.add_scaled(r, 1);
    return l;
}

SurfacePoly operator-(SurfacePoly l, const SurfacePoly& r) {
    l.add_scaled(r, -1);
    return l;
}

SurfacePoly operator*(const SurfacePoly& l, const SurfacePoly& r) {
    SurfacePoly out(l.ring_);
    for (const auto& [ml, cl] : l.terms_) {
        for (const auto& [mr, cr] : r.terms_) out.add_monomial(ml.a + mr.a, ml.b + mr.b, ml.c + mr.c, cl * cr);
    }
    return out;
}

SurfacePoly operator*(SurfacePoly l, const Rat& c) {
    l.scale(c);
    return l;
}

SurfacePoly reduce_normal_form(const RawPoly& raw, const SurfaceRingPtr& ring) {
    SurfacePoly out(ring);
    for (const auto& [m, c] : raw.terms()) out.add_monomial(m.a, m.b, m.c, c);
    return out;
}

std::string to_string(const SurfacePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const Rat mag = abs(c);
        bool star = false;
        if (m.degree() == 0 || mag != 1) {
            out += rat_to_short_string(mag);
            star = true;
        }
        for (auto [var, e] : {std::pair{'x', m.a}, std::pair{'y', m.b}, std::pair{'z', m.c}}) {
            if (e == 0) continue;
            if (star) out += '*';
            out += var;
            if (e > 1) out += '^' + std::to_string(e);
            star = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool DerivationKeyGreater::operator()(const DerivationKey& l, const DerivationKey& r) const {
    const SurfaceMonomialGreater mono;
    if (l.monomial.degree() != r.monomial.degree()) return l.monomial.degree() > r.monomial.degree();
    if (l.component != r.component) return l.component < r.component;
    return mono(l.monomial, r.monomial);
}

SurfaceDerivation::SurfaceDerivation(SurfacePoly dx, SurfacePoly dy, SurfacePoly dz)
    : images_{std::move(dx), std::move(dy), std::move(dz)} {}

SurfaceDerivation::SurfaceDerivation(const SurfaceRingPtr& ring)
    : images_{SurfacePoly(ring), SurfacePoly(ring), SurfacePoly(ring)} {}

bool SurfaceDerivation::is_well_defined() const {
    const auto& ring = this->ring();
    const SurfacePoly lhs = dx() * SurfacePoly::y(ring) + SurfacePoly::x(ring) * dy() -
                            SurfacePoly::from_z(ring, ring->p_prime()) * dz();
    return lhs.is_zero();
}

bool SurfaceDerivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const SurfacePoly& f) { return f.is_zero(); });
}

int SurfaceDerivation::degree() const {
    int d = kZeroPolyDegree;
    for (const auto& f : images_) d = std::max(d, f.degree());
    return d;
}

DerivationKey SurfaceDerivation::leading_key() const {
    const DerivationKeyGreater greater;
    std::optional<DerivationKey> best;
    for (unsigned i = 0; i < 3; ++i) {
        if (images_[i].is_zero()) continue;
        const DerivationKey k{i, images_[i].leading_key()};
        if (!best || greater(k, *best)) best = k;
    }
    return *best;
}

Rat SurfaceDerivation::coefficient(const DerivationKey& k) const {
    return images_.at(k.component).coefficient(k.monomial);
}

void SurfaceDerivation::add_scaled(const SurfaceDerivation& other, const Rat& c) {
    for (unsigned i = 0; i < 3; ++i) images_[i].add_scaled(other.images_[i], c);
}

void SurfaceDerivation::scale(const Rat& c) {
    for (auto& f : images_) f.scale(c);
}

SurfaceDerivation operator*(const SurfacePoly& f, const SurfaceDerivation& d) {
    return {f * d.images_[0], f * d.images_[1], f * d.images_[2]};
}

DanielewskiGenerators danielewski_generators(const SurfaceRingPtr& ring) {
    const SurfacePoly x = SurfacePoly::x(ring);
    const SurfacePoly y = SurfacePoly::y(ring);
    const SurfacePoly zero(ring);
    const SurfacePoly pp = SurfacePoly::from_z(ring, ring->p_prime());
    SurfaceDerivation d1(pp, zero, y);
    SurfaceDerivation d2(zero, pp, x);
    SurfaceDerivation d3 = y * d1;
    SurfaceDerivation d4 = x * d2;
    return {std::move(d1), std::move(d2), std::move(d3), std::move(d4)};
}

namespace {

/// out += coeff * x^a y^b z^c * f
void add_monomial_times(SurfacePoly& out, unsigned a, unsigned b, unsigned c, const Rat& coeff, const SurfacePoly& f) {
    for (const auto& [m, v] : f.terms()) {
        out.add_monomial(a + m.a, b + m.b, c + m.c, coeff * v);
    }
}

SurfacePoly apply_unchecked(const SurfaceDerivation& d, const SurfacePoly& f) {
    SurfacePoly out(f.ring());
    for (const auto& [m, coeff] : f.terms()) {
        if (m.a > 0) add_monomial_times(out, m.a - 1, m.b, m.c, coeff * m.a, d.dx());
        if (m.b > 0) add_monomial_times(out, m.a, m.b - 1, m.c, coeff * m.b, d.dy());
        if (m.c > 0) add_monomial_times(out, m.a, m.b, m.c - 1, coeff * m.c, d.dz());
    }
    return out;
}

}  // namespace

SurfacePoly apply_derivation(const SurfaceDerivation& d, const SurfacePoly& f) {
    if (!d.is_well_defined()) throw PreconditionError("apply_derivation: derivation does not preserve xy - p(z)");
    return apply_unchecked(d, f);
}

SurfaceDerivation derivation_bracket(const SurfaceDerivation& d, const SurfaceDerivation& e) {
    std::array<SurfacePoly, 3> images{SurfacePoly(d.ring()), SurfacePoly(d.ring()), SurfacePoly(d.ring())};
    for (unsigned i = 0; i < 3; ++i) {
        images[i] = apply_unchecked(d, e.image(i)) - apply_unchecked(e, d.image(i));
    }
    return {std::move(images[0]), std::move(images[1]), std::move(images[2])};
}

bool ContainmentReport::expected_range_present() const {
    const unsigned from = nu >= 2 ? nu - 2 : 0;
    for (unsigned k = from; k <= k_max; ++k) {
        if (!y_theta1.at(k) || !x_theta2.at(k)) return false;
    }
    return true;
}

ContainmentReport surface_closure_containment(const UnivariatePoly& p, unsigned k_max, unsigned working_cap) {
    const SurfaceRingPtr ring = make_surface_ring(p);
    const auto gens = danielewski_generators(ring);
    const std::vector<SurfaceDerivation> generators{gens.d1, gens.d2, gens.d3, gens.d4};
    const int cap = static_cast<int>(working_cap);

    const auto basis = saturate<SurfaceDerivation>(
        generators, working_cap,
        [](const SurfaceDerivation& u, const SurfaceDerivation& v) { return derivation_bracket(u, v); },
        [cap](const SurfaceDerivation& u, const SurfaceDerivation& v) { return u.degree() + v.degree() - 1 <= cap; },
        [cap](const SurfaceDerivation& w) { return w.degree() <= cap; });

    ContainmentReport report;
    report.nu = ring->nu();
    report.k_max = k_max;
    report.working_cap = working_cap;
    report.dimension = basis.size();
    for (unsigned k = 0; k <= k_max; ++k) {
        report.y_theta1.push_back(basis.contains(SurfacePoly::monomial(ring, 0, k, 0) * gens.d1));
        report.x_theta2.push_back(basis.contains(SurfacePoly::monomial(ring, k, 0, 0) * gens.d2));
    }
    return report;
}

std::string format_report(const ContainmentReport& report) {
    std::string out = "nu " + std::to_string(report.nu) + '\n';
    out += "cap " + std::to_string(report.working_cap) + '\n';
    out += "dimension " + std::to_string(report.dimension) + '\n';
    for (unsigned k = 0; k <= report.k_max; ++k) {
        out += "y^k*D1 " + std::to_string(k) + (report.y_theta1[k] ? " present\n" : " absent\n");
    }
    for (unsigned k = 0; k <= report.k_max; ++k) {
        out += "x^k*D2 " + std::to_string(k) + (report.x_theta2[k] ? " present\n" : " absent\n");
    }
    return out;
}

}  // namespace liepoly
