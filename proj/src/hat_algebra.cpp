#include "liepoly/hat_algebra.hpp"

#include "liepoly/saturation.hpp"

#include <cctype>
#include <stdexcept>

namespace liepoly {

HatKey HatElement::leading_key() const {
    if (delta_ != 0) return HatKey::delta();
    return {false, poly_.leading_key()};
}

Rat HatElement::coefficient(const HatKey& k) const { return k.is_delta ? delta_ : poly_.coefficient(k.monomial); }

void HatElement::add_scaled(const HatElement& other, const Rat& c) {
    delta_ += c * other.delta_;
    poly_.add_scaled(other.poly_, c);
}

void HatElement::scale(const Rat& c) {
    delta_ *= c;
    poly_.scale(c);
}

BivariatePoly grading_action(const BivariatePoly& f) {
    BivariatePoly out;
    for (const auto& [m, c] : f.terms()) out.add_term(m, c * (static_cast<long>(m.degree()) - 2));
    return out;
}

HatElement hat_bracket(const HatElement& u, const HatElement& v) {
    BivariatePoly f = poisson_bracket(u.poly(), v.poly());
    f.add_scaled(grading_action(v.poly()), u.delta_coeff());
    f.add_scaled(grading_action(u.poly()), -v.delta_coeff());
    return HatElement(std::move(f));
}

HatBasis hat_closure(std::span<const HatElement> generators, unsigned working_cap) {
    for (const auto& g : generators) {
        if (g.is_zero()) throw PreconditionError("hat_closure: zero generator");
        if (g.degree() > static_cast<int>(working_cap)) {
            throw PreconditionError("hat_closure: generator degree exceeds working cap");
        }
    }
    const int cap = static_cast<int>(working_cap);
    return saturate<HatElement>(
        generators, working_cap, [](const HatElement& u, const HatElement& v) { return hat_bracket(u, v); },
        [cap](const HatElement& u, const HatElement& v) { return u.degree() + v.degree() - 2 <= cap; },
        [](const HatElement&) { return true; });
}

HatElement parse_hat_element(std::string_view text) {
    std::string src;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
    }
    const auto pos = src.find("delta");
    if (pos == std::string::npos) return HatElement(parse_poly(src));
    if (src.find("delta", pos + 1) != std::string::npos) {
        throw std::invalid_argument("malformed element '" + src + "': delta appears twice");
    }
    // The delta term runs from the sign before it to the sign after it.
    std::size_t begin = pos;
    while (begin > 0 && src[begin - 1] != '+' && src[begin - 1] != '-') --begin;
    if (begin > 0) --begin;
    const std::size_t end = pos + 5;
    if (end < src.size() && src[end] != '+' && src[end] != '-') {
        throw std::invalid_argument("malformed element '" + src + "': delta must be its own term");
    }
    std::string coeff_text = src.substr(begin, pos - begin);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    Rat coeff = 1;
    if (!coeff_text.empty() && (coeff_text[0] == '+' || coeff_text[0] == '-')) {
        if (coeff_text[0] == '-') coeff = -1;
        coeff_text.erase(0, 1);
    }
    if (!coeff_text.empty()) coeff *= parse_rat(coeff_text);
    std::string rest = src.substr(0, begin) + src.substr(end);
    BivariatePoly poly = rest.empty() ? BivariatePoly{} : parse_poly(rest);
    return {coeff, std::move(poly)};
}

std::string serialize_lines(const HatElement& e) {
    return "delta: " + rat_to_string(e.delta_coeff()) + '\n' + serialize_lines(e.poly());
}

std::string to_string(const HatElement& e) {
    if (e.delta_coeff() == 0) return to_string(e.poly());
    std::string out = e.delta_coeff() == 1 ? "delta" : rat_to_short_string(e.delta_coeff()) + "*delta";
    if (!e.poly().is_zero()) out += " + (" + to_string(e.poly()) + ")";
    return out;
}

BivariatePoly hamiltonian_of_vertical_shear(unsigned s) { return BivariatePoly::monomial(s + 1, 0, Rat(-1, s + 1)); }

BivariatePoly hamiltonian_of_horizontal_shear(unsigned r) { return BivariatePoly::monomial(0, r + 1, Rat(1, r + 1)); }

}  // namespace liepoly
