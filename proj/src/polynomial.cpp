#include "liepoly/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace liepoly {

BivariatePoly::BivariatePoly(const Rat& constant) {
    if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivariatePoly BivariatePoly::monomial(unsigned a, unsigned b, const Rat& coeff) {
    BivariatePoly p;
    p.add_term({a, b}, coeff);
    return p;
}

int BivariatePoly::degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    return static_cast<int>(leading_key().degree());
}

Rat BivariatePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void BivariatePoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void BivariatePoly::add_scaled(const BivariatePoly& other, const Rat& c) {
    if (c == 0) return;
    for (const auto& [m, v] : other.terms_) add_term(m, c * v);
}

void BivariatePoly::scale(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

Rat BivariatePoly::evaluate(const Rat& x, const Rat& y) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) sum += c * rat_pow(x, m.a) * rat_pow(y, m.b);
    return sum;
}

BivariatePoly BivariatePoly::scale_variables(const Rat& sx, const Rat& sy) const {
    BivariatePoly out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * rat_pow(sx, m.a) * rat_pow(sy, m.b));
    return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rat& c) {
    scale(c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& l, const BivariatePoly& r) {
    BivariatePoly out;
    for (const auto& [ml, cl] : l.terms_) {
        for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b}, cl * cr);
    }
    return out;
}

BivariatePoly pow(const BivariatePoly& base, unsigned exponent) {
    BivariatePoly result(1);
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
}

namespace {

void append_factor(std::string& out, char var, unsigned e, bool& need_star) {
    if (e == 0) return;
    if (need_star) out += '*';
    out += var;
    if (e > 1) out += '^' + std::to_string(e);
    need_star = true;
}

}  // namespace

std::string to_string(const BivariatePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rat mag = abs(c);
        bool need_star = false;
        if (m.degree() == 0 || mag != 1) {
            out += rat_to_short_string(mag);
            need_star = true;
        }
        append_factor(out, 'x', m.a, need_star);
        append_factor(out, 'y', m.b, need_star);
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) {
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
        }
    }

    BivariatePoly parse() {
        if (src_.empty()) fail("empty polynomial");
        BivariatePoly out;
        bool first = true;
        while (pos_ < src_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            parse_term(out, sign);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("malformed polynomial '" + src_ + "' at position " + std::to_string(pos_) +
                                    ": " + why);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += src_[pos_++];
        return d;
    }

    void parse_term(BivariatePoly& out, int sign) {
        Rat coeff = sign;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string lit = digits();
            if (peek() == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) fail("missing denominator");
                lit += '/' + den;
            }
            coeff *= parse_rat(lit);
            any = true;
        }
        Monomial m;
        while (true) {
            const std::size_t save = pos_;
            if (peek() == '*') {
                if (!any) fail("unexpected '*'");
                ++pos_;
            }
            const char v = peek();
            if (v != 'x' && v != 'y') {
                if (pos_ != save) fail("expected 'x' or 'y' after '*'");
                break;
            }
            ++pos_;
            unsigned e = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string d = digits();
                if (d.empty()) fail("missing exponent");
                e = static_cast<unsigned>(std::stoul(d));
            }
            (v == 'x' ? m.a : m.b) += e;
            any = true;
        }
        if (!any) fail("empty term");
        out.add_term(m, coeff);
    }

    std::string src_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string serialize_lines(const BivariatePoly& f) {
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        out += std::to_string(m.a) + ' ' + std::to_string(m.b) + ' ' + rat_to_string(c) + '\n';
    }
    return out;
}

BivariatePoly parse_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    BivariatePoly out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long a = -1;
        long b = -1;
        std::string c;
        std::string extra;
        if (!(ls >> a >> b >> c) || (ls >> extra) || a < 0 || b < 0) {
            throw std::invalid_argument("malformed term line '" + line + "'");
        }
        out.add_term({static_cast<unsigned>(a), static_cast<unsigned>(b)}, parse_rat(c));
    }
    return out;
}

BivariatePoly partial_derivative(const BivariatePoly& f, Var var) {
    BivariatePoly out;
    for (const auto& [m, c] : f.terms()) {
        if (var == Var::X && m.a > 0) out.add_term({m.a - 1, m.b}, c * m.a);
        if (var == Var::Y && m.b > 0) out.add_term({m.a, m.b - 1}, c * m.b);
    }
    return out;
}

MonomialBracket monomial_bracket(const Monomial& u, const Monomial& v) {
    const long det = static_cast<long>(u.a) * v.b - static_cast<long>(u.b) * v.a;
    if (det == 0) return {0, {}};
    // det != 0 forces a + r >= 1 and q + s >= 1.
    return {det, {u.a + v.a - 1, u.b + v.b - 1}};
}

BivariatePoly poisson_bracket(const BivariatePoly& f, const BivariatePoly& g) {
    BivariatePoly out;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            const auto [det, m] = monomial_bracket(mf, mg);
            if (det != 0) out.add_term(m, cf * cg * det);
        }
    }
    return out;
}

BivariatePoly poisson_bracket_by_partials(const BivariatePoly& f, const BivariatePoly& g) {
    return partial_derivative(f, Var::X) * partial_derivative(g, Var::Y) -
           partial_derivative(f, Var::Y) * partial_derivative(g, Var::X);
}

PlaneVectorField operator*(const Rat& c, const PlaneVectorField& v) { return {v.f1 * c, v.f2 * c}; }

PlaneVectorField operator-(const PlaneVectorField& l, const PlaneVectorField& r) {
    return {l.f1 - r.f1, l.f2 - r.f2};
}

PlaneVectorField hamiltonian_field(const BivariatePoly& f) {
    return {partial_derivative(f, Var::Y), -partial_derivative(f, Var::X)};
}

BivariatePoly field_divergence(const PlaneVectorField& v) {
    return partial_derivative(v.f1, Var::X) + partial_derivative(v.f2, Var::Y);
}

BivariatePoly apply_field(const PlaneVectorField& v, const BivariatePoly& g) {
    return v.f1 * partial_derivative(g, Var::X) + v.f2 * partial_derivative(g, Var::Y);
}

PlaneVectorField field_commutator(const PlaneVectorField& v, const PlaneVectorField& w) {
    return {apply_field(v, w.f1) - apply_field(w, v.f1), apply_field(v, w.f2) - apply_field(w, v.f2)};
}

PlaneVectorField euler_field() { return {BivariatePoly::x(), BivariatePoly::y()}; }

std::string to_string(const PlaneVectorField& v) {
    return "(" + to_string(v.f1) + ") d/dx + (" + to_string(v.f2) + ") d/dy";
}

}  // namespace liepoly
