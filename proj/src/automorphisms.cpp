#include "liepoly/automorphisms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liepoly {

AutomorphismWord AutomorphismWord::inverse() const {
    AutomorphismWord inv;
    inv.maps.assign(maps.rbegin(), maps.rend());
    for (auto& m : inv.maps) m.param = -m.param;
    return inv;
}

PlanePoint apply_map(const TriangularMap& map, const PlanePoint& point) {
    if (map.kind == ShearKind::L) return {point.x + map.param * rat_pow(point.y, map.exponent), point.y};
    return {point.x, point.y + map.param * rat_pow(point.x, map.exponent)};
}

PointTuple apply_word(const AutomorphismWord& word, const PointTuple& tuple) {
    PointTuple out = tuple;
    for (const auto& map : word.maps) {
        for (auto& pt : out) pt = apply_map(map, pt);
    }
    return out;
}

std::array<BivariatePoly, 2> word_images(const AutomorphismWord& word) {
    std::array<BivariatePoly, 2> f{BivariatePoly::x(), BivariatePoly::y()};
    for (const auto& map : word.maps) {
        if (map.kind == ShearKind::L) {
            f[0] += pow(f[1], map.exponent) * map.param;
        } else {
            f[1] += pow(f[0], map.exponent) * map.param;
        }
    }
    return f;
}

namespace {

BivariatePoly apply_shear_field(ShearField field, unsigned exponent, const BivariatePoly& g) {
    if (field == ShearField::HorizontalYr) {
        return BivariatePoly::monomial(0, exponent) * partial_derivative(g, Var::X);
    }
    return BivariatePoly::monomial(exponent, 0) * partial_derivative(g, Var::Y);
}

BivariatePoly exponential_series(ShearField field, unsigned exponent, const Rat& time, const BivariatePoly& g) {
    constexpr unsigned kMaxTerms = 64;
    BivariatePoly sum = g;
    BivariatePoly term = g;
    for (unsigned k = 1; k <= kMaxTerms; ++k) {
        term = apply_shear_field(field, exponent, term);
        if (term.is_zero()) return sum;
        term *= time / k;
        sum += term;
    }
    throw std::logic_error("exponential series did not terminate");
}

}  // namespace

std::array<BivariatePoly, 2> flow_images(ShearField field, unsigned exponent, const Rat& time) {
    return {exponential_series(field, exponent, time, BivariatePoly::x()),
            exponential_series(field, exponent, time, BivariatePoly::y())};
}

TriangularMap flow_map(ShearField field, unsigned exponent, const Rat& time) {
    const auto images = flow_images(field, exponent, time);
    if (field == ShearField::HorizontalYr) {
        const BivariatePoly shift = images[0] - BivariatePoly::x();
        const Rat alpha = shift.coefficient({0, exponent});
        if (images[1] != BivariatePoly::y() || shift != BivariatePoly::monomial(0, exponent, alpha)) {
            throw std::logic_error("flow of y^r d/dx is not a horizontal shear");
        }
        return {ShearKind::L, exponent, alpha};
    }
    const BivariatePoly shift = images[1] - BivariatePoly::y();
    const Rat beta = shift.coefficient({exponent, 0});
    if (images[0] != BivariatePoly::x() || shift != BivariatePoly::monomial(exponent, 0, beta)) {
        throw std::logic_error("flow of x^s d/dy is not a vertical shear");
    }
    return {ShearKind::R, exponent, beta};
}

// ---------------------------------------------------------------------------

namespace {

bool powers_distinct_nonzero(const PointTuple& t, unsigned d, bool use_x) {
    std::set<Rat> seen;
    for (const auto& pt : t) {
        const Rat& v = use_x ? pt.x : pt.y;
        if (v == 0) return false;
        if (!seen.insert(rat_pow(v, d)).second) return false;
    }
    return true;
}

bool all_x_nonzero(const PointTuple& t) {
    return std::all_of(t.begin(), t.end(), [](const PlanePoint& p) { return p.x != 0; });
}

bool has_antipodal_pair(const PointTuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[j].x == -t[i].x && t[j].y == -t[i].y) return true;
        }
    }
    return false;
}

Rat choose_parameter(const std::set<Rat>& excluded) {
    for (unsigned i = 0;; ++i) {
        Rat c = candidate_parameter(i);
        if (!excluded.contains(c)) return c;
    }
}

PointTuple swap_coordinates(const PointTuple& t) {
    PointTuple out;
    out.reserve(t.size());
    for (const auto& p : t) out.push_back({p.y, p.x});
    return out;
}

}  // namespace

bool omega_membership(const PointTuple& tuple, unsigned d) {
    return powers_distinct_nonzero(tuple, d, true) && powers_distinct_nonzero(tuple, d, false);
}

bool step_condition_holds(const PointTuple& t, int step) {
    switch (step) {
        case 1:
            return all_x_nonzero(t);
        case 2:
            return all_x_nonzero(t) && !has_antipodal_pair(t);
        case 3:
            return powers_distinct_nonzero(t, 2, true);
        case 4:
            return powers_distinct_nonzero(t, 2, true) && powers_distinct_nonzero(t, 1, false);
        default:
            throw std::invalid_argument("step must be 1..4");
    }
}

Rat candidate_parameter(unsigned index) {
    if (index == 0) return 0;
    const long magnitude = static_cast<long>((index + 1) / 2);
    return index % 2 == 1 ? Rat(magnitude) : Rat(-magnitude);
}

PointTuple random_point_tuple(std::size_t m, std::mt19937_64& rng) {
    auto coordinate = [&rng] {
        const long num = static_cast<long>(rng() % 7) - 3;
        const long den = static_cast<long>(rng() % 3) + 1;
        Rat v(num, den);
        v.canonicalize();
        return v;
    };
    PointTuple t;
    while (t.size() < m) {
        PlanePoint p{coordinate(), coordinate()};
        if (p.x == 0 && p.y == 0) continue;
        if (std::find(t.begin(), t.end(), p) != t.end()) continue;
        t.push_back(std::move(p));
    }
    return t;
}

NormalizationResult normalize_tuple(const PointTuple& tuple, bool mirrored) {
    if (tuple.empty()) throw PreconditionError("normalize_tuple: empty tuple");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i].x == 0 && tuple[i].y == 0) {
            throw PreconditionError("normalize_tuple: point " + std::to_string(i + 1) + " is the origin");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (tuple[i] == tuple[j]) {
                throw PreconditionError("normalize_tuple: points " + std::to_string(j + 1) + " and " +
                                        std::to_string(i + 1) + " coincide");
            }
        }
    }

    if (mirrored) {
        NormalizationResult r = normalize_tuple(swap_coordinates(tuple), false);
        for (auto& m : r.word.maps) m.kind = m.kind == ShearKind::L ? ShearKind::R : ShearKind::L;
        r.image = swap_coordinates(r.image);
        for (auto& s : r.stages) s = swap_coordinates(s);
        return r;
    }

    NormalizationResult result;
    PointTuple cur = tuple;
    const std::size_t m = cur.size();
    auto apply = [&](ShearKind kind, unsigned e, const Rat& param, int step) {
        const TriangularMap map{kind, e, param};
        result.word.maps.push_back(map);
        for (auto& pt : cur) pt = apply_map(map, pt);
        result.stages[step - 1] = cur;
    };

    // Step 1: x_i != 0.
    {
        std::set<Rat> excluded;
        for (const auto& p : cur) {
            if (p.y != 0) excluded.insert(-p.x / p.y);
        }
        apply(ShearKind::L, 1, choose_parameter(excluded), 1);
    }
    // Step 2: no pair (x, y), (-x, -y).
    {
        std::set<Rat> excluded;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (cur[j].x == -cur[i].x) excluded.insert(-(cur[i].y + cur[j].y) / (2 * cur[i].x * cur[i].x));
            }
        }
        apply(ShearKind::R, 2, choose_parameter(excluded), 2);
    }
    // Step 3: x_i != 0 and x_i^2 pairwise distinct.
    {
        std::set<Rat> excluded;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& pi = cur[i];
            if (pi.y != 0) excluded.insert(-pi.x / pi.y);
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto& pj = cur[j];
                if (pi.y != pj.y) excluded.insert((pj.x - pi.x) / (pi.y - pj.y));
                if (pi.y != -pj.y) excluded.insert(-(pi.x + pj.x) / (pi.y + pj.y));
            }
        }
        apply(ShearKind::L, 1, choose_parameter(excluded), 3);
    }
    // Step 4: y_i != 0 and y_i pairwise distinct.
    {
        std::set<Rat> excluded;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& pi = cur[i];
            excluded.insert(-pi.y / (pi.x * pi.x));
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto& pj = cur[j];
                excluded.insert((pi.y - pj.y) / (pj.x * pj.x - pi.x * pi.x));
            }
        }
        apply(ShearKind::R, 2, choose_parameter(excluded), 4);
    }
    result.image = cur;
    return result;
}

bool root_lattice_test(unsigned r, unsigned s) {
    const long det = 1 - static_cast<long>(r) * static_cast<long>(s);
    return det == 1 || det == -1;
}

ProgressionParameters progression_parameters(unsigned r, unsigned s) {
    return {static_cast<long>(r) * static_cast<long>(s) - 1, r + 1, s + 1};
}

// ---------------------------------------------------------------------------

UnivariatePoly::UnivariatePoly(std::map<unsigned, Rat> coeffs) {
    for (auto& [e, c] : coeffs) add_term(e, c);
}

UnivariatePoly UnivariatePoly::from_dense(const std::vector<Rat>& coeffs) {
    UnivariatePoly p;
    for (unsigned e = 0; e < coeffs.size(); ++e) p.add_term(e, coeffs[e]);
    return p;
}

Rat UnivariatePoly::coefficient(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat UnivariatePoly::evaluate(const Rat& z) const {
    Rat sum = 0;
    for (const auto& [e, c] : terms_) sum += c * rat_pow(z, e);
    return sum;
}

UnivariatePoly UnivariatePoly::derivative() const {
    UnivariatePoly out;
    for (const auto& [e, c] : terms_) {
        if (e > 0) out.add_term(e - 1, c * e);
    }
    return out;
}

void UnivariatePoly::add_term(unsigned e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

UnivariatePoly operator*(const UnivariatePoly& l, const UnivariatePoly& r) {
    UnivariatePoly out;
    for (const auto& [el, cl] : l.terms_) {
        for (const auto& [er, cr] : r.terms_) out.add_term(el + er, cl * cr);
    }
    return out;
}

UnivariatePoly operator+(const UnivariatePoly& l, const UnivariatePoly& r) {
    UnivariatePoly out = l;
    for (const auto& [e, c] : r.terms_) out.add_term(e, c);
    return out;
}

std::string to_string(const UnivariatePoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const Rat mag = abs(c);
        if (e == 0 || mag != 1) {
            out += rat_to_short_string(mag);
            if (e > 0) out += '*';
        }
        if (e > 0) out += var;
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

std::string serialize_lines(const UnivariatePoly& f) {
    std::string out;
    for (const auto& [e, c] : f.terms()) out += std::to_string(e) + ' ' + rat_to_string(c) + '\n';
    return out;
}

UnivariatePoly interpolate(const std::vector<Rat>& zs, unsigned d0, unsigned d) {
    if (zs.empty()) throw PreconditionError("interpolate: need at least one node");
    if (d == 0) throw PreconditionError("interpolate: d must be positive");
    const Rat& target = zs.back();
    if (target == 0) throw PreconditionError("interpolate: z_m must be nonzero");
    const Rat target_pow = rat_pow(target, d);
    UnivariatePoly f({{d0, Rat(1)}});
    for (std::size_t j = 0; j + 1 < zs.size(); ++j) {
        const Rat node_pow = rat_pow(zs[j], d);
        if (node_pow == target_pow) {
            throw PreconditionError("interpolate: z_m^d equals z_" + std::to_string(j + 1) + "^d");
        }
        f = f * UnivariatePoly({{d, Rat(1)}, {0, -node_pow}});
    }
    const Rat scale = Rat(1) / f.evaluate(target);
    UnivariatePoly out;
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * scale);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Polynomial in a formal variable s with coefficients in K[x, y].
using SeriesInS = std::map<unsigned, BivariatePoly>;

void add_into(SeriesInS& acc, unsigned e, const BivariatePoly& c) {
    BivariatePoly& slot = acc[e];
    slot += c;
    if (slot.is_zero()) acc.erase(e);
}

SeriesInS multiply(const SeriesInS& l, const SeriesInS& r) {
    SeriesInS out;
    for (const auto& [el, cl] : l) {
        for (const auto& [er, cr] : r) add_into(out, el + er, cl * cr);
    }
    return out;
}

SeriesInS add(const SeriesInS& l, const SeriesInS& r) {
    SeriesInS out = l;
    for (const auto& [e, c] : r) add_into(out, e, c);
    return out;
}

/// s d/ds, which equals d/dt when s = e^t.
SeriesInS euler_derivative(const SeriesInS& f) {
    SeriesInS out;
    for (const auto& [e, c] : f) {
        if (e > 0) add_into(out, e, c * Rat(e));
    }
    return out;
}

BivariatePoly at_s_equal_one(const SeriesInS& f) {
    BivariatePoly out;
    for (const auto& [e, c] : f) out += c;
    return out;
}

}  // namespace

bool verify_exponential_flow() {
    const BivariatePoly x = BivariatePoly::x();
    const BivariatePoly y = BivariatePoly::y();
    const BivariatePoly three_y2 = BivariatePoly::monomial(0, 2, 3);

    const SeriesInS image_x{{1, x - three_y2}, {2, three_y2}};
    const SeriesInS image_y{{1, y}};

    // Field (x + 3y^2) d/dx + y d/dy evaluated at the image point.
    const SeriesInS field_x = add(image_x, multiply(SeriesInS{{0, BivariatePoly(3)}}, multiply(image_y, image_y)));
    const SeriesInS field_y = image_y;

    return euler_derivative(image_x) == field_x && euler_derivative(image_y) == field_y &&
           at_s_equal_one(image_x) == x && at_s_equal_one(image_y) == y;
}

// ---------------------------------------------------------------------------

std::string serialize_word(const AutomorphismWord& word) {
    std::string out;
    for (const auto& m : word.maps) {
        out += m.kind == ShearKind::L ? "L " : "R ";
        out += std::to_string(m.exponent) + ' ' + rat_to_string(m.param) + '\n';
    }
    return out;
}

AutomorphismWord parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    AutomorphismWord w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string kind;
        long e = -1;
        std::string param;
        std::string extra;
        if (!(ls >> kind >> e >> param) || (ls >> extra) || (kind != "L" && kind != "R") || e < 0) {
            throw std::invalid_argument("malformed word line '" + line + "'");
        }
        w.maps.push_back({kind == "L" ? ShearKind::L : ShearKind::R, static_cast<unsigned>(e), parse_rat(param)});
    }
    return w;
}

std::string serialize_tuple(const PointTuple& tuple) {
    std::string out;
    for (const auto& p : tuple) out += rat_to_string(p.x) + ' ' + rat_to_string(p.y) + '\n';
    return out;
}

PointTuple parse_tuple(std::string_view text) {
    std::istringstream in{std::string(text)};
    PointTuple t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string xs;
        std::string ys;
        std::string extra;
        if (!(ls >> xs >> ys) || (ls >> extra)) throw std::invalid_argument("malformed point line '" + line + "'");
        t.push_back({parse_rat(xs), parse_rat(ys)});
    }
    return t;
}

}  // namespace liepoly
