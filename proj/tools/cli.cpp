#include "cli.hpp"

#include "liepoly/adjoint.hpp"
#include "liepoly/danielewski.hpp"
#include "liepoly/lie_closure.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace liepoly::cli {

namespace {

constexpr const char* kGrammar = R"(Polynomial input: terms c*x^a*y^b joined by + or -. The '*' signs, a
coefficient of 1 and an exponent of 1 may be omitted, and c may be a
fraction n/d.  Examples: "x^2+2y", "3/4xy^2 - 1", "-y^3".
Hat-closure generators may contain one extra term c*delta, e.g. "delta+y^3".

Exit status: 0 success, 2 usage error, 3 precondition violation.)";

struct SubcommandSpec {
    const char* name;
    const char* description;
    std::vector<std::pair<const char*, const char*>> options;
    std::vector<std::pair<const char*, const char*>> flags;
};

const std::vector<SubcommandSpec>& subcommand_specs() {
    static const std::vector<SubcommandSpec> specs = {
        {"bracket", "Poisson bracket {f,g} = f_x g_y - f_y g_x", {{"f", "first polynomial"}, {"g", "second polynomial"}}, {}},
        {"hamiltonian", "Hamiltonian field V_f = f_y d/dx - f_x d/dy and its divergence", {{"f", "polynomial"}}, {}},
        {"adjoint-table",
         "Coefficients c_{k,n} of ad(x^p)^n (y^q) with y scaled by eps",
         {{"p", "exponent of x"}, {"q", "exponent of y"}, {"eps", "rational scaling (default 1)"}},
         {}},
        {"lemma3", "Top and penultimate adjoint coefficients and their nonvanishing", {{"p", "exponent of x"}, {"q", "exponent of y"}}, {}},
        {"gap",
         "Pure-power slices of the monomial orbit of x^p, y^q",
         {{"p", "exponent of x"}, {"q", "exponent of y"}, {"cap", "degree cap (default 40)"}},
         {}},
        {"closure",
         "Subalgebra generated by polynomials up to a working degree cap",
         {{"gen", "generator polynomial (repeatable)"}, {"cap", "working degree cap (default 18)"}},
         {{"dump", "also print every basis element"}}},
        {"codim",
         "Monomials of degree <= report-degree outside the generated subalgebra",
         {{"gen", "generator polynomial (repeatable)"},
          {"cap", "working degree cap (default 20)"},
          {"report-degree", "largest degree reported (default 14)"}},
         {}},
        {"hat-closure",
         "Subalgebra of the delta-extended algebra generated by the given elements",
         {{"gen", "generator, may contain c*delta (repeatable)"},
          {"cap", "working degree cap (default 14)"},
          {"report-degree", "largest degree checked for missing monomials (default 8)"}},
         {}},
        {"lattice", "Whether (-1,r) and (s,-1) generate Z^2", {{"r", "exponent r"}, {"s", "exponent s"}}, {}},
        {"interpolate",
         "f = c z^d0 prod_{j<m} (z^d - z_j^d) with f(z_m) = 1",
         {{"zs", "comma-separated rationals z_1,...,z_m"}, {"d0", "exponent d0 (default 0)"}, {"d", "exponent d"}},
         {}},
        {"transitivity",
         "Normalize a point tuple into Omega_1 with L_1 and R_2 shears",
         {{"m", "tuple size for a random tuple"},
          {"seed", "random seed (default 0)"},
          {"points", "explicit tuple \"x,y;x,y;...\""}},
         {{"mirrored", "use L_2 and R_1 instead"}}},
        {"flow-check", "Verify the exponential flow of (x + 3y^2) d/dx + y d/dy", {}, {}},
        {"danielewski",
         "Containment of y^k D1 and x^k D2 in the derivation subalgebra of xy = p(z)",
         {{"coeffs", "coefficients \"c0 c1 ... c_nu\" of p(z)"},
          {"kmax", "largest k reported (default 6)"},
          {"cap", "working degree cap (default 14)"}},
         {}},
    };
    return specs;
}

// Raw option text, gathered by CLI11 and validated afterwards so every
// error can name its flag.
struct RawValues {
    std::map<std::string, std::string> single;
    std::map<std::string, std::vector<std::string>> multi;
    std::map<std::string, bool> flags;
    std::string format = "human";
};

class Validator {
public:
    Validator(const CLI::App& sub, const RawValues& raw) : sub_(sub), raw_(raw) {}

    [[nodiscard]] bool has(const std::string& name) const { return sub_.get_option("--" + name)->count() > 0; }

    [[nodiscard]] const std::string& text(const std::string& name) const {
        if (!has(name)) throw UsageError("--" + name + " is required");
        return raw_.single.at(name);
    }

    [[nodiscard]] unsigned natural(const std::string& name, bool positive) const {
        const std::string& t = text(name);
        long long v = 0;
        const auto* first = t.data();
        const auto* last = t.data() + t.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) throw UsageError("--" + name + ": expected an integer, got '" + t + "'");
        if (positive && v <= 0) throw UsageError(name + " must be positive");
        if (v < 0) throw UsageError(name + " must be nonnegative");
        if (v > 1000000) throw UsageError(name + " is too large");
        return static_cast<unsigned>(v);
    }

    [[nodiscard]] unsigned natural_or(const std::string& name, bool positive, unsigned fallback) const {
        return has(name) ? natural(name, positive) : fallback;
    }

    [[nodiscard]] Rat rational(const std::string& name, const std::string& t) const {
        try {
            return parse_rat(t);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--" + name + ": " + e.what());
        }
    }

    [[nodiscard]] BivariatePoly polynomial(const std::string& name, const std::string& t) const {
        try {
            return parse_poly(t);
        } catch (const std::invalid_argument& e) {
            throw UsageError("--" + name + ": " + e.what());
        }
    }

    [[nodiscard]] const std::vector<std::string>& many(const std::string& name) const {
        if (!has(name)) throw UsageError("--" + name + " is required");
        return raw_.multi.at(name);
    }

    [[nodiscard]] bool flag(const std::string& name) const { return raw_.flags.at(name); }

private:
    const CLI::App& sub_;
    const RawValues& raw_;
};

std::vector<std::string> split(const std::string& text, const std::string& separators) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (separators.find(ch) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (ch != ' ' || separators.find(' ') == std::string::npos) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

PointTuple parse_points(const Validator& v, const std::string& text) {
    PointTuple t;
    for (const auto& item : split(text, ";")) {
        const auto parts = split(item, ",");
        if (parts.size() != 2) throw UsageError("--points: expected \"x,y\", got '" + item + "'");
        t.push_back({v.rational("points", parts[0]), v.rational("points", parts[1])});
    }
    if (t.empty()) throw UsageError("--points: no points given");
    return t;
}

void fill(Invocation& inv, const std::string& cmd, const Validator& v) {
    if (cmd == "bracket") {
        inv.f = v.polynomial("f", v.text("f"));
        inv.g = v.polynomial("g", v.text("g"));
    } else if (cmd == "hamiltonian") {
        inv.f = v.polynomial("f", v.text("f"));
    } else if (cmd == "adjoint-table") {
        inv.p = v.natural("p", true);
        inv.q = v.natural("q", true);
        if (v.has("eps")) inv.epsilon = v.rational("eps", v.text("eps"));
    } else if (cmd == "lemma3") {
        inv.p = v.natural("p", true);
        inv.q = v.natural("q", true);
    } else if (cmd == "gap") {
        inv.p = v.natural("p", true);
        inv.q = v.natural("q", true);
        inv.cap = v.natural_or("cap", true, 40);
    } else if (cmd == "closure" || cmd == "codim") {
        for (const auto& t : v.many("gen")) inv.generators.push_back(v.polynomial("gen", t));
        if (cmd == "closure") {
            inv.cap = v.natural_or("cap", true, 18);
            inv.dump = v.flag("dump");
        } else {
            inv.cap = v.natural_or("cap", true, 20);
            inv.report_degree = v.natural_or("report-degree", false, 14);
        }
    } else if (cmd == "hat-closure") {
        for (const auto& t : v.many("gen")) {
            try {
                inv.hat_generators.push_back(parse_hat_element(t));
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--gen: ") + e.what());
            }
        }
        inv.cap = v.natural_or("cap", true, 14);
        inv.report_degree = v.natural_or("report-degree", false, 8);
    } else if (cmd == "lattice") {
        inv.r = v.natural("r", false);
        inv.s = v.natural("s", false);
    } else if (cmd == "interpolate") {
        for (const auto& t : split(v.text("zs"), ", ")) inv.zs.push_back(v.rational("zs", t));
        if (inv.zs.empty()) throw UsageError("--zs: no values given");
        inv.d0 = v.natural_or("d0", false, 0);
        inv.d = v.natural("d", true);
    } else if (cmd == "transitivity") {
        if (v.has("points")) {
            if (v.has("m")) throw UsageError("--m and --points are mutually exclusive");
            inv.points = parse_points(v, v.text("points"));
        } else {
            inv.m = v.natural("m", true);
        }
        if (v.has("seed")) {
            const std::string& t = v.text("seed");
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), inv.seed);
            if (ec != std::errc{} || ptr != t.data() + t.size()) {
                throw UsageError("--seed: expected an unsigned integer, got '" + t + "'");
            }
        }
        inv.mirrored = v.flag("mirrored");
    } else if (cmd == "danielewski") {
        for (const auto& t : split(v.text("coeffs"), ", ")) inv.surface_coeffs.push_back(v.rational("coeffs", t));
        if (inv.surface_coeffs.empty()) throw UsageError("--coeffs: no coefficients given");
        inv.k_max = v.natural_or("kmax", false, 6);
        inv.cap = v.natural_or("cap", true, 14);
    }
}

std::string join_exponents(const std::set<unsigned>& values) {
    std::string out;
    for (unsigned e : values) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_slices(std::ostream& out, const std::set<unsigned>& xs, const std::set<unsigned>& ys, bool lines) {
    if (lines) {
        for (unsigned e : xs) out << "x " << e << '\n';
        for (unsigned e : ys) out << "y " << e << '\n';
    } else {
        out << "x-slice: " << join_exponents(xs) << '\n';
        out << "y-slice: " << join_exponents(ys) << '\n';
    }
}

void run_closure(const Invocation& inv, std::ostream& out, bool lines) {
    const PolyBasis basis = vector_closure(inv.generators, inv.cap);
    const auto xs = univariate_slice(basis, Var::X);
    const auto ys = univariate_slice(basis, Var::Y);
    const auto pivots = basis.pivots();
    std::vector<Monomial> ascending(pivots.rbegin(), pivots.rend());
    if (lines) {
        out << "dimension " << basis.size() << '\n';
        for (const auto& mono : ascending) out << "pivot " << mono.a << ' ' << mono.b << '\n';
        print_slices(out, xs, ys, true);
        if (inv.dump) {
            for (const auto& [pivot, row] : basis.rows()) out << "element\n" << serialize_lines(row);
        }
        return;
    }
    out << "dimension: " << basis.size() << '\n';
    out << "pivots:\n" << format_monomials(ascending);
    print_slices(out, xs, ys, false);
    if (inv.dump) {
        out << "basis:\n";
        for (const auto& [pivot, row] : basis.rows()) out << "  " << to_string(row) << '\n';
    }
}

void run_transitivity(const Invocation& inv, std::ostream& out) {
    PointTuple tuple;
    if (inv.points) {
        tuple = *inv.points;
    } else {
        std::mt19937_64 rng(inv.seed);
        tuple = random_point_tuple(inv.m, rng);
    }
    const NormalizationResult result = normalize_tuple(tuple, inv.mirrored);
    out << "input:\n" << serialize_tuple(tuple);
    out << "word:\n" << serialize_word(result.word);
    out << "image:\n" << serialize_tuple(result.image);
    out << "OMEGA: " << bool_text(omega_membership(result.image, 1)) << '\n';
}

void dispatch(const Invocation& inv, std::ostream& out) {
    const bool lines = inv.format == OutputFormat::Lines;
    const std::string& cmd = inv.command;
    if (cmd == "bracket") {
        const BivariatePoly b = poisson_bracket(inv.f, inv.g);
        out << (lines ? serialize_lines(b) : to_string(b) + '\n');
    } else if (cmd == "hamiltonian") {
        const PlaneVectorField v = hamiltonian_field(inv.f);
        const BivariatePoly div = field_divergence(v);
        if (lines) {
            out << "component x\n" << serialize_lines(v.f1) << "component y\n" << serialize_lines(v.f2);
            out << "divergence\n" << serialize_lines(div);
        } else {
            out << "V = " << to_string(v) << '\n' << "div V = " << to_string(div) << '\n';
        }
    } else if (cmd == "adjoint-table") {
        const CoeffTable t = lemma2_table(inv.p, inv.q, inv.epsilon);
        out << (lines ? format_table_lines(t) : format_table_human(t));
    } else if (cmd == "lemma3") {
        const NonvanishingValues v = lemma3_check(inv.p, inv.q);
        if (lines) {
            out << "top " << rat_to_string(v.c0_top) << '\n';
            out << "penult0 " << rat_to_string(v.c0_penult) << '\n';
            out << "penult1 " << rat_to_string(v.c1_penult) << '\n';
        } else {
            out << "c[0][pq] = " << rat_to_short_string(v.c0_top) << '\n';
            out << "c[0][p(q-1)] = " << rat_to_short_string(v.c0_penult) << '\n';
            out << "c[1][p(q-1)] = " << rat_to_short_string(v.c1_penult) << '\n';
            out << "top nonzero: " << bool_text(v.top_nonzero()) << '\n';
            out << "penultimate sum nonzero: " << bool_text(v.penult_sum_nonzero()) << '\n';
        }
    } else if (cmd == "gap") {
        const ExponentOrbit orbit = monomial_closure(inv.p, inv.q, inv.cap);
        if (!lines) {
            out << "step: " << static_cast<long>(inv.p) * inv.q - inv.p - inv.q << '\n';
        }
        print_slices(out, univariate_slice(orbit, Var::X), univariate_slice(orbit, Var::Y), lines);
    } else if (cmd == "closure") {
        run_closure(inv, out, lines);
    } else if (cmd == "codim") {
        const PolyBasis basis = vector_closure(inv.generators, inv.cap);
        const CodimensionReport rep = codimension_report(basis, inv.report_degree);
        out << (lines ? "dimension " : "complement dimension: ") << rep.dimension << '\n';
        if (!lines) out << "complement:\n";
        out << format_monomials(rep.complement);
    } else if (cmd == "hat-closure") {
        const HatBasis basis = hat_closure(inv.hat_generators, inv.cap);
        const bool has_delta = basis.has_pivot(HatKey::delta());
        std::vector<Monomial> missing;
        for (unsigned deg = 0; deg <= inv.report_degree; ++deg) {
            for (unsigned a = deg + 1; a-- > 0;) {
                const Monomial mono{a, deg - a};
                if (!basis.has_pivot(HatKey{false, mono})) missing.push_back(mono);
            }
        }
        if (lines) {
            out << "dimension " << basis.size() << '\n';
            out << "delta " << (has_delta ? "present" : "absent") << '\n';
            for (const auto& mono : missing) out << "missing " << mono.a << ' ' << mono.b << '\n';
        } else {
            out << "dimension: " << basis.size() << '\n';
            out << "contains delta: " << bool_text(has_delta) << '\n';
            out << "missing monomials of degree <= " << inv.report_degree << ": " << missing.size() << '\n';
            out << format_monomials(missing);
        }
    } else if (cmd == "lattice") {
        out << bool_text(root_lattice_test(inv.r, inv.s)) << '\n';
    } else if (cmd == "interpolate") {
        const UnivariatePoly f = interpolate(inv.zs, inv.d0, inv.d);
        out << (lines ? serialize_lines(f) : to_string(f) + '\n');
    } else if (cmd == "transitivity") {
        run_transitivity(inv, out);
    } else if (cmd == "flow-check") {
        out << bool_text(verify_exponential_flow()) << '\n';
    } else if (cmd == "danielewski") {
        const ContainmentReport rep =
            surface_closure_containment(UnivariatePoly::from_dense(inv.surface_coeffs), inv.k_max, inv.cap);
        out << format_report(rep);
        if (!lines) out << "expected range present: " << bool_text(rep.expected_range_present()) << '\n';
    } else {
        throw UsageError("unknown subcommand '" + cmd + "'");
    }
}

}  // namespace

Invocation parse_command(const std::vector<std::string>& args) {
    CLI::App app{"Polynomial Lie algebras, shear automorphisms and Danielewski surfaces", "liepoly"};
    app.footer(kGrammar);
    app.require_subcommand(1);

    RawValues raw;
    std::map<std::string, CLI::App*> subs;
    for (const auto& spec : subcommand_specs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        sub->footer(kGrammar);
        for (const auto& [name, desc] : spec.options) {
            const std::string key = name;
            if (key == "gen") {
                sub->add_option("--" + key, raw.multi[key], desc);
            } else {
                sub->add_option("--" + key, raw.single[key], desc);
            }
        }
        for (const auto& [name, desc] : spec.flags) sub->add_flag("--" + std::string(name), raw.flags[name], desc);
        sub->add_option("--format", raw.format, "output format: human or lines (default human)");
        subs[spec.name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        Invocation inv;
        inv.command = "help";
        inv.help_text = app.help();
        for (const auto& [name, sub] : subs) {
            if (sub->count() > 0) inv.help_text = sub->help();
        }
        return inv;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (args.empty() || e.get_name() == "RequiredError") msg = "a subcommand is required (see --help)";
        if (!args.empty() && !args[0].starts_with("-") && !subs.contains(args[0])) {
            msg = "unknown subcommand '" + args[0] + "'";
        }
        throw UsageError(msg);
    }

    Invocation inv;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            inv.command = name;
            const Validator v(*sub, raw);
            if (raw.format == "lines") {
                inv.format = OutputFormat::Lines;
            } else if (raw.format != "human") {
                throw UsageError("--format: expected human or lines, got '" + raw.format + "'");
            }
            fill(inv, name, v);
        }
    }
    return inv;
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.command == "help") {
        out << inv.help_text;
        return 0;
    }
    try {
        std::ostringstream buffer;
        dispatch(inv, buffer);
        out << buffer.str();
        return 0;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_command(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return execute(inv, out, err);
}

}  // namespace liepoly::cli
