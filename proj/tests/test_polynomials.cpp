#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liepoly/polynomial.hpp"
#include "support/generators.hpp"

#include <fstream>
#include <sstream>

using namespace liepoly;
using testsupport::random_poly;

namespace {

BivariatePoly P(const char* text) { return parse_poly(text); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("+2/3") == Rat(2, 3));
    CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
    CHECK(rat_to_string(Rat(5)) == "5/1");
    CHECK(rat_to_short_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("polynomial grammar") {
    CHECK(P("x^2+2y") == BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1, 2));
    CHECK(P("3/4xy^2") == BivariatePoly::monomial(1, 2, Rat(3, 4)));
    CHECK(P("-y^3 + 1") == BivariatePoly::monomial(0, 3, -1) + BivariatePoly(1));
    CHECK(P("2*x*y - 2*x*y").is_zero());
    CHECK(P("0").is_zero());
    CHECK(P("x^2 y").terms().size() == 1);
    CHECK_THROWS_AS(P("x^"), std::invalid_argument);
    CHECK_THROWS_AS(P("z"), std::invalid_argument);
    CHECK_THROWS_AS(P("x++y"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);
}

TEST_CASE("printing follows graded lex with x > y") {
    CHECK(to_string(P("3 - 1/2y + 6xy^2")) == "6*x*y^2 - 1/2*y + 3");
    CHECK(to_string(BivariatePoly{}) == "0");
    CHECK(to_string(P("y^2 + x^2 + xy")) == "x^2 + x*y + y^2");
}

TEST_CASE("degree and zero sentinel") {
    CHECK(P("x^3 y + y").degree() == 4);
    CHECK(BivariatePoly{}.degree() == kZeroPolyDegree);
    CHECK(BivariatePoly(5).degree() == 0);
}

TEST_CASE("line serialization round trip and golden file") {
    const BivariatePoly f = P("6xy^2 - 1/2y + 3 - 4/6x^3");
    const std::string text = serialize_lines(f);
    CHECK(parse_lines(text) == f);
    CHECK(text == read_file(std::string(LIEPOLY_GOLDEN_DIR) + "/poly_lines.txt"));
    CHECK(serialize_lines(BivariatePoly{}).empty());
    CHECK_THROWS_AS(parse_lines("1 2"), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("x^2y"), Var::X) == P("2xy"));
    CHECK(partial_derivative(P("x^2"), Var::Y).is_zero());
    CHECK(partial_derivative(P("y^3"), Var::Y) == P("3y^2"));
}

TEST_CASE("poisson bracket examples") {
    CHECK(poisson_bracket(P("x"), P("y")) == BivariatePoly(1));
    CHECK(poisson_bracket(P("x^2+2y"), P("y^3")) == P("6xy^2"));
    const BivariatePoly f = P("x^3 - 2xy + 5");
    CHECK(poisson_bracket(f, f).is_zero());
}

TEST_CASE("monomial bracket coefficient") {
    const auto b = monomial_bracket({2, 1}, {1, 3});
    CHECK(b.coefficient == 2 * 3 - 1 * 1);
    CHECK(b.monomial == Monomial{2, 3});
    CHECK(monomial_bracket({2, 2}, {1, 1}).coefficient == 0);
}

TEST_CASE("hamiltonian fields") {
    const auto v = hamiltonian_field(P("y^3"));
    CHECK(Rat(1, 3) * v == PlaneVectorField{P("y^2"), BivariatePoly{}});
    const auto w = hamiltonian_field(P("x^2+2y"));
    CHECK(Rat(1, 2) * w == PlaneVectorField{BivariatePoly(1), P("-x")});
    CHECK(hamiltonian_field(BivariatePoly(7)) == PlaneVectorField{});
}

TEST_CASE("divergence") {
    CHECK(field_divergence(euler_field()) == BivariatePoly(2));
    CHECK(field_divergence(PlaneVectorField{P("y^4"), BivariatePoly{}}).is_zero());
}

TEST_CASE("bracket identities on seeded random polynomials") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const auto f = random_poly(rng, 5, 5);
        const auto g = random_poly(rng, 5, 5);
        const auto h = random_poly(rng, 4, 4);
        CAPTURE(to_string(f));
        CAPTURE(to_string(g));
        CAPTURE(to_string(h));

        CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
        CHECK((poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
               poisson_bracket(h, poisson_bracket(f, g)))
                  .is_zero());
        CHECK(poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
        CHECK(poisson_bracket(f, g) == poisson_bracket_by_partials(f, g));

        const auto b = poisson_bracket(f, g);
        if (!b.is_zero()) CHECK(b.degree() <= f.degree() + g.degree() - 2);

        CHECK(field_divergence(hamiltonian_field(f)).is_zero());

        // With [v,w](g) = v(w(g)) - w(v(g)) the map f -> V_f reverses the bracket.
        CHECK(field_commutator(hamiltonian_field(f), hamiltonian_field(g)) ==
              Rat(-1) * hamiltonian_field(poisson_bracket(f, g)));
    }
}

TEST_CASE("commutator sign on a hand-computed pair") {
    // V_{x^2} = -2x d/dy, V_y = d/dx, {x^2, y} = 2x, V_{2x} = -2 d/dy.
    // [V_{x^2}, V_y] applied to x: V_{x^2}(1) - V_y(0) = 0; applied to y: 0 - V_y(-2x) = 2.
    const auto c = field_commutator(hamiltonian_field(P("x^2")), hamiltonian_field(P("y")));
    CHECK(c == PlaneVectorField{BivariatePoly{}, BivariatePoly(2)});
    CHECK(hamiltonian_field(poisson_bracket(P("x^2"), P("y"))) == PlaneVectorField{BivariatePoly{}, BivariatePoly(-2)});
}

TEST_CASE("scale_variables and evaluate") {
    const auto f = P("x^2y + 3y^2");
    CHECK(f.scale_variables(1, 2) == P("2x^2y + 12y^2"));
    CHECK(f.evaluate(2, Rat(1, 3)) == Rat(4, 3) + Rat(1, 3));
}
