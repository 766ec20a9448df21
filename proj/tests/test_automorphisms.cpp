#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liepoly/automorphisms.hpp"
#include "liepoly/lie_closure.hpp"
#include "support/generators.hpp"

using namespace liepoly;
using testsupport::progression;
using testsupport::small_rat;
using testsupport::uniform_int;

namespace {

BivariatePoly P(const char* text) { return parse_poly(text); }

std::string precondition_message(const PointTuple& t) {
    try {
        normalize_tuple(t);
    } catch (const PreconditionError& e) {
        return e.what();
    }
    return "";
}

// First candidate 0, 1, -1, 2, ... whose map carries `before` into the
// step's condition. Independent of the exclusion sets used by the library.
Rat first_working_parameter(const PointTuple& before, ShearKind kind, unsigned e, int step) {
    for (unsigned i = 0;; ++i) {
        const Rat c = candidate_parameter(i);
        const PointTuple after = apply_word(AutomorphismWord{{{kind, e, c}}}, before);
        if (step_condition_holds(after, step)) return c;
    }
}

}  // namespace

TEST_CASE("triangular maps on points and polynomials") {
    CHECK(apply_map({ShearKind::L, 1, 1}, {0, 1}) == PlanePoint{1, 1});
    const AutomorphismWord r2{{{ShearKind::R, 2, Rat(3, 2)}}};
    const auto images = word_images(r2);
    CHECK(images[0] == P("x"));
    CHECK(images[1] == P("y + 3/2x^2"));
    CHECK(apply_map({ShearKind::R, 2, Rat(3, 2)}, {2, 1}) == PlanePoint{2, 7});
}

TEST_CASE("word followed by its inverse is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        AutomorphismWord w;
        const auto len = uniform_int(rng, 1, 6);
        for (long i = 0; i < len; ++i) {
            w.maps.push_back({uniform_int(rng, 0, 1) == 0 ? ShearKind::L : ShearKind::R,
                              static_cast<unsigned>(uniform_int(rng, 0, 3)), small_rat(rng)});
        }
        const PointTuple t = random_point_tuple(4, rng);
        CHECK(apply_word(w.inverse(), apply_word(w, t)) == t);
    }
}

TEST_CASE("word images compose left to right") {
    const AutomorphismWord w{{{ShearKind::L, 1, 2}, {ShearKind::R, 2, 1}}};
    const auto images = word_images(w);
    CHECK(images[0] == P("x + 2y"));
    CHECK(images[1] == P("y + x^2 + 4xy + 4y^2"));
    const PlanePoint pt{3, -1};
    const PlanePoint moved = apply_word(w, {pt}).front();
    CHECK(images[0].evaluate(pt.x, pt.y) == moved.x);
    CHECK(images[1].evaluate(pt.x, pt.y) == moved.y);
}

TEST_CASE("flows of shear fields") {
    CHECK(flow_map(ShearField::HorizontalYr, 2, 3) == TriangularMap{ShearKind::L, 2, 3});
    CHECK(flow_map(ShearField::VerticalXs, 0, 1) == TriangularMap{ShearKind::R, 0, 1});
    CHECK(apply_map(flow_map(ShearField::VerticalXs, 0, 1), {5, 5}) == PlanePoint{5, 6});
    for (unsigned e = 0; e <= 4; ++e) {
        for (const auto field : {ShearField::HorizontalYr, ShearField::VerticalXs}) {
            const Rat t(7, 3);
            const AutomorphismWord there_and_back{{flow_map(field, e, t), flow_map(field, e, -t)}};
            const auto images = word_images(there_and_back);
            CHECK(images[0] == P("x"));
            CHECK(images[1] == P("y"));
        }
    }
    // Exponent 1 on the other variable's field is still triangular: y d/dx.
    CHECK(flow_images(ShearField::HorizontalYr, 1, 2)[0] == P("x + 2y"));
}

TEST_CASE("omega predicate") {
    CHECK(omega_membership({{1, 1}, {2, 3}}, 1));
    CHECK_FALSE(omega_membership({{1, 1}, {2, 0}}, 1));
    CHECK_FALSE(omega_membership({{1, 2}, {-1, 3}}, 2));
    CHECK(omega_membership({{1, 2}, {-1, 3}}, 1));
    CHECK_FALSE(omega_membership({{1, 2}, {3, 2}}, 1));
}

TEST_CASE("normalization examples") {
    const auto single = normalize_tuple({{0, 5}});
    REQUIRE_FALSE(single.word.maps.empty());
    CHECK(single.word.maps.front().kind == ShearKind::L);
    CHECK(single.word.maps.front().exponent == 1);
    CHECK(single.word.maps.front().param != 0);
    CHECK(omega_membership(single.image, 1));

    const auto antipodal = normalize_tuple({{1, 0}, {-1, 0}});
    CHECK(antipodal.word.maps.at(1).kind == ShearKind::R);
    CHECK(antipodal.word.maps.at(1).param != 0);
    CHECK(step_condition_holds(antipodal.stages[1], 2));
    CHECK(omega_membership(antipodal.image, 1));

    const PointTuple good{{1, 2}, {2, 5}, {3, 7}};
    REQUIRE(omega_membership(good, 1));
    CHECK(omega_membership(normalize_tuple(good).image, 1));
}

TEST_CASE("normalization rejects bad tuples with distinct messages") {
    const auto empty = precondition_message({});
    const auto origin = precondition_message({{1, 1}, {0, 0}});
    const auto repeated = precondition_message({{1, 1}, {2, 3}, {1, 1}});
    CHECK_FALSE(empty.empty());
    CHECK(origin.find("origin") != std::string::npos);
    CHECK(repeated.find("coincide") != std::string::npos);
    CHECK(empty != origin);
    CHECK(origin != repeated);
}

TEST_CASE("normalization on seeded random tuples") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        const PointTuple t = random_point_tuple(m, rng);
        for (const bool mirrored : {false, true}) {
            CAPTURE(serialize_tuple(t));
            CAPTURE(mirrored);
            const auto r = normalize_tuple(t, mirrored);
            REQUIRE(r.word.maps.size() == 4);
            for (const auto& map : r.word.maps) {
                const unsigned expected = (map.kind == ShearKind::L) != mirrored ? 1U : 2U;
                CHECK(map.exponent == expected);
            }
            CHECK(apply_word(r.word, t) == r.image);
            CHECK(omega_membership(r.image, 1));
            if (!mirrored) {
                PointTuple before = t;
                for (int step = 1; step <= 4; ++step) {
                    for (int earlier = 1; earlier <= step; ++earlier) CHECK(step_condition_holds(r.stages[step - 1], earlier));
                    const auto& map = r.word.maps[step - 1];
                    CHECK(map.param == first_working_parameter(before, map.kind, map.exponent, step));
                    before = r.stages[step - 1];
                }
            }
        }
    }
}

TEST_CASE("candidate parameters") {
    const std::vector<Rat> expected{0, 1, -1, 2, -2, 3, -3};
    for (unsigned i = 0; i < expected.size(); ++i) CHECK(candidate_parameter(i) == expected[i]);
}

TEST_CASE("seeded tuples are reproducible and valid") {
    std::mt19937_64 a(7);
    std::mt19937_64 b(7);
    const auto ta = random_point_tuple(6, a);
    CHECK(ta == random_point_tuple(6, b));
    for (std::size_t i = 0; i < ta.size(); ++i) {
        CHECK_FALSE((ta[i].x == 0 && ta[i].y == 0));
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(ta[i] == ta[j]);
    }
}

TEST_CASE("lattice test") {
    CHECK(root_lattice_test(1, 2));
    CHECK_FALSE(root_lattice_test(2, 2));
    CHECK(root_lattice_test(0, 7));
    for (unsigned r = 0; r <= 10; ++r) {
        for (unsigned s = 0; s <= 10; ++s) CHECK(root_lattice_test(r, s) == (r * s == 0 || r * s == 2));
    }
}

TEST_CASE("progression parameters match the monomial orbit slices") {
    // y^r d/dx and x^s d/dy are Hamiltonian for multiples of y^(r+1) and x^(s+1),
    // so the orbit has x-exponent s+1 and y-exponent r+1.
    for (const auto [r, s] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 1}, {2, 2}, {1, 3}}) {
        const auto pp = progression_parameters(r, s);
        CHECK(pp.step == static_cast<long>(r * s) - 1);
        const auto orbit = monomial_closure(s + 1, r + 1, 30);
        CHECK(univariate_slice(orbit, Var::Y) == progression(pp.y_offset, pp.step, 30));
        CHECK(univariate_slice(orbit, Var::X) == progression(pp.x_offset, pp.step, 30));
    }
}

TEST_CASE("interpolation examples") {
    const auto f = interpolate({1, 2}, 2, 1);
    CHECK(f == UnivariatePoly({{3, Rat(1, 4)}, {2, Rat(-1, 4)}}));
    CHECK(f.evaluate(1) == 0);
    CHECK(f.evaluate(2) == 1);

    const auto g = interpolate({Rat(2, 3)}, 3, 5);
    CHECK(g == UnivariatePoly({{3, Rat(27, 8)}}));

    CHECK_THROWS_AS(interpolate({1, -1}, 0, 2), PreconditionError);
    CHECK_THROWS_AS(interpolate({1, 0}, 0, 1), PreconditionError);
    CHECK_THROWS_AS(interpolate({}, 0, 1), PreconditionError);
    CHECK_THROWS_AS(interpolate({1, 2}, 0, 0), PreconditionError);
}

TEST_CASE("interpolation on seeded inputs") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 60) {
        const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 5));
        const auto d0 = static_cast<unsigned>(uniform_int(rng, 0, 3));
        const auto d = static_cast<unsigned>(uniform_int(rng, 1, 3));
        std::vector<Rat> zs;
        for (std::size_t i = 0; i < m; ++i) zs.push_back(small_rat(rng, 4, 3));
        const Rat zm_d = rat_pow(zs.back(), d);
        bool ok = zs.back() != 0;
        for (std::size_t j = 0; j + 1 < m; ++j) ok = ok && rat_pow(zs[j], d) != zm_d;
        if (!ok) {
            CHECK_THROWS_AS(interpolate(zs, d0, d), PreconditionError);
            continue;
        }
        const auto f = interpolate(zs, d0, d);
        for (std::size_t j = 0; j + 1 < m; ++j) CHECK(f.evaluate(zs[j]) == 0);
        CHECK(f.evaluate(zs.back()) == 1);
        for (const auto& [e, c] : f.terms()) CHECK((e >= d0 && (e - d0) % d == 0));
        ++done;
    }
}

TEST_CASE("exponential flow of (x + 3y^2) d/dx + y d/dy") {
    CHECK(verify_exponential_flow());
    // Pointwise: X = (x - 3y^2)s + 3y^2 s^2, Y = ys; s dX/ds = X + 3Y^2, s dY/ds = Y.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rat x = small_rat(rng);
        const Rat y = small_rat(rng);
        const Rat s = small_rat(rng);
        const Rat X = (x - 3 * y * y) * s + 3 * y * y * s * s;
        const Rat Y = y * s;
        const Rat s_dX = (x - 3 * y * y) * s + 6 * y * y * s * s;
        CHECK(s_dX == X + 3 * Y * Y);
        const Rat X1 = (x - 3 * y * y) + 3 * y * y;
        CHECK(X1 == x);
    }
}

TEST_CASE("text formats") {
    const AutomorphismWord w{{{ShearKind::L, 1, Rat(-1, 2)}, {ShearKind::R, 2, 3}}};
    CHECK(serialize_word(w) == "L 1 -1/2\nR 2 3/1\n");
    CHECK(parse_word(serialize_word(w)) == w);
    const PointTuple t{{Rat(1, 2), -3}, {0, 1}};
    CHECK(serialize_tuple(t) == "1/2 -3/1\n0/1 1/1\n");
    CHECK(parse_tuple(serialize_tuple(t)) == t);
    CHECK_THROWS_AS(parse_word("Q 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tuple("1"), std::invalid_argument);
}

TEST_CASE("univariate polynomial basics") {
    const auto p = UnivariatePoly::from_dense({-1, 0, 1});
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == UnivariatePoly(std::map<unsigned, Rat>{{1, 2}}));
    CHECK(to_string(p) == "z^2 - 1");
    CHECK(serialize_lines(p) == "0 -1/1\n2 1/1\n");
    CHECK(UnivariatePoly{}.degree() == kZeroPolyDegree);
}
