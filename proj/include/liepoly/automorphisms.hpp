#pragma once

#include "liepoly/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace liepoly {

// ---------------------------------------------------------------------------
// Triangular maps and words

enum class ShearKind { L, R };

/// L_r(alpha): (x, y) -> (x + alpha y^r, y)
/// R_s(beta):  (x, y) -> (x, y + beta x^s)
struct TriangularMap {
    ShearKind kind = ShearKind::L;
    unsigned exponent = 0;
    Rat param = 0;

    friend bool operator==(const TriangularMap&, const TriangularMap&) = default;
};

struct PlanePoint {
    Rat x;
    Rat y;

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

using PointTuple = std::vector<PlanePoint>;

/// Maps compose left to right: the first map acts first.
struct AutomorphismWord {
    std::vector<TriangularMap> maps;

    [[nodiscard]] AutomorphismWord inverse() const;
    friend bool operator==(const AutomorphismWord&, const AutomorphismWord&) = default;
};

PlanePoint apply_map(const TriangularMap& map, const PlanePoint& point);
PointTuple apply_word(const AutomorphismWord& word, const PointTuple& tuple);

/// Polynomial images of x and y under a word.
std::array<BivariatePoly, 2> word_images(const AutomorphismWord& word);

// ---------------------------------------------------------------------------
// Flows of shear fields

enum class ShearField {
    HorizontalYr,  // y^r d/dx
    VerticalXs,    // x^s d/dy
};

/// exp(t D) applied to the coordinate functions, summed as t^k/k! D^k until
/// the terms vanish. Shear fields are locally nilpotent, so this terminates.
std::array<BivariatePoly, 2> flow_images(ShearField field, unsigned exponent, const Rat& time);

/// The one-parameter subgroup element exp(t D) as a triangular map,
/// recognized from flow_images.
TriangularMap flow_map(ShearField field, unsigned exponent, const Rat& time);

// ---------------------------------------------------------------------------
// Tuple normalization

/// Both coordinates nonzero at every point, and their d-th powers pairwise
/// distinct across points.
bool omega_membership(const PointTuple& tuple, unsigned d);

/// Conditions established by the four normalization steps. Step k's
/// predicate includes everything the earlier steps established.
bool step_condition_holds(const PointTuple& tuple, int step);

struct NormalizationResult {
    AutomorphismWord word;
    PointTuple image;
    /// Tuple after step 1, 2, 3, 4.
    std::array<PointTuple, 4> stages;
};

/// Maps a tuple of distinct non-origin points into Omega^m_1 using only
/// L_1 and R_2 shears (or L_2 and R_1 when mirrored, by swapping the
/// coordinates). Each step's parameter is the first value of 0, 1, -1, 2, -2,
/// ... outside the finite set that would break a required inequality.
/// Throws PreconditionError for an empty tuple, a point at the origin, or
/// repeated points.
NormalizationResult normalize_tuple(const PointTuple& tuple, bool mirrored = false);

/// The e-th candidate of 0, 1, -1, 2, -2, 3, ...
Rat candidate_parameter(unsigned index);

/// m distinct non-origin points with coordinates n/d, |n| <= 3, 1 <= d <= 3.
/// Uses only raw engine output, so a seed gives the same tuple everywhere.
PointTuple random_point_tuple(std::size_t m, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Lattice test and generic transitivity parameters

/// Whether (-1, r) and (s, -1) generate Z^2, i.e. |det| = |rs - 1| = 1.
bool root_lattice_test(unsigned r, unsigned s);

/// Progression data for lie(D1, D2) with D1 = y^r d/dx, D2 = x^s d/dy:
/// pure powers y^(d1 + k d) and x^(d2 + k d) of Hamiltonians.
struct ProgressionParameters {
    long step;          // d = rs - 1
    unsigned y_offset;  // d1 = r + 1
    unsigned x_offset;  // d2 = s + 1
};
ProgressionParameters progression_parameters(unsigned r, unsigned s);

// ---------------------------------------------------------------------------
// Interpolation

/// Sparse univariate polynomial, exponent -> nonzero coefficient.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::map<unsigned, Rat> coeffs);
    /// c0 + c1 z + ... from a dense list.
    static UnivariatePoly from_dense(const std::vector<Rat>& coeffs);

    [[nodiscard]] const std::map<unsigned, Rat>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int degree() const { return terms_.empty() ? kZeroPolyDegree : static_cast<int>(terms_.rbegin()->first); }
    [[nodiscard]] Rat coefficient(unsigned e) const;
    [[nodiscard]] Rat evaluate(const Rat& z) const;
    [[nodiscard]] UnivariatePoly derivative() const;

    void add_term(unsigned e, const Rat& c);
    friend UnivariatePoly operator*(const UnivariatePoly& l, const UnivariatePoly& r);
    friend UnivariatePoly operator+(const UnivariatePoly& l, const UnivariatePoly& r);
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
    std::map<unsigned, Rat> terms_;
};

std::string to_string(const UnivariatePoly& f, char var = 'z');
/// "e num/den" per term, ascending exponent.
std::string serialize_lines(const UnivariatePoly& f);

/// f(z) = c0 z^d0 prod_{j<m} (z^d - z_j^d) with f(z_m) = 1, z_m the last entry.
/// Throws PreconditionError if zs is empty, d == 0, z_m == 0 or z_m^d == z_j^d.
UnivariatePoly interpolate(const std::vector<Rat>& zs, unsigned d0, unsigned d);

// ---------------------------------------------------------------------------
// Holomorphic flow of (x + 3y^2) d/dx + y d/dy

/// With s = e^t formal, checks that (x - 3y^2)s + 3y^2 s^2, y s satisfies
/// s d/ds (image) = field(image) and reduces to (x, y) at s = 1.
bool verify_exponential_flow();

// ---------------------------------------------------------------------------
// Text formats

std::string serialize_word(const AutomorphismWord& word);
AutomorphismWord parse_word(std::string_view text);
std::string serialize_tuple(const PointTuple& tuple);
PointTuple parse_tuple(std::string_view text);

}  // namespace liepoly
