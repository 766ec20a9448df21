#pragma once

#include "liepoly/automorphisms.hpp"
#include "liepoly/hat_algebra.hpp"
#include "liepoly/polynomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liepoly::cli {

enum class OutputFormat { Human, Lines };

/// Bad command line. The message names the offending flag.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fully parsed and validated command line. Fields unused by the chosen
/// subcommand keep their defaults.
struct Invocation {
    std::string command;
    OutputFormat format = OutputFormat::Human;
    std::string help_text;  // set when command == "help"

    BivariatePoly f;
    BivariatePoly g;
    std::vector<BivariatePoly> generators;
    std::vector<HatElement> hat_generators;

    unsigned p = 0;
    unsigned q = 0;
    unsigned r = 0;
    unsigned s = 0;
    Rat epsilon = 1;
    unsigned cap = 0;
    unsigned report_degree = 0;
    bool dump = false;

    std::uint64_t seed = 0;
    unsigned m = 0;
    std::optional<PointTuple> points;
    bool mirrored = false;

    std::vector<Rat> zs;
    unsigned d0 = 0;
    unsigned d = 0;

    std::vector<Rat> surface_coeffs;  // c0 c1 ... c_nu of p(z)
    unsigned k_max = 0;
};

/// args excludes the program name. Throws UsageError.
Invocation parse_command(const std::vector<std::string>& args);

/// Runs the invocation. Returns 0 on success, 3 when a module rejects its
/// input as a precondition violation.
int execute(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse_command + execute with usage errors mapped to exit status 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepoly::cli
