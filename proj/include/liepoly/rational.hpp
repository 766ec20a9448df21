#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace liepoly {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parses "n", "-n", "n/d" (d != 0). Throws std::invalid_argument otherwise.
Rat parse_rat(std::string_view text);

/// Always "num/den", e.g. "3/1", "-1/2".
std::string rat_to_string(const Rat& value);

/// "3", "-1/2": denominator dropped when it is 1.
std::string rat_to_short_string(const Rat& value);

/// Integer power with a non-negative exponent.
Rat rat_pow(const Rat& base, unsigned exponent);

}  // namespace liepoly
