#include "liepoly/rational.hpp"

#include <cctype>

namespace liepoly {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) {
    // mpq_class(n, d) is only reduced once canonicalized.
    Rat v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string rat_to_short_string(const Rat& value) {
    Rat v = value;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return rat_to_string(v);
}

Rat rat_pow(const Rat& base, unsigned exponent) {
    Rat result = 1;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

}  // namespace liepoly
