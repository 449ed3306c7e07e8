#include "adaptcoord/rational.hpp"

#include "adaptcoord/error.hpp"

#include <cctype>

namespace adaptcoord {

Rational make_rational(long num, long den) {
    if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        out = text.substr(start, pos - start);
        return !out.empty();
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    std::string num, den = "1";
    if (!digits(num)) raise(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!digits(den)) raise(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    }
    if (pos != text.size()) raise(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
    Integer n(num), d(den);
    if (negative) n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

int sign(const Rational& r) { return sgn(r); }

long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        raise(ErrorCode::InternalInvariantViolation, "rational " + to_string(r) + " is not a machine integer");
    return r.get_num().get_si();
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return out;
}

} // namespace adaptcoord
