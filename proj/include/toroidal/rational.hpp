#ifndef TOROIDAL_RATIONAL_HPP
#define TOROIDAL_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace toroidal {

/// Arbitrary-precision rational scalar. All arithmetic in the library is
/// exact; no floating point appears anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s), 1);
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Floor-free exact conversion; throws if q is not an integer that fits.
inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("rational is not a machine integer: " + to_string(q));
    return q.get_num().get_si();
}

} // namespace toroidal

#endif
