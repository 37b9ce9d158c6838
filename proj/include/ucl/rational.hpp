#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <string_view>

#include "ucl/errors.hpp"

namespace ucl {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// 2^-e as an exact rational.
inline Rational pow2_inv(unsigned long e) {
    Rational r(Integer(1), pow2(e));
    r.canonicalize();
    return r;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Bit length of |z| (0 for z = 0).
inline unsigned long bit_length(const Integer& z) {
    if (z == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

/// Bits of numerator plus denominator; a crude but safe magnitude measure
/// covering both |q| and the coarseness of q's grid (1/den).
inline unsigned long rational_bits(const Rational& q) {
    return bit_length(q.get_num()) + bit_length(q.get_den());
}

/// Parses "p/q", integers ("-12"), and decimal fractions ("3.25", "-0.5e-3"
/// is NOT accepted; no exponents) exactly.
inline Rational parse_rational(std::string_view tok) {
    if (tok.empty()) throw ParseError("empty rational token");
    std::string s(tok);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("bad rational token '" + s + "'");
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("bad rational token '" + s + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        q.canonicalize();
        if (q.get_den() < 0) throw ParseError("negative denominator in '" + s + "'");
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) throw ParseError("bad decimal token '" + s + "'");
        for (char c : frac)
            if (c < '0' || c > '9') throw ParseError("bad decimal token '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head = head.substr(1);
        else if (!head.empty() && head[0] == '+') head = head.substr(1);
        if (head.empty()) head = "0";
        for (char c : head)
            if (c < '0' || c > '9') throw ParseError("bad decimal token '" + s + "'");
        Integer ip(head), fp(frac);
        Integer den = ipow(10, frac.size());
        Rational q(ip * den + fp, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }
    // plain integer
    Integer z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("bad integer token '" + s + "'");
    return Rational(z);
}

/// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ucl
