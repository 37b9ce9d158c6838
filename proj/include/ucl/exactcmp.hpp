#pragma once

#include <mpfr.h>

#include <cstdlib>
#include <utility>

#include "ucl/rational.hpp"

namespace ucl {

/// Precision cap (bits) for the interval fast path.  Overridable via the
/// UCL_PRECISION_CAP environment variable.  Hitting the cap never produces a
/// wrong or ambiguous answer: comparisons fall through to exact algebra.
inline unsigned long precision_cap() {
    static unsigned long cap = [] {
        if (const char* s = std::getenv("UCL_PRECISION_CAP")) {
            long v = std::atol(s);
            if (v >= 16) return static_cast<unsigned long>(v);
        }
        return 1024ul;
    }();
    return cap;
}

namespace detail {

/// RAII mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
    ~Mpfr() { mpfr_clear(x_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

private:
    mpfr_t x_;
};

/// Exact sign of A + B*sqrt(P) with P >= 0 rational, A, B rational.
inline int sign_a_plus_b_sqrt(const Rational& A, const Rational& B, const Rational& P) {
    if (sgn(P) < 0) throw PreconditionError("negative radicand");
    if (sgn(P) == 0 || sgn(B) == 0) return sgn(A);
    if (sgn(B) > 0) {
        if (sgn(A) >= 0) return 1;
        // A < 0: sign of B^2 P - A^2
        return cmp(B * B * P, A * A);
    }
    return -sign_a_plus_b_sqrt(-A, -B, P);
}

}  // namespace detail

/// Exact sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)); all args >= 0.
/// Both sides are nonnegative, so comparing their squares is order-preserving;
/// two squarings eliminate all radicals.
inline int compare_sqrt_sums_exact(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& d) {
    if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0 || sgn(d) < 0)
        throw PreconditionError("negative radicand in sqrt-sum comparison");
    Rational X = a + b - c - d;
    Rational P = a * b, Q = c * d;
    // sign of X + 2 sqrt(P) - 2 sqrt(Q)
    int u = detail::sign_a_plus_b_sqrt(X, 2, P);  // sign of U = X + 2 sqrt(P)
    if (sgn(Q) == 0) return u;
    if (u < 0) return -1;
    if (u == 0) return -1;  // U = 0, subtracting 2 sqrt(Q) > 0
    // U > 0: sign of U^2 - 4Q = (X^2 + 4P - 4Q) + 4X sqrt(P)
    return detail::sign_a_plus_b_sqrt(X * X + 4 * P - 4 * Q, 4 * X, P);
}

/// Sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)) via certified interval
/// arithmetic with precision doubling; exact fallback once the cap is reached
/// (never an ambiguous answer).
inline int compare_sqrt_sums(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d) {
    const unsigned long cap = precision_cap();
    for (unsigned long prec = 64; prec <= cap; prec *= 2) {
        detail::Mpfr lo(prec), hi(prec), t(prec);
        // lower bound of lhs
        mpfr_set_q(t.get(), a.get_mpq_t(), MPFR_RNDD);
        mpfr_sqrt(lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_q(t.get(), b.get_mpq_t(), MPFR_RNDD);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        // upper bound of rhs
        mpfr_set_q(t.get(), c.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(hi.get(), t.get(), MPFR_RNDU);
        mpfr_set_q(t.get(), d.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
        if (mpfr_cmp(lo.get(), hi.get()) > 0) return 1;  // lhs_lo > rhs_hi
        // upper bound of lhs
        mpfr_set_q(t.get(), a.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(lo.get(), t.get(), MPFR_RNDU);
        mpfr_set_q(t.get(), b.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDU);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDU);
        // lower bound of rhs
        mpfr_set_q(t.get(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_sqrt(hi.get(), t.get(), MPFR_RNDD);
        mpfr_set_q(t.get(), d.get_mpq_t(), MPFR_RNDD);
        mpfr_sqrt(t.get(), t.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDD);
        if (mpfr_cmp(lo.get(), hi.get()) < 0) return -1;  // lhs_hi < rhs_lo
    }
    return compare_sqrt_sums_exact(a, b, c, d);
}

/// Certified dyadic bounds lo <= log2(n) <= hi with error < 2^-32
/// (far better in practice: correctly rounded at 128 bits).
/// Exact (lo == hi) when n is a power of two.
inline std::pair<Rational, Rational> log2_bounds(unsigned long n) {
    if (n == 0) throw PreconditionError("log2(0)");
    if ((n & (n - 1)) == 0) {
        unsigned long k = 0;
        while ((1ul << k) < n) ++k;
        return {Rational(static_cast<long>(k)), Rational(static_cast<long>(k))};
    }
    auto mpfr_to_rational = [](mpfr_srcptr x) {
        Integer mant;
        mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
        Rational r(mant);
        if (e >= 0) r *= Rational(pow2(static_cast<unsigned long>(e)));
        else r /= Rational(pow2(static_cast<unsigned long>(-e)));
        r.canonicalize();
        return r;
    };
    detail::Mpfr lo(128), hi(128);
    mpfr_set_ui(lo.get(), n, MPFR_RNDD);
    mpfr_log2(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_ui(hi.get(), n, MPFR_RNDU);
    mpfr_log2(hi.get(), hi.get(), MPFR_RNDU);
    return {mpfr_to_rational(lo.get()), mpfr_to_rational(hi.get())};
}

}  // namespace ucl
