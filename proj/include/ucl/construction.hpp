#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucl/checks.hpp"
#include "ucl/matrix.hpp"

namespace ucl {

/// Skeleton matrix: the 2^m x 2^m binary matrix with base [[0,1],[1,0]] and
/// recursion  top-left = reversed identity, top-right = bottom-left =
/// previous level, bottom-right = zero.  Carries 2^(m-1)(m+1) ones and equals
/// its transpose.
inline ZeroOneMatrix skeleton(int m) {
    if (m < 1 || m > 12) throw PreconditionError("skeleton: level must be in 1..12");
    ZeroOneMatrix a{{0, 1}, {1, 0}};
    for (int level = 2; level <= m; ++level) {
        int h = a.rows();
        ZeroOneMatrix next(2 * h, 2 * h);
        for (int i = 0; i < h; ++i) next.set(i, h - 1 - i, 1);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < h; ++c)
                if (a.at(r, c)) {
                    next.set(r, h + c, 1);
                    next.set(h + r, c, 1);
                }
        a = next;
    }
    return a;
}

inline long long skeleton_ones_closed_form(int m) {
    return (1ll << (m - 1)) * (m + 1);
}

namespace detail {

inline void check_block_level(int r) {
    if (r < 1 || r > 5) throw PreconditionError("block level must be in 1..5");
}

/// 2^e for any integer e (negative allowed), as a rational.
inline Rational pow2_signed(long e) {
    if (e >= 0) return Rational(pow2(static_cast<unsigned long>(e)));
    return pow2_inv(static_cast<unsigned long>(-e));
}

}  // namespace detail

/// Literal upper block of the level-r coefficient layer, size 2^(r-1), with
/// z = 5^-5^r and 1-based indices i, j:
///   y[i][j] = 0                            when i + j = 2^(r-1) + 1
///   y[i][j] = i + 2^(2^(i-1) - j) * l * z  when i + j = 2^(r-1) + 1 + l, l > 0
///   y[i][j] = -2^(5^r - 2i - 2j)           when i + j <= 2^(r-1)
/// Note the below-diagonal rows are NOT monotone increasing left-to-right for
/// r >= 3 (the 2-power factor shrinks faster than l grows, producing ties and
/// descents); see assembly_y_block for the repaired variant.
inline ValueMatrix y_block(int r) {
    detail::check_block_level(r);
    const int h = 1 << (r - 1);
    Integer five_r = ipow(5, static_cast<unsigned long>(r));
    unsigned long five_r_ul = five_r.get_ui();
    Rational z(Integer(1), ipow(5, five_r_ul));
    z.canonicalize();
    ValueMatrix y(h, h);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
            Rational v;
            if (i + j == h + 1) v = 0;
            else if (i + j > h + 1) {
                long l = i + j - h - 1;
                long e = (1l << (i - 1)) - j;
                v = Rational(i) + detail::pow2_signed(e) * Rational(l) * z;
            } else {
                long e = static_cast<long>(five_r_ul) - 2 * i - 2 * j;
                v = -detail::pow2_signed(e);
            }
            y.at(i - 1, j - 1) = v;
        }
    return y;
}

/// Lower block: z[i][j] = -5^(5^r) * i * j, strictly decreasing along every
/// row and column, and larger in magnitude than anything in the upper block.
inline ValueMatrix z_block(int r) {
    detail::check_block_level(r);
    const int h = 1 << (r - 1);
    Integer big = ipow(5, ipow(5, static_cast<unsigned long>(r)).get_ui());
    ValueMatrix z(h, h);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) z.at(i - 1, j - 1) = Rational(-big * i * j);
    return z;
}

/// Which block family the distance-like builder assembled with.
enum class BlockStyle {
    Literal,   // y_block / z_block exactly as the closed formulas read
    Monotone,  // repaired blocks: below-diagonal entries i + l*z (strictly
               // increasing down and right), the 1x1 base block set to +2
};

namespace detail {

inline ValueMatrix assembly_y_block(int r, BlockStyle style) {
    if (style == BlockStyle::Literal) return y_block(r);
    const int h = 1 << (r - 1);
    if (r == 1) {
        // The base skeleton is not an instance of the quadrant recursion; its
        // non-skeleton top-left cell needs a nonzero coefficient.  Positive
        // keeps the boundary defects against deeper levels one-sided.
        ValueMatrix y(1, 1);
        y.at(0, 0) = 2;
        return y;
    }
    unsigned long five_r = ipow(5, static_cast<unsigned long>(r)).get_ui();
    Rational z(Integer(1), ipow(5, five_r));
    z.canonicalize();
    ValueMatrix y(h, h);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
            Rational v;
            if (i + j == h + 1) v = 0;
            else if (i + j > h + 1) {
                // Strictly increasing down and right, strictly submodular
                // (adjacent defect -z^2 < 0), and pinned to (i, i+1).
                v = Rational(i) + Rational(j) * z - Rational(i) * Rational(j) * z * z;
            } else {
                v = -detail::pow2_signed(static_cast<long>(five_r) - 2 * i - 2 * j);
            }
            y.at(i - 1, j - 1) = v;
        }
    return y;
}

}  // namespace detail

/// Per-coefficient layer: layer(t,t) is block-diagonal [upper, 0; 0, lower];
/// layer(s,t) for s < t places layer(s,t-1) on the anti-diagonal quadrants.
/// Every layer vanishes on the skeleton's 1-positions, and each cell carries
/// a nonzero coefficient in at most one layer.
inline ValueMatrix simplified_layer(int s, int t,
                                    BlockStyle style = BlockStyle::Literal) {
    if (!(1 <= s && s <= t && t <= 5))
        throw PreconditionError("simplified_layer: need 1 <= s <= t <= 5");
    if (s == t) {
        ValueMatrix y = detail::assembly_y_block(t, style);
        ValueMatrix z = z_block(t);
        int h = y.rows();
        ValueMatrix out(2 * h, 2 * h);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) {
                out.at(i, j) = y.at(i, j);
                out.at(h + i, h + j) = z.at(i, j);
            }
        return out;
    }
    ValueMatrix inner = simplified_layer(s, t - 1, style);
    int h = inner.rows();
    ValueMatrix out(2 * h, 2 * h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            out.at(i, h + j) = inner.at(i, j);
            out.at(h + i, j) = inner.at(i, j);
        }
    return out;
}

enum class DlmMode { Formula, Adaptive };

/// A positive matrix with entries exactly 1 on the skeleton's 1-positions and
/// nowhere else, passing both property checkers; built as
/// entry(i,j) = 1 + sum_k layer_k(i,j) * x_k with a validated x-series.
struct DistanceLikeMatrix {
    int m = 0;
    ValueMatrix matrix{1, 1};
    std::vector<Rational> x_values;           // x_1 .. x_m
    std::vector<unsigned long> exponents;     // x_k = 2^-exponents[k-1]
    DlmMode provenance = DlmMode::Adaptive;
    BlockStyle blocks = BlockStyle::Monotone;
    bool doubling_certified = false;  // halving any single x_k revalidates
    std::string literal_failure;      // why the literal blocks were rejected
};

/// Re-runnable verification of the five defining properties.
struct DlmVerifyReport {
    bool positivity = false;
    bool exact_ones = false;      // entry == 1 exactly iff skeleton 1
    bool ones_count = false;      // #ones == 2^(m-1)(m+1)
    bool diagonal = false;        // diagonal_check returns no witness
    bool obtuse = false;          // obtuse_check returns no witness
    std::optional<DiagonalWitness> diagonal_witness;
    std::optional<ObtuseWitness> obtuse_witness;
    std::string first_failure;  // empty when all pass
    bool all() const { return positivity && exact_ones && ones_count && diagonal && obtuse; }
};

inline DlmVerifyReport verify_distance_like(const ValueMatrix& mat, int m) {
    DlmVerifyReport rep;
    ZeroOneMatrix skel = skeleton(m);
    if (mat.rows() != skel.rows() || mat.cols() != skel.cols())
        throw PreconditionError("verify_distance_like: matrix size does not match level");
    rep.positivity = true;
    for (int r = 0; r < mat.rows() && rep.positivity; ++r)
        for (int c = 0; c < mat.cols(); ++c)
            if (sgn(mat.at(r, c)) <= 0) {
                rep.positivity = false;
                break;
            }
    rep.exact_ones = true;
    long long ones = 0;
    for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) {
            bool is_one = mat.at(r, c) == 1;
            if (is_one) ++ones;
            if (is_one != (skel.at(r, c) == 1)) rep.exact_ones = false;
        }
    rep.ones_count = ones == skeleton_ones_closed_form(m);
    rep.diagonal_witness = diagonal_check(mat);
    rep.diagonal = !rep.diagonal_witness.has_value();
    rep.obtuse_witness = obtuse_check(mat);
    rep.obtuse = !rep.obtuse_witness.has_value();
    if (!rep.positivity) rep.first_failure = "positivity";
    else if (!rep.exact_ones) rep.first_failure = "exact-ones";
    else if (!rep.ones_count) rep.first_failure = "ones-count";
    else if (!rep.diagonal) rep.first_failure = "diagonal";
    else if (!rep.obtuse) rep.first_failure = "obtuse";
    return rep;
}

namespace detail {

inline ValueMatrix assemble_dlm(const std::vector<ValueMatrix>& layers,
                                const std::vector<Rational>& xs) {
    int n = layers.front().rows();
    ValueMatrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rational v = 1;
            for (size_t k = 0; k < layers.size(); ++k) {
                const Rational& a = layers[k].at(r, c);
                if (sgn(a) != 0) v += a * xs[k];
            }
            out.at(r, c) = v;
        }
    return out;
}

inline unsigned long layer_bits(const ValueMatrix& layer) {
    unsigned long b = 1;
    for (int r = 0; r < layer.rows(); ++r)
        for (int c = 0; c < layer.cols(); ++c)
            b = std::max(b, rational_bits(layer.at(r, c)));
    return b;
}

/// Exponent schedule: the newest layer gets the largest weight and every
/// earlier layer is separated by enough bits that its whole contribution is
/// smaller than any nonzero gap one level up.  The 2*c_{k+1} term keeps the
/// schedule valid even after any single exponent is doubled, which is what
/// the exit certificate re-checks.
inline std::vector<unsigned long> exponent_schedule(const std::vector<unsigned long>& bits,
                                                    unsigned long pad) {
    const size_t m = bits.size();
    std::vector<unsigned long> c(m);
    c[m - 1] = bits[m - 1] + pad;
    for (size_t k = m - 1; k-- > 0;) c[k] = 2 * c[k + 1] + bits[k] + bits[k + 1] + pad;
    return c;
}

}  // namespace detail

/// Builds the distance-like matrix.  Formula mode is refused: the closed-form
/// weights 10^-10^10^10^m are far beyond any representable exponent (the
/// power tower exceeds 10^10^10 digits already at m = 1).  Adaptive mode
/// searches dyadic weights x_k = 2^-c_k, validating each attempt with the
/// exact checkers; literal blocks are tried first and the reason they fail is
/// recorded on the result.
inline DistanceLikeMatrix build_distance_like(int m, DlmMode mode = DlmMode::Adaptive) {
    if (mode == DlmMode::Formula)
        throw PreconditionError(
            "distance-like: formula mode refused; the literal x-series "
            "10^-10^10^10^m is non-representable (its exponent alone has more "
            "than 10^10^10 digits); use adaptive mode");
    if (m < 1 || m > 4) throw PreconditionError("distance-like: level must be in 1..4");

    DistanceLikeMatrix out;
    out.m = m;
    out.provenance = DlmMode::Adaptive;

    for (BlockStyle style : {BlockStyle::Literal, BlockStyle::Monotone}) {
        std::vector<ValueMatrix> layers;
        std::vector<unsigned long> bits;
        for (int k = 1; k <= m; ++k) {
            layers.push_back(simplified_layer(k, m, style));
            bits.push_back(detail::layer_bits(layers.back()));
        }
        for (int attempt = 0; attempt < 7; ++attempt) {
            unsigned long pad = 64ul << attempt;
            auto c = detail::exponent_schedule(bits, pad);
            std::vector<Rational> xs;
            for (unsigned long e : c) xs.push_back(pow2_inv(e));
            ValueMatrix mat = detail::assemble_dlm(layers, xs);
            auto rep = verify_distance_like(mat, m);
            if (!rep.all()) {
                if (style == BlockStyle::Literal && out.literal_failure.empty())
                    out.literal_failure = rep.first_failure;
                if (rep.first_failure == "exact-ones")
                    break;  // a coefficient-support hole; no x-series can fix it
                continue;
            }
            // Exit certificate: halving any single x_k (doubling its exponent)
            // must leave every check green.
            bool certified = true;
            for (size_t k = 0; k < c.size() && certified; ++k) {
                auto c2 = c;
                c2[k] *= 2;
                std::vector<Rational> xs2;
                for (unsigned long e : c2) xs2.push_back(pow2_inv(e));
                if (!verify_distance_like(detail::assemble_dlm(layers, xs2), m).all())
                    certified = false;
            }
            if (!certified) continue;
            out.matrix = std::move(mat);
            out.x_values = std::move(xs);
            out.exponents.assign(c.begin(), c.end());
            out.blocks = style;
            out.doubling_certified = true;
            return out;
        }
    }
    throw std::runtime_error(
        "distance-like: adaptive search exhausted its exponent schedule "
        "without satisfying all five checks");
}

}  // namespace ucl
