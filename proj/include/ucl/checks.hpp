#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ucl/exactcmp.hpp"
#include "ucl/matrix.hpp"

namespace ucl {

/// Hard cap honored by both property checkers.
inline constexpr int kCheckerDimCap = 256;

/// Quadruple i < k (rows), j < l (cols) with M[i][j] + M[k][l] >= M[i][l] + M[k][j].
/// Indices are 0-based; reports print them 1-based.
struct DiagonalWitness {
    int i, j, k, l;
    friend bool operator==(const DiagonalWitness&, const DiagonalWitness&) = default;
};

/// Two corner L-shapes: a top-left entry (m1,n1) dominating a partner to its
/// right (m1,n2) and one below (m2,n1), and a bottom-right entry (p2,q2)
/// dominating a partner to its left (p2,q1) and one above (p1,q2), positioned
/// compatibly (m1<=p1, m2<=p2, n1<=q1, n2<=q2, m1<p2, n1<q2).  0-based.
struct ObtuseWitness {
    int m1, n1, m2, n2;
    int p1, q1, p2, q2;
    friend bool operator==(const ObtuseWitness&, const ObtuseWitness&) = default;
};

namespace detail {

/// Sign of (M[a] + M[b]) - (M[c] + M[d]) on conceptual entries.
inline int cmp_entry_sums(const ValueMatrix& m, int ar, int ac, int br, int bc, int cr, int cc,
                          int dr, int dc) {
    if (!m.squared) return sgn((m.at(ar, ac) + m.at(br, bc)) - (m.at(cr, cc) + m.at(dr, dc)));
    return compare_sqrt_sums(m.at(ar, ac), m.at(br, bc), m.at(cr, cc), m.at(dr, dc));
}

/// Sign of M[a] - M[b] on conceptual entries (for squared matrices the stored
/// comparison is order-preserving since sqrt is monotone).
inline int cmp_entries(const ValueMatrix& m, int ar, int ac, int br, int bc) {
    return cmp(m.at(ar, ac), m.at(br, bc));
}

inline void check_dims(const ValueMatrix& m, const char* op) {
    if (m.rows() > kCheckerDimCap || m.cols() > kCheckerDimCap)
        throw SizeCapError(std::string(op) + ": matrix exceeds " +
                           std::to_string(kCheckerDimCap) + "x" + std::to_string(kCheckerDimCap));
}

}  // namespace detail

/// Diagonal property check.  Returns the lexicographically first (i,j,k,l)
/// with M[i][j] + M[k][l] >= M[i][l] + M[k][j], or nullopt if none exists.
///
/// Fast path: a violating quadruple exists iff an adjacent one does, because
/// the defect of any quadruple is the sum of the defects of the unit cells it
/// spans; if all unit defects are strictly negative so is every quadruple's.
/// The full lexicographic scan runs only when a witness is known to exist.
inline std::optional<DiagonalWitness> diagonal_check(const ValueMatrix& m) {
    detail::check_dims(m, "diagonal_check");
    if (m.rows() < 2 || m.cols() < 2) return std::nullopt;
    bool violated = false;
    for (int r = 0; r + 1 < m.rows() && !violated; ++r)
        for (int c = 0; c + 1 < m.cols(); ++c)
            if (detail::cmp_entry_sums(m, r, c, r + 1, c + 1, r, c + 1, r + 1, c) >= 0) {
                violated = true;
                break;
            }
    if (!violated) return std::nullopt;
    for (int i = 0; i + 1 < m.rows(); ++i)
        for (int j = 0; j + 1 < m.cols(); ++j)
            for (int k = i + 1; k < m.rows(); ++k)
                for (int l = j + 1; l < m.cols(); ++l)
                    if (detail::cmp_entry_sums(m, i, j, k, l, i, l, k, j) >= 0)
                        return DiagonalWitness{i, j, k, l};
    return std::nullopt;  // unreachable
}

/// Obtuse angle property check: equivalent to naive enumeration over all
/// eight indices, returning the lexicographically first witness in
/// (m1,n1,m2,n2,p1,q1,p2,q2) order.
///
/// Existence is decided in O(r^2 c + r c^2 + (rc)^2) index work: for each cell
/// precompute the nearest dominated partner below/right (minimal m2/n2 -- the
/// least constrained choice) and the farthest dominated partner above/left
/// (maximal p1/q1); a corner pair completes iff those extremes satisfy the
/// six positional inequalities.
inline std::optional<ObtuseWitness> obtuse_check(const ValueMatrix& m) {
    detail::check_dims(m, "obtuse_check");
    const int R = m.rows(), C = m.cols();
    if (R < 2 || C < 2) return std::nullopt;
    constexpr int kNone = -1;
    std::vector<int> minm2(static_cast<size_t>(R) * C, kNone), minn2 = minm2, maxp1 = minm2,
                     maxq1 = minm2;
    auto idx = [C](int r, int c) { return static_cast<size_t>(r) * C + c; };
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) {
            for (int r2 = r + 1; r2 < R; ++r2)
                if (detail::cmp_entries(m, r2, c, r, c) <= 0) {
                    minm2[idx(r, c)] = r2;
                    break;
                }
            for (int c2 = c + 1; c2 < C; ++c2)
                if (detail::cmp_entries(m, r, c2, r, c) <= 0) {
                    minn2[idx(r, c)] = c2;
                    break;
                }
            for (int r1 = r - 1; r1 >= 0; --r1)
                if (detail::cmp_entries(m, r1, c, r, c) <= 0) {
                    maxp1[idx(r, c)] = r1;
                    break;
                }
            for (int c1 = c - 1; c1 >= 0; --c1)
                if (detail::cmp_entries(m, r, c1, r, c) <= 0) {
                    maxq1[idx(r, c)] = c1;
                    break;
                }
        }
    struct BR {
        int p2, q2, p1max, q1max;
    };
    std::vector<BR> brs;
    for (int p2 = 1; p2 < R; ++p2)
        for (int q2 = 1; q2 < C; ++q2)
            if (maxp1[idx(p2, q2)] != kNone && maxq1[idx(p2, q2)] != kNone)
                brs.push_back({p2, q2, maxp1[idx(p2, q2)], maxq1[idx(p2, q2)]});
    for (int m1 = 0; m1 + 1 < R; ++m1)
        for (int n1 = 0; n1 + 1 < C; ++n1) {
            int m2 = minm2[idx(m1, n1)], n2 = minn2[idx(m1, n1)];
            if (m2 == kNone || n2 == kNone) continue;
            bool completable = false;
            for (const BR& b : brs)
                if (m1 <= b.p1max && n1 <= b.q1max && m2 <= b.p2 && n2 <= b.q2 && m1 < b.p2 &&
                    n1 < b.q2) {
                    completable = true;
                    break;
                }
            if (!completable) continue;
            // The overall lexicographic minimum has this (m1,n1): replacing any
            // witness's m2/n2 by the minimal dominated partner keeps all
            // constraints (they only appear as m2<=p2, n2<=q2).  Recover the
            // lexicographically least (p1,q1,p2,q2) completion directly.
            for (int p1 = m1; p1 + 1 < R; ++p1)
                for (int q1 = n1; q1 + 1 < C; ++q1)
                    for (int p2 = std::max(p1 + 1, std::max(m2, m1 + 1)); p2 < R; ++p2)
                        for (int q2 = std::max(q1 + 1, std::max(n2, n1 + 1)); q2 < C; ++q2)
                            if (detail::cmp_entries(m, p2, q1, p2, q2) <= 0 &&
                                detail::cmp_entries(m, p1, q2, p2, q2) <= 0)
                                return ObtuseWitness{m1, n1, m2, n2, p1, q1, p2, q2};
            // completable said yes, recovery must succeed
            throw std::logic_error("obtuse_check: completion lost");
        }
    return std::nullopt;
}

/// Entrywise classification of M against 1 under M's comparison policy.
inline SignMatrix to_sign_matrix(const ValueMatrix& m) {
    SignMatrix s(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            int cl = m.classify_vs_one(r, c);
            s.set(r, c, cl == 0 ? Sign::One : (cl > 0 ? Sign::Plus : Sign::Minus));
        }
    return s;
}

/// 0-1 indicator of which entries classify as exactly 1.
inline ZeroOneMatrix unit_skeleton_of(const ValueMatrix& m) {
    ZeroOneMatrix z(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) z.set(r, c, m.classify_vs_one(r, c) == 0 ? 1 : 0);
    return z;
}

}  // namespace ucl
