#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ucl/matrix.hpp"

namespace ucl {

namespace detail {

/// Row/col indices of the two ones in each nonempty line, or nullopt if some
/// line has an invalid count (not 0 and not 2).
struct LinePairs {
    // pairs[r] = {c_first, c_second} for rows; analogous for cols
    std::vector<std::optional<std::pair<int, int>>> row_pair, col_pair;
    int one_count = 0;
};

inline std::optional<LinePairs> line_pairs(const ZeroOneMatrix& m) {
    LinePairs lp;
    lp.row_pair.assign(m.rows(), std::nullopt);
    lp.col_pair.assign(m.cols(), std::nullopt);
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> cs;
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) cs.push_back(c);
        if (cs.size() != 0 && cs.size() != 2) return std::nullopt;
        if (cs.size() == 2) lp.row_pair[r] = {cs[0], cs[1]};
        lp.one_count += static_cast<int>(cs.size());
    }
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<int> rs;
        for (int r = 0; r < m.rows(); ++r)
            if (m.at(r, c)) rs.push_back(r);
        if (rs.size() != 0 && rs.size() != 2) return std::nullopt;
        if (rs.size() == 2) lp.col_pair[c] = {rs[0], rs[1]};
    }
    return lp;
}

}  // namespace detail

/// True iff every row and column holds 0 or exactly 2 ones and pairing the
/// row ones horizontally and the column ones vertically links every 1-entry
/// into one closed cycle.
inline bool ones_form_single_cycle(const ZeroOneMatrix& m) {
    auto lp = detail::line_pairs(m);
    if (!lp || lp->one_count == 0) return false;
    // walk: start anywhere, alternate horizontal and vertical partners
    int r0 = -1, c0 = -1;
    for (int r = 0; r < m.rows() && r0 < 0; ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) {
                r0 = r;
                c0 = c;
                break;
            }
    int r = r0, c = c0, visited = 0;
    bool horizontal = true;
    do {
        ++visited;
        if (horizontal) {
            auto& p = lp->row_pair[r];
            if (!p) return false;
            c = (p->first == c) ? p->second : p->first;
        } else {
            auto& p = lp->col_pair[c];
            if (!p) return false;
            r = (p->first == r) ? p->second : p->first;
        }
        horizontal = !horizontal;
    } while (!(r == r0 && c == c0 && horizontal));
    return visited == lp->one_count;
}

/// Recognizes matrices whose 1-entries, joined by a horizontal segment per
/// row pair and a vertical segment per column pair, trace a single
/// non-self-intersecting rectilinear polygon (1-entries at lattice points
/// (col, -row)).  Three ones in a line fail the degree rule, so every
/// 1-entry is a genuine polygon vertex.
///
/// Under the degree rule the only possible improper contact is a proper
/// interior crossing of a horizontal and a vertical segment: a segment
/// endpoint inside another segment would put a third 1 in that line.
inline bool is_rectilinear_polygon_matrix(const ZeroOneMatrix& m) {
    auto lp = detail::line_pairs(m);
    if (!lp || lp->one_count == 0) return false;
    if (!ones_form_single_cycle(m)) return false;
    for (int r = 0; r < m.rows(); ++r) {
        if (!lp->row_pair[r]) continue;
        auto [c1, c2] = *lp->row_pair[r];
        for (int c = 0; c < m.cols(); ++c) {
            if (!lp->col_pair[c]) continue;
            auto [r1, r2] = *lp->col_pair[c];
            if (c1 < c && c < c2 && r1 < r && r < r2) return false;
        }
    }
    return true;
}

}  // namespace ucl
