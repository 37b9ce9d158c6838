#pragma once

#include <vector>

#include "ucl/rational.hpp"

namespace ucl {

/// Dense exact-rational simplex for   maximize c.x  s.t.  A x <= b,  x >= 0.
/// Two phases with explicit artificials, Bland's rule throughout (entering:
/// lowest eligible column; leaving: lowest basic variable among ratio ties),
/// so results and certificates are reproducible.
class Simplex {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    struct Result {
        Status status;
        Rational objective;
        std::vector<Rational> x;     // primal values, size n
        std::vector<Rational> dual;  // one multiplier per constraint row, >= 0
    };

    Simplex(int n_vars, std::vector<std::vector<Rational>> A, std::vector<Rational> b,
            std::vector<Rational> c)
        : n_(n_vars), A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {}

    Result solve() const {
        const int m = static_cast<int>(A_.size());
        // columns: n structural, m slacks, up to m artificials, then rhs
        std::vector<int> art_col(m, -1);
        std::vector<int> row_sign(m, 1);
        int n_art = 0;
        for (int i = 0; i < m; ++i)
            if (sgn(b_[i]) < 0) {
                row_sign[i] = -1;
                art_col[i] = n_art++;
            }
        const int cols = n_ + m + n_art;
        std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
        std::vector<int> basis(m);
        int art_base = n_ + m;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n_; ++j) T[i][j] = Rational(row_sign[i]) * A_[i][j];
            T[i][n_ + i] = Rational(row_sign[i]);
            T[i][cols] = Rational(row_sign[i]) * b_[i];
            if (art_col[i] >= 0) {
                T[i][art_base + art_col[i]] = 1;
                basis[i] = art_base + art_col[i];
            } else {
                basis[i] = n_ + i;
            }
        }

        auto run = [&](const std::vector<Rational>& obj, bool forbid_art) -> bool {
            // objective row: z_j - c_j, plus objective value in the rhs slot
            std::vector<Rational> zrow(cols + 1, Rational(0));
            for (int j = 0; j <= cols; ++j) {
                Rational z = 0;
                for (int i = 0; i < m; ++i)
                    if (sgn(obj[basis[i]]) != 0) z += obj[basis[i]] * T[i][j];
                zrow[j] = z - (j < cols ? obj[j] : Rational(0));
            }
            while (true) {
                int enter = -1;
                for (int j = 0; j < cols; ++j) {
                    if (forbid_art && j >= art_base) continue;
                    if (sgn(zrow[j]) < 0) {
                        enter = j;
                        break;
                    }
                }
                if (enter < 0) {
                    obj_row_ = zrow;
                    return true;
                }
                int leave = -1;
                Rational best_ratio;
                for (int i = 0; i < m; ++i) {
                    if (sgn(T[i][enter]) <= 0) continue;
                    Rational ratio = T[i][cols] / T[i][enter];
                    if (leave < 0 || ratio < best_ratio ||
                        (ratio == best_ratio && basis[i] < basis[leave])) {
                        leave = i;
                        best_ratio = ratio;
                    }
                }
                if (leave < 0) return false;  // unbounded
                pivot(T, basis, zrow, leave, enter, cols);
            }
        };

        if (n_art > 0) {
            std::vector<Rational> phase1(cols, Rational(0));
            for (int j = art_base; j < cols; ++j) phase1[j] = -1;
            if (!run(phase1, false)) return {Status::Unbounded, 0, {}, {}};
            // phase-1 optimum is -(sum of artificials); nonzero means infeasible
            if (sgn(obj_row_[cols]) != 0) return {Status::Infeasible, 0, {}, {}};
            // drive any artificial still basic out of the basis
            for (int i = 0; i < m; ++i) {
                if (basis[i] < art_base) continue;
                int enter = -1;
                for (int j = 0; j < art_base; ++j)
                    if (sgn(T[i][j]) != 0) {
                        enter = j;
                        break;
                    }
                if (enter >= 0) pivot(T, basis, obj_row_, i, enter, cols);
                // else: the row is redundant; the artificial stays basic at 0
            }
        }

        std::vector<Rational> phase2(cols, Rational(0));
        for (int j = 0; j < n_; ++j) phase2[j] = c_[j];
        if (!run(phase2, true)) return {Status::Unbounded, 0, {}, {}};

        Result res;
        res.status = Status::Optimal;
        res.x.assign(n_, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n_) res.x[basis[i]] = T[i][cols];
        res.objective = 0;
        for (int j = 0; j < n_; ++j)
            if (sgn(c_[j]) != 0) res.objective += c_[j] * res.x[j];
        res.dual.assign(m, Rational(0));
        for (int i = 0; i < m; ++i) res.dual[i] = Rational(row_sign[i]) * obj_row_[n_ + i];
        return res;
    }

private:
    static void pivot(std::vector<std::vector<Rational>>& T, std::vector<int>& basis,
                      std::vector<Rational>& zrow, int leave, int enter, int cols) {
        Rational piv = T[leave][enter];
        for (int j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (size_t i = 0; i < T.size(); ++i) {
            if (static_cast<int>(i) == leave || sgn(T[i][enter]) == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (sgn(zrow[enter]) != 0) {
            Rational f = zrow[enter];
            for (int j = 0; j <= cols; ++j) zrow[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    int n_;
    std::vector<std::vector<Rational>> A_;
    std::vector<Rational> b_;
    std::vector<Rational> c_;
    mutable std::vector<Rational> obj_row_;
};

}  // namespace ucl
