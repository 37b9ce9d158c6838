#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucl/checks.hpp"
#include "ucl/matrix.hpp"
#include "ucl/simplex.hpp"

namespace ucl {

/// One row of the diagonal-feasibility system, kept as a descriptor so
/// certificates can be re-evaluated without touching the solver.
struct DiagonalConstraint {
    enum class Kind { Quadruple, Positivity, Box };
    Kind kind;
    bool strict;          // quadruple and positivity rows encode strict inequalities
    int i = -1, j = -1, k = -1, l = -1;  // quadruple indices (0-based)
    int var = -1;                        // variable index for positivity/box rows
    // row as   sum coeff_v x_v  (<|<=)  rhs
    std::vector<std::pair<int, Rational>> coeffs;
    Rational rhs;
};

/// The strict linear system "positive entries, ones fixed, all diagonal
/// inequalities strict", together with its margin-LP encoding.
struct FeasibilityProblem {
    ZeroOneMatrix skeleton;
    Rational box;                      // upper bound U on every free entry
    std::vector<int> var_of_cell;      // -1 for 1-cells, else variable index
    int n_vars = 0;
    std::vector<DiagonalConstraint> constraints;  // quadruples, positivity, box

    int quad_count = 0;  // C(rows,2) * C(cols,2)
};

inline FeasibilityProblem build_diagonal_problem(const ZeroOneMatrix& skel, Rational box) {
    FeasibilityProblem p{skel, std::move(box), {}, 0, {}, 0};
    const int R = skel.rows(), C = skel.cols();
    p.var_of_cell.assign(static_cast<size_t>(R) * C, -1);
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            if (!skel.at(r, c)) p.var_of_cell[static_cast<size_t>(r) * C + c] = p.n_vars++;
    auto var_at = [&](int r, int c) { return p.var_of_cell[static_cast<size_t>(r) * C + c]; };
    // entry(i,j) + entry(k,l) < entry(i,l) + entry(k,j) for i < k, j < l
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            for (int k = i + 1; k < R; ++k)
                for (int l = j + 1; l < C; ++l) {
                    DiagonalConstraint con;
                    con.kind = DiagonalConstraint::Kind::Quadruple;
                    con.strict = true;
                    con.i = i;
                    con.j = j;
                    con.k = k;
                    con.l = l;
                    Rational constant = 0;
                    auto add = [&](int r, int c, int s) {
                        int v = var_at(r, c);
                        if (v < 0) constant += s;
                        else con.coeffs.push_back({v, Rational(s)});
                    };
                    add(i, j, 1);
                    add(k, l, 1);
                    add(i, l, -1);
                    add(k, j, -1);
                    con.rhs = -constant;
                    p.constraints.push_back(std::move(con));
                    ++p.quad_count;
                }
    for (int v = 0; v < p.n_vars; ++v) {
        DiagonalConstraint con;
        con.kind = DiagonalConstraint::Kind::Positivity;
        con.strict = true;
        con.var = v;
        con.coeffs.push_back({v, Rational(-1)});
        con.rhs = 0;
        p.constraints.push_back(std::move(con));
    }
    for (int v = 0; v < p.n_vars; ++v) {
        DiagonalConstraint con;
        con.kind = DiagonalConstraint::Kind::Box;
        con.strict = false;
        con.var = v;
        con.coeffs.push_back({v, Rational(1)});
        con.rhs = p.box;
        p.constraints.push_back(std::move(con));
    }
    return p;
}

struct CertificateTerm {
    size_t constraint_index;
    Rational multiplier;  // > 0
};

/// Re-derives the contradiction from scratch: the multipliers must cancel
/// every variable, put positive weight on at least one strict row, and push
/// the combined right-hand side to <= 0 -- which reads 0 < 0 against the
/// strict system.  Shares no state with the simplex.
inline bool evaluate_certificate(const FeasibilityProblem& p,
                                 const std::vector<CertificateTerm>& cert) {
    if (cert.empty()) return false;
    std::vector<Rational> combined(p.n_vars, Rational(0));
    Rational rhs = 0, strict_weight = 0;
    for (const auto& term : cert) {
        if (sgn(term.multiplier) <= 0) return false;
        if (term.constraint_index >= p.constraints.size()) return false;
        const auto& con = p.constraints[term.constraint_index];
        for (const auto& [v, coef] : con.coeffs) combined[v] += term.multiplier * coef;
        rhs += term.multiplier * con.rhs;
        if (con.strict) strict_weight += term.multiplier;
    }
    for (const auto& c : combined)
        if (sgn(c) != 0) return false;
    return sgn(strict_weight) > 0 && sgn(rhs) <= 0;
}

struct FeasibilityVerdict {
    enum class Status { Feasible, Infeasible };
    Status status;
    Rational delta_star;  // optimum of the margin LP
    Rational box;

    // Feasible: a witness matrix with exact ones at the skeleton, all entries
    // positive, every diagonal inequality strict with slack >= delta_star.
    std::optional<ValueMatrix> witness;
    Rational margin;  // delta_star / 2, the conservatively reported margin

    // Infeasible: multipliers over the constraint system.
    std::vector<CertificateTerm> certificate;
    bool certificate_verified = false;
    bool box_free = false;  // no box row carries weight: infeasible for every U
};

/// Decides, by exact LP, whether any positive matrix with ones exactly at the
/// skeleton's 1-cells (free entries in (0, U]) satisfies every strict
/// diagonal inequality.  Strictness is encoded by maximizing a margin
/// variable: delta* > 0 yields a witness, delta* <= 0 yields a nonnegative
/// combination of constraints that contradicts itself.
inline FeasibilityVerdict realizable_diagonal(const ZeroOneMatrix& skel, Rational box = 3) {
    if (static_cast<long long>(skel.rows()) * skel.cols() > 36)
        throw SizeCapError("realizable_diagonal: skeleton exceeds 36 cells");
    if (sgn(box) <= 0) throw PreconditionError("realizable_diagonal: box must be positive");
    FeasibilityProblem p = build_diagonal_problem(skel, box);

    FeasibilityVerdict out;
    out.box = p.box;

    if (p.constraints.empty()) {
        // no free cells and no quadruples: the constant matrix is the witness
        out.status = FeasibilityVerdict::Status::Feasible;
        out.delta_star = 1;
        out.margin = Rational(1, 2);
        ValueMatrix w(skel.rows(), skel.cols());
        for (int r = 0; r < skel.rows(); ++r)
            for (int c = 0; c < skel.cols(); ++c) w.at(r, c) = 1;
        out.witness = std::move(w);
        return out;
    }

    // variables: x_0..x_{V-1}, then delta = dplus - dminus
    const int n = p.n_vars + 2;
    const int dplus = p.n_vars, dminus = p.n_vars + 1;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& con : p.constraints) {
        std::vector<Rational> row(n, Rational(0));
        for (const auto& [v, coef] : con.coeffs) row[v] = coef;
        if (con.strict) {
            row[dplus] = 1;
            row[dminus] = -1;
        }
        A.push_back(std::move(row));
        b.push_back(con.rhs);
    }
    std::vector<Rational> c(n, Rational(0));
    c[dplus] = 1;
    c[dminus] = -1;
    auto res = Simplex(n, std::move(A), std::move(b), std::move(c)).solve();
    if (res.status != Simplex::Status::Optimal)
        throw std::runtime_error("realizable_diagonal: margin LP did not reach an optimum");
    out.delta_star = res.objective;

    if (sgn(out.delta_star) > 0) {
        out.status = FeasibilityVerdict::Status::Feasible;
        out.margin = out.delta_star / 2;
        ValueMatrix w(skel.rows(), skel.cols());
        for (int r = 0; r < skel.rows(); ++r)
            for (int c2 = 0; c2 < skel.cols(); ++c2) {
                int v = p.var_of_cell[static_cast<size_t>(r) * skel.cols() + c2];
                w.at(r, c2) = v < 0 ? Rational(1) : res.x[v];
            }
        if (diagonal_check(w)) throw std::logic_error("feasible witness fails diagonal check");
        out.witness = std::move(w);
        return out;
    }

    out.status = FeasibilityVerdict::Status::Infeasible;
    // The dual leaves a nonnegative residue on variables whose sign
    // constraint x >= 0 is active only implicitly; fold each residue into the
    // explicit positivity row so the certificate cancels exactly.
    std::vector<Rational> mult(p.constraints.size(), Rational(0));
    for (size_t i = 0; i < p.constraints.size(); ++i) mult[i] = res.dual[i];
    std::vector<Rational> residue(p.n_vars, Rational(0));
    for (size_t i = 0; i < p.constraints.size(); ++i) {
        if (sgn(mult[i]) == 0) continue;
        for (const auto& [v, coef] : p.constraints[i].coeffs) residue[v] += mult[i] * coef;
    }
    for (int v = 0; v < p.n_vars; ++v) {
        if (sgn(residue[v]) == 0) continue;
        if (sgn(residue[v]) < 0)
            throw std::logic_error("realizable_diagonal: negative dual residue");
        mult[static_cast<size_t>(p.quad_count) + v] += residue[v];
    }
    out.box_free = true;
    for (size_t i = 0; i < p.constraints.size(); ++i) {
        if (sgn(mult[i]) == 0) continue;
        out.certificate.push_back({i, mult[i]});
        if (p.constraints[i].kind == DiagonalConstraint::Kind::Box) out.box_free = false;
    }
    out.certificate_verified = evaluate_certificate(p, out.certificate);
    if (!out.certificate_verified)
        throw std::logic_error("realizable_diagonal: dual certificate failed re-evaluation");
    return out;
}

}  // namespace ucl
