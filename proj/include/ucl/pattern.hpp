#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucl/exactcmp.hpp"
#include "ucl/matrix.hpp"
#include "ucl/rectilinear.hpp"

namespace ucl {

/// Strictly increasing row/column selections embedding a pattern in a host.
struct SelectionWitness {
    std::vector<int> rows, cols;
};

/// Submatrix containment in the pattern-avoidance sense: pattern 1s must map
/// to host 1s under strictly increasing row and column selections; pattern 0s
/// impose nothing.  Returns the first witness in (row tuple, greedy columns)
/// order, or nullopt.  A pattern larger than the host is simply not contained.
inline std::optional<SelectionWitness> contains_pattern(const ZeroOneMatrix& host,
                                                        const ZeroOneMatrix& pattern) {
    const int P = pattern.rows(), Q = pattern.cols();
    if (P > host.rows() || Q > host.cols()) return std::nullopt;

    // For fixed rows, an increasing column system exists iff the greedy
    // smallest-feasible choice completes (exchange argument).
    auto greedy_cols = [&](const std::vector<int>& rows, int upto_pattern_rows)
        -> std::optional<std::vector<int>> {
        std::vector<int> cols;
        int next = 0;
        for (int v = 0; v < Q; ++v) {
            int chosen = -1;
            for (int c = next; c < host.cols(); ++c) {
                if (host.cols() - c < Q - v) break;
                bool ok = true;
                for (int u = 0; u < upto_pattern_rows && ok; ++u)
                    if (pattern.at(u, v) && !host.at(rows[u], c)) ok = false;
                if (ok) {
                    chosen = c;
                    break;
                }
            }
            if (chosen < 0) return std::nullopt;
            cols.push_back(chosen);
            next = chosen + 1;
        }
        return cols;
    };

    std::vector<int> rows;
    // DFS over increasing host-row tuples; prune a prefix when even the
    // relaxed (prefix-only) column system is infeasible.
    auto dfs = [&](auto&& self, int u, int from) -> std::optional<SelectionWitness> {
        if (u == P) {
            if (auto cols = greedy_cols(rows, P)) return SelectionWitness{rows, *cols};
            return std::nullopt;
        }
        for (int r = from; r <= host.rows() - (P - u); ++r) {
            rows.push_back(r);
            if (greedy_cols(rows, u + 1)) {
                if (auto w = self(self, u + 1, r + 1)) return w;
            }
            rows.pop_back();
        }
        return std::nullopt;
    };
    return dfs(dfs, 0, 0);
}

// Named 0-1 patterns used throughout: Furedi's pattern, the two patterns of
// the log-bound lemma, the 4x4 core forbidden by the obtuse-angle property,
// and the 3x3/4x4 intertwining cycles.
namespace catalog {

inline ZeroOneMatrix furedi() { return {{1, 1, 0}, {1, 0, 1}}; }
inline ZeroOneMatrix tardos_a() { return {{1, 0, 1}, {0, 1, 1}}; }
inline ZeroOneMatrix tardos_b() { return {{1, 1}, {1, 0}, {0, 1}}; }
inline ZeroOneMatrix theorem1_core() {
    return {{1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}};
}
inline ZeroOneMatrix intertwine3() { return {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}; }
inline ZeroOneMatrix intertwine4() {
    return {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}};
}

struct NamedPattern {
    const char* name;
    ZeroOneMatrix matrix;
};

inline std::vector<NamedPattern> all() {
    return {{"FUREDI", furedi()},
            {"TARDOS_A", tardos_a()},
            {"TARDOS_B", tardos_b()},
            {"THEOREM1_CORE", theorem1_core()},
            {"INTERTWINE_3", intertwine3()},
            {"INTERTWINE_4", intertwine4()}};
}

}  // namespace catalog

/// Diagonal gluing: C holds A as its top-left block and B as its bottom-right
/// block, overlapping in exactly one cell (A's bottom-right 1 = B's top-left 1).
inline ZeroOneMatrix glue(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    if (!a.at(a.rows() - 1, a.cols() - 1))
        throw PreconditionError("glue: A's bottom-right entry must be 1");
    if (!b.at(0, 0)) throw PreconditionError("glue: B's top-left entry must be 1");
    ZeroOneMatrix c(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1);
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(r, j)) c.set(r, j, 1);
    for (int r = 0; r < b.rows(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            if (b.at(r, j)) c.set(a.rows() - 1 + r, a.cols() - 1 + j, 1);
    return c;
}

/// Result of an exact extremal-count search: `value` is the maximum number of
/// ones an a x b binary matrix can hold while avoiding `pattern`, certified by
/// exhaustive branch-and-bound; `example` attains it.
struct ExResult {
    int a, b;
    long long value = 0;
    ZeroOneMatrix example;
    long long nodes = 0;
    bool exact = true;
};

inline constexpr long long kDefaultExBudget = 200'000'000;

/// Branch-and-bound over entries in row-major order, trying 1 before 0.
/// Prunes when the remaining cells cannot beat the incumbent and when the
/// placed ones already embed the pattern (containment is monotone, so no
/// completion can recover).  Deterministic: the first optimum found is kept.
inline ExResult ex_bruteforce(int a, int b, const ZeroOneMatrix& pattern,
                              long long budget = kDefaultExBudget) {
    if (a < 1 || b < 1) throw PreconditionError("ex_bruteforce: dimensions must be >= 1");
    if (pattern.ones() == 0 && pattern.rows() <= a && pattern.cols() <= b)
        throw PreconditionError(
            "ex_bruteforce: pattern without ones embeds in every matrix of its size");
    ExResult res{a, b, -1, ZeroOneMatrix(a, b), 0, true};
    ZeroOneMatrix work(a, b);
    const int cells = a * b;
    long long ones = 0;
    auto dfs = [&](auto&& self, int idx) -> void {
        ++res.nodes;
        if (res.nodes > budget)
            throw BudgetExhaustedError("ex_bruteforce: node budget exhausted",
                                       res.value, res.nodes);
        if (ones + (cells - idx) <= res.value) return;
        if (idx == cells) {
            res.value = ones;
            res.example = work;
            return;
        }
        int r = idx / b, c = idx % b;
        work.set(r, c, 1);
        ++ones;
        if (!contains_pattern(work, pattern)) self(self, idx + 1);
        --ones;
        work.set(r, c, 0);
        self(self, idx + 1);
    };
    dfs(dfs, 0);
    return res;
}

/// Gluing superadditivity report: ex(a,b,A) + ex(a,b,B) >= ex(a,b,glue(A,B)).
struct Lemma1Report {
    long long ex_a, ex_b, ex_c;
    bool holds;
};

inline Lemma1Report verify_lemma1(int a, int b, const ZeroOneMatrix& A, const ZeroOneMatrix& B,
                                  long long budget = kDefaultExBudget) {
    ZeroOneMatrix C = glue(A, B);
    long long ea = ex_bruteforce(a, b, A, budget).value;
    long long eb = ex_bruteforce(a, b, B, budget).value;
    long long ec = ex_bruteforce(a, b, C, budget).value;
    return {ea, eb, ec, ea + eb >= ec};
}

/// An upper bound together with whether it is exact or a certified upper
/// rational approximation (log2 evaluated with error < 2^-32, rounded up).
struct BoundValue {
    Rational value;
    bool exact;
};

enum class TardosPattern { A, B };

/// (a+b)/2 * log2(a+b) + 2a  for pattern A;  ... + 2b  for pattern B.
inline BoundValue tardos_bound(long a, long b, TardosPattern which) {
    if (a < 1 || b < 1) throw PreconditionError("tardos_bound: a, b must be >= 1");
    auto [lo, hi] = log2_bounds(static_cast<unsigned long>(a + b));
    Rational tail = which == TardosPattern::A ? Rational(2 * a) : Rational(2 * b);
    return {Rational(a + b) / 2 * hi + tail, lo == hi};
}

/// n * log2(n) + 4n.
inline BoundValue theorem1_bound(long n) {
    if (n < 3) throw PreconditionError("theorem1_bound: n must be >= 3");
    auto [lo, hi] = log2_bounds(static_cast<unsigned long>(n));
    return {Rational(n) * hi + Rational(4 * n), lo == hi};
}

/// Both certified sides of the same bound, for sound <=/> decisions.
inline std::pair<Rational, Rational> theorem1_bound_interval(long n) {
    if (n < 3) throw PreconditionError("theorem1_bound: n must be >= 3");
    auto [lo, hi] = log2_bounds(static_cast<unsigned long>(n));
    return {Rational(n) * lo + Rational(4 * n), Rational(n) * hi + Rational(4 * n)};
}

/// One enumeration record: a discarded candidate and the filter that killed it.
struct Corollary2Audit {
    ZeroOneMatrix matrix;
    std::string reason;  // "contains-all-ones-2x2" or "cycle-with-corner-one"
};

struct Corollary2Result {
    std::vector<ZeroOneMatrix> survivors;
    std::vector<Corollary2Audit> discarded;
    int candidates = 0;  // 3x3 matrices with >= 6 ones
};

/// Enumerates all 512 binary 3x3 matrices, keeps those with at least 6 ones,
/// and filters: (1) anything containing the all-ones 2x2 (forbidden by the
/// diagonal property); (2) any whose ones form a single cycle carrying a 1 in
/// the top-left or bottom-right corner (cycles with such a corner contain an
/// edge crossed by no other cycle edge).
inline Corollary2Result enumerate_corollary2() {
    Corollary2Result out;
    ZeroOneMatrix all2(2, 2);
    all2.set(0, 0, 1);
    all2.set(0, 1, 1);
    all2.set(1, 0, 1);
    all2.set(1, 1, 1);
    for (int mask = 0; mask < 512; ++mask) {
        ZeroOneMatrix m(3, 3);
        int ones = 0;
        for (int bit = 0; bit < 9; ++bit)
            if (mask & (1 << bit)) {
                m.set(bit / 3, bit % 3, 1);
                ++ones;
            }
        if (ones < 6) continue;
        ++out.candidates;
        if (contains_pattern(m, all2)) {
            out.discarded.push_back({m, "contains-all-ones-2x2"});
            continue;
        }
        if (ones_form_single_cycle(m) && (m.at(0, 0) || m.at(2, 2))) {
            out.discarded.push_back({m, "cycle-with-corner-one"});
            continue;
        }
        out.survivors.push_back(m);
    }
    return out;
}

}  // namespace ucl
