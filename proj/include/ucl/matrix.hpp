#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ucl/errors.hpp"
#include "ucl/rational.hpp"

namespace ucl {

/// Rectangular binary matrix, row-major, 0-based addressing.
class ZeroOneMatrix {
public:
    ZeroOneMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be >= 1");
    }

    ZeroOneMatrix(std::initializer_list<std::initializer_list<int>> rows)
        : rows_(static_cast<int>(rows.size())), cols_(0) {
        if (rows_ == 0) throw PreconditionError("matrix dimensions must be >= 1");
        cols_ = static_cast<int>(rows.begin()->size());
        if (cols_ == 0) throw PreconditionError("matrix dimensions must be >= 1");
        e_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged rows");
            for (int v : r) {
                if (v != 0 && v != 1) throw PreconditionError("entries must be 0 or 1");
                e_.push_back(static_cast<uint8_t>(v));
            }
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) {
        if (v != 0 && v != 1) throw PreconditionError("entries must be 0 or 1");
        e_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint8_t>(v);
    }

    long long ones() const {
        long long n = 0;
        for (uint8_t v : e_) n += v;
        return n;
    }

    ZeroOneMatrix transposed() const {
        ZeroOneMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
        return t;
    }

    /// Reverses both the row order and the column order.
    ZeroOneMatrix reversed() const {
        ZeroOneMatrix t(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.set(rows_ - 1 - r, cols_ - 1 - c, at(r, c));
        return t;
    }

    friend bool operator==(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<uint8_t> e_;
};

enum class Sign : uint8_t { One, Plus, Minus };

/// How a ValueMatrix classifies an entry as "equal to 1".  The tolerance
/// applies only to that classification; property checks always compare
/// entries exactly.
struct ComparisonPolicy {
    bool exact = true;
    Rational eps = 0;  // meaningful only when !exact; must be >= 0

    static ComparisonPolicy Exact() { return {}; }
    static ComparisonPolicy Tolerance(Rational e) {
        if (sgn(e) < 0) throw PreconditionError("tolerance must be nonnegative");
        return ComparisonPolicy{false, std::move(e)};
    }
};

/// Rectangular matrix of exact rationals.  When `squared` is set the stored
/// values are squares of the conceptual (nonnegative) entries; this is how
/// geometric distance matrices stay exact.  All comparisons go through the
/// helpers in checks.hpp, which honor the flag.
class ValueMatrix {
public:
    ValueMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be >= 1");
    }

    ValueMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : rows_(static_cast<int>(rows.size())), cols_(0) {
        if (rows_ == 0) throw PreconditionError("matrix dimensions must be >= 1");
        cols_ = static_cast<int>(rows.begin()->size());
        if (cols_ == 0) throw PreconditionError("matrix dimensions must be >= 1");
        e_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged rows");
            for (const Rational& v : r) e_.push_back(v);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    ComparisonPolicy policy;
    bool squared = false;

    /// Entry classification against 1 under the policy: -1 below, 0 equal, +1 above.
    /// For squared matrices the conceptual entry is sqrt(stored), so the test
    /// runs on squared thresholds; entries must be nonnegative in that mode.
    int classify_vs_one(int r, int c) const {
        const Rational& v = at(r, c);
        if (!squared) {
            if (policy.exact) return cmp(v, 1) < 0 ? -1 : (v == 1 ? 0 : 1);
            if (v >= 1 - policy.eps && v <= 1 + policy.eps) return 0;
            return v < 1 ? -1 : 1;
        }
        if (sgn(v) < 0) throw PreconditionError("squared matrix has a negative entry");
        if (policy.exact) return cmp(v, 1) < 0 ? -1 : (v == 1 ? 0 : 1);
        // |sqrt(v) - 1| <= eps  <=>  (1-eps)^2 <= v <= (1+eps)^2, lower bound
        // dropping out when eps >= 1.
        Rational hi = (1 + policy.eps) * (1 + policy.eps);
        if (v > hi) return 1;
        if (policy.eps >= 1) return 0;
        Rational lo = (1 - policy.eps) * (1 - policy.eps);
        return v < lo ? -1 : 0;
    }

    ValueMatrix reversed() const {
        ValueMatrix t(rows_, cols_);
        t.policy = policy;
        t.squared = squared;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(rows_ - 1 - r, cols_ - 1 - c) = at(r, c);
        return t;
    }

    friend bool operator==(const ValueMatrix& a, const ValueMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.squared == b.squared && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// Ternary classification matrix over {1, +, -}.
class SignMatrix {
public:
    SignMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Sign::One) {
        if (rows < 1 || cols < 1) throw PreconditionError("matrix dimensions must be >= 1");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Sign at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, Sign s) { e_[static_cast<size_t>(r) * cols_ + c] = s; }

    friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<Sign> e_;
};

inline char sign_char(Sign s) {
    switch (s) {
        case Sign::One: return '1';
        case Sign::Plus: return '+';
        default: return '-';
    }
}

}  // namespace ucl
