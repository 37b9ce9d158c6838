#pragma once

#include <stdexcept>
#include <string>

namespace ucl {

/// Malformed input text (matrix files, polygon files, rational tokens).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation received an input outside its documented domain.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds a documented size cap (matrix dimensions, LP size, cycle count).
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded search ran out of its node budget.  Carries the best bound found
/// so far; the result is explicitly inexact.
class BudgetExhaustedError : public std::runtime_error {
public:
    BudgetExhaustedError(const std::string& what, long long best_so_far, long long nodes)
        : std::runtime_error(what), best_so_far(best_so_far), nodes(nodes) {}
    long long best_so_far;
    long long nodes;
};

/// Polygon validation failures, each distinct so callers can react per kind.
class NonConvexError : public std::runtime_error {
public:
    explicit NonConvexError(const std::string& what) : std::runtime_error(what) {}
};
class CollinearTripleError : public std::runtime_error {
public:
    explicit CollinearTripleError(const std::string& what) : std::runtime_error(what) {}
};
class DuplicateVertexError : public std::runtime_error {
public:
    explicit DuplicateVertexError(const std::string& what) : std::runtime_error(what) {}
};
class OrientationError : public std::runtime_error {
public:
    explicit OrientationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ucl
