#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

// A computation produced something structurally impossible, e.g. a count that
// came out fractional or negative, or a symmetry total not divisible by the
// group order.  Signals a bug in a formula, never bad user input.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Orbit and class counts distinguish rows from columns, so they are only
// defined for shapes with rows != cols.
struct SquareShapeError : std::domain_error {
    explicit SquareShapeError(const std::string& what) : std::domain_error(what) {}
};

// Brute-force enumeration was asked to run on a shape above its cell budget.
struct OracleLimitError : std::domain_error {
    OracleLimitError(int cells_, int limit_)
        : std::domain_error("brute-force enumeration refused: " + std::to_string(cells_) +
                            " cells exceeds the limit of " + std::to_string(limit_)),
          cells(cells_),
          limit(limit_) {}
    int cells;
    int limit;
};

// A specific computation method was requested for a shape it does not cover.
struct UnsupportedMethodError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace wordrep
