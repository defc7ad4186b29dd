#pragma once

#include <stdexcept>
#include <string>

namespace chainlat {

/// Malformed input text (bad poset file, unknown element, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Declared covers create a directed cycle.
class CycleError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A configured enumeration cap was exceeded. Names the violated budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& budget, long long limit)
        : std::runtime_error("budget '" + budget + "' exhausted (limit " +
                             std::to_string(limit) + ")"),
          budget_(budget), limit_(limit) {}
    const std::string& budget() const { return budget_; }
    long long limit() const { return limit_; }

private:
    std::string budget_;
    long long limit_;
};

/// Operation requires a planar lattice (width of the underlying poset at most 2).
class NonPlanarError : public std::runtime_error {
public:
    explicit NonPlanarError(const std::string& what = "lattice is not planar")
        : std::runtime_error(what) {}
};

/// Requested antichain size exceeds the poset width.
class WidthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The monomial set is not closed under sorting.
class NotSortableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural guarantee failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace chainlat
