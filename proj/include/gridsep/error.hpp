#pragma once

#include <stdexcept>
#include <string>

namespace gridsep {

// Precondition violations: malformed grids, non-bijections, odd dims where
// evenness is required, out-of-range arguments.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested quantity is not known in closed form (odd dimensions).
class OpenProblem : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A construction was asked for with choices the grid cannot satisfy.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search refused to start, or ran out of budget before reaching its target.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, long long best)
        : std::runtime_error(what), best_(best) {}
    long long best() const noexcept { return best_; }

private:
    long long best_;
};

} // namespace gridsep
