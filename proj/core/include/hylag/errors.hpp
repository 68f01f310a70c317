#pragma once

#include <stdexcept>
#include <string>

namespace hylag {

/// Thrown when an argument violates an operation's preconditions.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an exhaustive computation would exceed its configured budget.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Retryable failure of the randomized sparse builder: no attempt produced a
/// valid graph. Carries the best shortfall seen so callers can tell whether
/// the parameters are simply infeasible at this scale.
class SparseBuildError : public std::runtime_error {
public:
    SparseBuildError(const std::string& what, long best_edges, long required_edges)
        : std::runtime_error(what), best_edges(best_edges), required_edges(required_edges) {}

    long best_edges = 0;
    long required_edges = 0;
};

}  // namespace hylag
