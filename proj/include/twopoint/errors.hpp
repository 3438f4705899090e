#pragma once

#include <stdexcept>
#include <string>

namespace twopoint {

// Failures that follow from the mathematics of a valid request, as opposed to
// malformed arguments (those throw std::invalid_argument).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroTrials : public DomainError {
public:
    ZeroTrials() : DomainError("number of trials rounds down to zero") {}
};

class NonPositiveEndpoint : public DomainError {
public:
    explicit NonPositiveEndpoint(const std::string& what) : DomainError(what) {}
};

class InconsistentResponses : public DomainError {
public:
    explicit InconsistentResponses(const std::string& what) : DomainError(what) {}
};

class ZeroVariance : public DomainError {
public:
    ZeroVariance() : DomainError("difference variable has zero variance") {}
};

}  // namespace twopoint
