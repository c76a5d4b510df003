#pragma once

#include <stdexcept>
#include <string>

namespace zonospace {

// Bad argument values or malformed input (negative lengths, duplicate nodes, bad JSON).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation that needs a pure zonogon was handed a body with a disc component.
class unsupported_representation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arguments outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Linear algebra breakdown (singular system, no convergence).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hyperbolic witness requested along a direction with zero perimeter.
class degenerate_direction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace zonospace
