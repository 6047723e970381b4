#pragma once

#include <stdexcept>
#include <string>

namespace shirshov {

/// Malformed or out-of-contract input: bad JSON, unknown symbols,
/// out-of-range element indices, invalid group tables.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exhaustive oracles and enumerators when a size guard trips.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Rewriting did not reach a normal form within its step budget.
class StepBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shirshov
