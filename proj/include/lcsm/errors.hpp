#pragma once

#include <stdexcept>
#include <string>

namespace lcsm {

/// Precondition or configuration violation. Maps to CLI exit code 1.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or search ran out of its explicit budget. Maps to exit code 3.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw InvalidArgument(message);
    }
}

}  // namespace lcsm
