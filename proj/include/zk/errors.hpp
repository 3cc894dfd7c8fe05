#pragma once

#include <stdexcept>

namespace zk {

/// Raised when a computation would exceed its configured enumeration or time budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed database or input file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zk
