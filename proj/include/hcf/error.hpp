#pragma once

#include <stdexcept>
#include <string>

namespace hcf {

/// Raised when a certified decision could not be reached at the available
/// precision (overlapping enclosures, interval source too coarse).
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an iteration budget (digits, periods, brute-force cap) runs out
/// before the question was settled. Never a "false" answer.
class budget_exhausted : public std::runtime_error {
public:
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure (e.g. neither fixed point of a period
/// reproduces its digits).
class inconsistency : public std::logic_error {
public:
    explicit inconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hcf
