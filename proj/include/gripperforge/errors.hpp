#pragma once

#include <stdexcept>
#include <string>

namespace gripperforge {

// Invalid numeric input or out-of-range query. The message names the
// violated bound.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An analysis reached a negative verdict that blocks the requested artifact:
// no stock size meets the margin, or an object cannot enter the gripper.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what, double best_margin = 0.0)
        : std::runtime_error(what), best_margin_(best_margin) {}

    // Best safety margin achieved while searching (design solver only).
    double best_margin() const noexcept { return best_margin_; }

private:
    double best_margin_;
};

// Filesystem/stream failure at the tool layer.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gripperforge
