#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Raised by library operations. `condition()` names the violated
/// precondition (for instance "SingularMatrix" or "UnlistedSector") so that
/// front ends can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string condition, const std::string& detail)
        : std::runtime_error(condition + ": " + detail),
          condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

} // namespace toric
