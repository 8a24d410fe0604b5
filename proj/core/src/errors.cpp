#include "evohealth/errors.hpp"

#include <sstream>

namespace evohealth {

RangeError::RangeError(std::string field, const std::string& detail)
    : Error("RangeError(" + field + "): " + detail), field_(std::move(field)) {}

namespace {

std::string no_root_message(double max_residual, double argmax) {
    std::ostringstream os;
    os.precision(6);
    os << "NoRootError: first-order condition has no sign change on (0,1); max G = "
       << max_residual << " at x = " << argmax;
    return os.str();
}

}  // namespace

NoRootError::NoRootError(double max_residual, double argmax)
    : Error(no_root_message(max_residual, argmax)),
      max_residual_(max_residual),
      argmax_(argmax) {}

}  // namespace evohealth
