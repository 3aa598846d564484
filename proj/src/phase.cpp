#include "qext/phase.hpp"

#include <cmath>

namespace qext {

double Phase::radians() const {
    return 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace qext
