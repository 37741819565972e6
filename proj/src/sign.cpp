#include "orhyp/sign.hpp"

#include <string>

#include "orhyp/errors.hpp"

namespace orhyp {

Sign Sign::from_int(int value) {
    if (value == 1) return plus();
    if (value == -1) return minus();
    throw domain_error("sign must be +1 or -1, got " + std::to_string(value));
}

} // namespace orhyp
