#include "cardlogic/cardinal.hpp"

namespace cardlogic {

std::string Cardinal::to_string() const {
    if (infinite_) return "aleph_" + std::to_string(value_);
    return std::to_string(value_);
}

}  // namespace cardlogic
