#include "apgp/hash.hpp"

#include <iomanip>
#include <sstream>

namespace apgp {

std::string to_hex(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << value;
    return out.str();
}

}  // namespace apgp
