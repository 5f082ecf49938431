#include "torfold/errors.hpp"

#include <sstream>

namespace torfold {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].condition << " on {" << violations[i].site_a << ", "
        << violations[i].site_b << "}";
  }
  return out.str();
}

}  // namespace torfold
