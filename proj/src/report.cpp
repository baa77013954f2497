#include "gfl/report.hpp"

#include <sstream>

namespace gfl {

std::string describe(const IdentityReport& r) {
  std::ostringstream os;
  os << r.id << " (";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) os << ", ";
    os << r.params[i].first << "=" << r.params[i].second;
  }
  os << "): " << r.left << (r.pass ? " == " : " != ") << r.right;
  return os.str();
}

}  // namespace gfl
