#include "galmag/galilean.hpp"

namespace galmag {

std::ostream& operator<<(std::ostream& os, const GVector3& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

}  // namespace galmag
