#include "digifix/point.hpp"

#include <cstdlib>
#include <sstream>

#include "digifix/errors.hpp"

namespace digifix {

namespace {

std::string join_violations(const std::vector<std::string>& violated) {
  std::string msg = "premise violated:";
  for (const auto& v : violated) msg += " [" + v + "]";
  return msg;
}

}  // namespace

PremiseViolation::PremiseViolation(std::vector<std::string> violated)
    : std::runtime_error(join_violations(violated)), violated_(std::move(violated)) {}

Point Point::operator+(const Point& offset) const {
  if (offset.dim() != dim()) throw InputError("translation offset has dimension " + std::to_string(offset.dim()));
  std::vector<Coord> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += offset[i];
  return Point(std::move(c));
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

bool cu_adjacent(const Point& x, const Point& y, int u) {
  if (x.dim() != y.dim()) {
    throw InputError("dimension mismatch: " + x.to_string() + " vs " + y.to_string());
  }
  if (u < 1 || static_cast<std::size_t>(u) > x.dim()) {
    throw InputError("adjacency parameter u=" + std::to_string(u) + " outside [1, " + std::to_string(x.dim()) + "]");
  }
  int differing = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const Coord diff = x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
    if (diff == 0) continue;
    if (diff != 1) return false;
    ++differing;
  }
  return differing >= 1 && differing <= u;
}

}  // namespace digifix
