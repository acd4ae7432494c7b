#include "kpalg/degree.hpp"

namespace kpalg {

std::string Degree::to_string(char sep) const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += sep;
    out += coords_[i] == kInfinity ? std::string("inf") : std::to_string(coords_[i]);
  }
  return out;
}

Degree meet(const Degree& a, const Degree& b) {
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Degree join(const Degree& a, const Degree& b) {
  Degree r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Degree positive_part(const Degree& d) {
  Degree r(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) r[i] = std::max(0L, d[i]);
  return r;
}

Degree negative_part(const Degree& d) {
  Degree r(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) r[i] = std::max(0L, -d[i]);
  return r;
}

std::vector<Degree> box(const Degree& bound) {
  std::vector<Degree> out;
  Degree cur(bound.rank());
  if (!bound.is_nonnegative()) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = bound.rank();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (bound.rank() == 0) return out;
  }
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.rank() == 1) return os << d.to_string();
  return os << '(' << d.to_string() << ')';
}

}  // namespace kpalg
