#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace kpalg {

/// A vector in Z^k, also used for N^k degrees and for extended degrees in
/// (N u {inf})^k, where an infinite coordinate is stored as `kInfinity`.
class Degree {
 public:
  static constexpr long kInfinity = std::numeric_limits<long>::max();

  Degree() = default;
  explicit Degree(std::size_t rank) : coords_(rank, 0) {}
  Degree(std::initializer_list<long> coords) : coords_(coords) {}
  explicit Degree(std::vector<long> coords) : coords_(std::move(coords)) {}

  static Degree unit(std::size_t rank, std::size_t color) {
    Degree d(rank);
    d.coords_[color] = 1;
    return d;
  }
  static Degree constant(std::size_t rank, long value) {
    return Degree(std::vector<long>(rank, value));
  }

  std::size_t rank() const { return coords_.size(); }
  long operator[](std::size_t i) const { return coords_[i]; }
  long& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<long>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c == 0; });
  }
  bool is_finite() const {
    return std::none_of(coords_.begin(), coords_.end(), [](long c) { return c == kInfinity; });
  }
  bool is_nonnegative() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c >= 0; });
  }
  long total() const {
    long t = 0;
    for (long c : coords_) t += c;
    return t;
  }

  /// Coordinatewise order; infinity dominates every finite value.
  bool leq(const Degree& other) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (coords_[i] > other.coords_[i]) return false;
    return true;
  }

  friend Degree operator+(const Degree& a, const Degree& b) {
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
      r.coords_[i] = (a[i] == kInfinity || b[i] == kInfinity) ? kInfinity : a[i] + b[i];
    return r;
  }
  /// Subtraction; an infinite minuend stays infinite.
  friend Degree operator-(const Degree& a, const Degree& b) {
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
      r.coords_[i] = a[i] == kInfinity ? kInfinity : a[i] - b[i];
    return r;
  }
  friend Degree operator-(const Degree& a) {
    Degree r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.coords_[i] = -a[i];
    return r;
  }
  Degree& operator+=(const Degree& b) { return *this = *this + b; }

  friend auto operator<=>(const Degree&, const Degree&) = default;
  friend bool operator==(const Degree&, const Degree&) = default;

  std::string to_string(char sep = ',') const;

 private:
  std::vector<long> coords_;
};

/// Pointwise minimum m ^ n.
Degree meet(const Degree& a, const Degree& b);
/// Pointwise maximum m v n.
Degree join(const Degree& a, const Degree& b);
/// Positive and negative parts: d = pos(d) - neg(d).
Degree positive_part(const Degree& d);
Degree negative_part(const Degree& d);

/// All n with 0 <= n <= bound, in lexicographic order.
std::vector<Degree> box(const Degree& bound);

std::ostream& operator<<(std::ostream& os, const Degree& d);

}  // namespace kpalg
