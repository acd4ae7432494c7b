#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace kpalg {

/// Coefficient ring: structural flags plus an optional exact backend.
class Ring {
 public:
  enum class Kind { Field, IntegralDomain, ZeroDivisors };
  enum class Backend { None, Rationals, Integers, IntegersMod };

  static Ring rationals();
  static Ring integers();
  /// Throws ParseError unless n >= 2.
  static Ring integers_mod(unsigned long n);
  static Ring flags(Kind kind, std::optional<std::pair<std::string, std::string>> zero_divisors = {});

  /// q | z | zmod:<n> | flags:field | flags:id | flags:zd(<r1>,<r2>)
  static Ring parse(const std::string& spec);

  Kind kind() const { return kind_; }
  Backend backend() const { return backend_; }
  bool is_field() const { return kind_ == Kind::Field; }
  bool is_domain() const { return kind_ != Kind::ZeroDivisors; }
  bool has_arithmetic() const { return backend_ != Backend::None; }
  unsigned long modulus() const { return modulus_; }
  /// A pair r1, r2 != 0 with r1 r2 = 0, for zero-divisor rings.
  const std::optional<std::pair<std::string, std::string>>& zero_divisors() const { return zero_divisors_; }

  std::string spec() const;
  std::string describe() const;

  /// Maps a rational into the ring; throws RingMismatch if it has no image
  /// (a fraction over Z, or a non-invertible denominator mod n).
  mpq_class normalize(const mpq_class& q) const;
  mpq_class parse_scalar(const std::string& text) const;
  std::string format(const mpq_class& q) const;
  bool is_zero(const mpq_class& q) const { return sgn(normalize(q)) == 0; }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.backend_ == b.backend_ && a.modulus_ == b.modulus_;
  }

 private:
  Kind kind_ = Kind::Field;
  Backend backend_ = Backend::Rationals;
  unsigned long modulus_ = 0;
  std::optional<std::pair<std::string, std::string>> zero_divisors_;
};

}  // namespace kpalg
