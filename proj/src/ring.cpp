#include "kpalg/ring.hpp"

#include <cctype>
#include <regex>

#include "kpalg/error.hpp"

namespace kpalg {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::rationals() { return Ring(); }

Ring Ring::integers() {
  Ring r;
  r.kind_ = Kind::IntegralDomain;
  r.backend_ = Backend::Integers;
  return r;
}

Ring Ring::integers_mod(unsigned long n) {
  if (n < 2) throw Error(ErrorKind::ParseError, "zmod needs a modulus >= 2");
  Ring r;
  r.backend_ = Backend::IntegersMod;
  r.modulus_ = n;
  if (is_prime(n)) {
    r.kind_ = Kind::Field;
  } else {
    r.kind_ = Kind::ZeroDivisors;
    unsigned long p = 2;
    while (n % p != 0) ++p;
    r.zero_divisors_ = std::make_pair(std::to_string(p), std::to_string(n / p));
  }
  return r;
}

Ring Ring::flags(Kind kind, std::optional<std::pair<std::string, std::string>> zero_divisors) {
  Ring r;
  r.kind_ = kind;
  r.backend_ = Backend::None;
  r.zero_divisors_ = std::move(zero_divisors);
  return r;
}

Ring Ring::parse(const std::string& spec) {
  if (spec == "q") return rationals();
  if (spec == "z") return integers();
  if (spec == "flags:field") return flags(Kind::Field);
  if (spec == "flags:id") return flags(Kind::IntegralDomain);
  static const std::regex zmod(R"(zmod:(\d+))");
  static const std::regex zd(R"(flags:zd\(([^,()]+),([^,()]+)\))");
  std::smatch m;
  if (std::regex_match(spec, m, zmod)) {
    if (m[1].length() > 18) throw Error(ErrorKind::ParseError, "modulus too large: " + spec);
    return integers_mod(std::stoul(m[1]));
  }
  if (std::regex_match(spec, m, zd)) return flags(Kind::ZeroDivisors, std::make_pair(m[1].str(), m[2].str()));
  throw Error(ErrorKind::ParseError, "unknown ring spec '" + spec + "'");
}

std::string Ring::spec() const {
  switch (backend_) {
    case Backend::Rationals:
      return "q";
    case Backend::Integers:
      return "z";
    case Backend::IntegersMod:
      return "zmod:" + std::to_string(modulus_);
    case Backend::None:
      break;
  }
  switch (kind_) {
    case Kind::Field:
      return "flags:field";
    case Kind::IntegralDomain:
      return "flags:id";
    case Kind::ZeroDivisors:
      break;
  }
  if (zero_divisors_) return "flags:zd(" + zero_divisors_->first + "," + zero_divisors_->second + ")";
  return "flags:zd";
}

std::string Ring::describe() const {
  switch (kind_) {
    case Kind::Field:
      return "field";
    case Kind::IntegralDomain:
      return "integral domain";
    case Kind::ZeroDivisors:
      break;
  }
  return "commutative ring with zero divisors";
}

mpq_class Ring::normalize(const mpq_class& q) const {
  switch (backend_) {
    case Backend::Rationals:
      return q;
    case Backend::Integers:
      if (q.get_den() != 1) throw Error(ErrorKind::RingMismatch, "non-integer scalar " + q.get_str() + " over Z");
      return q;
    case Backend::IntegersMod: {
      mpz_class n(modulus_);
      mpz_class num = q.get_num() % n;
      if (num < 0) num += n;
      mpz_class den = q.get_den() % n;
      if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0)
          throw Error(ErrorKind::RingMismatch, "denominator of " + q.get_str() + " is not invertible");
        num = (num * inv) % n;
      }
      return mpq_class(num);
    }
    case Backend::None:
      break;
  }
  throw Error(ErrorKind::RingMismatch, "ring " + spec() + " has no arithmetic backend");
}

mpq_class Ring::parse_scalar(const std::string& text) const {
  static const std::regex scalar(R"(-?\d+(/\d+)?)");
  if (!std::regex_match(text, scalar)) throw Error(ErrorKind::ParseError, "bad scalar '" + text + "'");
  mpq_class q(text);
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return normalize(q);
}

std::string Ring::format(const mpq_class& q) const { return normalize(q).get_str(); }

}  // namespace kpalg
