#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fipkit {

/// Field element. Every value is kept in canonical form for its field:
/// an integer in [0, p) for F_p, a reduced fraction with positive
/// denominator for Q. Equality of elements is therefore equality of values.
using Scalar = mpq_class;

/// The coefficient field: either a prime field F_p or the rationals.
class Field {
 public:
  enum class Kind { prime, rationals };

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::int64_t p);
  static Field rationals() { return Field(Kind::rationals, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// p for F_p, 0 for Q.
  std::int64_t characteristic() const noexcept { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;

  bool is_canonical(const Scalar& a) const;

  /// Scalar text syntax: decimal in [0, p) for F_p; `a` or `a/b` with
  /// b > 0 and gcd(|a|, b) = 1 for Q. Throws std::invalid_argument.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  /// "F2", "F5", "Q".
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument.
  static Field from_name(std::string_view name);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Scalar reduce(const mpz_class& v) const;

  Kind kind_;
  std::int64_t p_;
};

}  // namespace fipkit
