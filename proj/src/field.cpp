#include "fipkit/field.hpp"

#include <cctype>
#include <stdexcept>

namespace fipkit {

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_decimal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime_number(p)) {
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  }
  return Field(Kind::prime, p);
}

Scalar Field::reduce(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::from_int(long v) const {
  if (is_prime()) return reduce(mpz_class(v));
  return Scalar(v);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return reduce(a.get_num() + b.get_num());
  return Scalar(a + b);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return reduce(a.get_num() - b.get_num());
  return Scalar(a - b);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return reduce(a.get_num() * b.get_num());
  return Scalar(a * b);
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime()) return reduce(-a.get_num());
  return Scalar(-a);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  if (is_prime()) {
    mpz_class r;
    mpz_class modulus(static_cast<long>(p_));
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), modulus.get_mpz_t());
    return Scalar(r);
  }
  return Scalar(1 / a);
}

bool Field::is_canonical(const Scalar& a) const {
  if (is_prime()) return a.get_den() == 1 && a >= 0 && a < p_;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  return a.get_den() > 0 && g == 1;
}

Scalar Field::parse(std::string_view text) const {
  const std::string s(text);
  if (is_prime()) {
    if (!is_decimal(s, false)) throw std::invalid_argument("bad F_p scalar: " + s);
    mpz_class v(s, 10);
    if (v >= p_) throw std::invalid_argument("scalar out of range [0,p): " + s);
    return Scalar(v);
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_decimal(s, true)) throw std::invalid_argument("bad rational: " + s);
    return Scalar(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false)) {
    throw std::invalid_argument("bad rational: " + s);
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw std::invalid_argument("rational not in lowest terms: " + s);
  return Scalar(n, d);
}

std::string Field::format(const Scalar& a) const { return a.get_str(10); }

std::string Field::name() const {
  if (is_prime()) return "F" + std::to_string(p_);
  return "Q";
}

Field Field::from_name(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F' && name[1] != '0' && is_decimal(name.substr(1), false) &&
      name.size() <= 12) {
    return prime(std::stoll(std::string(name.substr(1))));
  }
  throw std::invalid_argument("unknown field: " + std::string(name));
}

}  // namespace fipkit
