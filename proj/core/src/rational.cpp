#include "kneser/rational.hpp"

#include <cctype>

#include "kneser/errors.hpp"

namespace kneser {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  auto dot = s.find('.');
  std::string_view ip = s.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (dot != std::string_view::npos && fp.empty()) {
    fail(ErrorKind::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  }
  if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) {
    fail(ErrorKind::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  }
  BigInt num(std::string(ip) + std::string(fp), 10);
  BigInt den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  Rational value = parse_decimal(s.substr(0, slash), text);
  if (slash != std::string_view::npos) {
    std::string_view d = s.substr(slash + 1);
    if (!all_digits(d)) fail(ErrorKind::InvalidArgument, "malformed number '" + std::string(text) + "'");
    BigInt den(std::string(d), 10);
    if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    value /= Rational(den);
  }
  if (negative) value = -value;
  return value;
}

BigInt floor_of(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& r) {
  if (sgn(r) >= 0) {
    if (r < 1) return r;
    if (r < 2) return r - 1;
  } else if (r >= -1) {
    return r + 1;
  }
  return r - Rational(floor_of(r));
}

}  // namespace kneser
