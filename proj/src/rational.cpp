#include "lacunae/rational.hpp"

#include "lacunae/error.hpp"

#include <cctype>
#include <string>

namespace lacunae {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  if (digits.empty() || digits == "-" || digits == "+") {
    throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    return {parse_integer(trim(s.substr(0, slash)), text),
            parse_integer(trim(s.substr(slash + 1)), text)};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    std::string_view ip = s.substr(0, dot);
    const bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip = neg ? "-0" : "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt f = frac.empty() ? BigInt(0) : parse_integer(frac, text);
    if (f < 0) throw ParseError("malformed rational: '" + std::string(text) + "'");
    BigInt ipart = parse_integer(ip, text);
    BigInt num = ipart * scale + (neg ? BigInt(-f) : f);
    return {num, scale};
  }
  return BigRational(parse_integer(s, text));
}

std::string BigRational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::pow(unsigned e) const {
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  return {n, d};
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace lacunae
