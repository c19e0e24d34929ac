#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace lacunae {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Accepts "p", "p/q" or a plain decimal such as "-0.125".
  static BigRational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q".
  std::string fraction_str() const;

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational pow(unsigned e) const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace lacunae
