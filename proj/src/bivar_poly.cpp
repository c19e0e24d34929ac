#include "lacunae/bivar_poly.hpp"

#include "lacunae/error.hpp"

#include <cctype>
#include <string>

namespace lacunae {

BivarPoly::BivarPoly(const BigRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BivarPoly BivarPoly::monomial(const BigRational& c, unsigned xp, unsigned yp) {
  BivarPoly p;
  p.add_term(c, xp, yp);
  return p;
}

BigRational BivarPoly::coeff(unsigned xp, unsigned yp) const {
  auto it = terms_.find(Monomial{xp, yp});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void BivarPoly::add_term(const BigRational& c, unsigned xp, unsigned yp) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{xp, yp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BivarPoly::deg_x() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.xp);
}

int BivarPoly::deg_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.yp));
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m.xp, m.yp);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m.xp, m.yp);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ca * cb, ma.xp + mb.xp, ma.yp + mb.yp);
    }
  }
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BivarPoly BivarPoly::shifted(unsigned dx, unsigned dy) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.xp + dx, m.yp + dy}, c);
  return r;
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly result(1);
  BivarPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::diff_x(unsigned k) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.xp < k) continue;
    BigInt falling = 1;
    for (unsigned i = 0; i < k; ++i) falling *= m.xp - i;
    r.terms_.emplace(Monomial{m.xp - k, m.yp}, c * BigRational(falling));
  }
  return r;
}

BigRational BivarPoly::evaluate(const BigRational& x, const BigRational& y) const {
  BigRational sum = 0;
  for (const auto& [m, c] : terms_) sum += c * x.pow(m.xp) * y.pow(m.yp);
  return sum;
}

BivarPoly BivarPoly::substitute(const BivarPoly& x_sub, const BivarPoly& y_sub) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) r += x_sub.pow(m.xp) * y_sub.pow(m.yp) * c;
  return r;
}

std::string BivarPoly::canonical_str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.fraction_str() + " * x^" + std::to_string(m.xp) + " * y^" + std::to_string(m.yp);
  }
  return out;
}

namespace {

std::string superscript(unsigned n) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (n == 0) return digits[0];
  std::string s;
  while (n > 0) {
    s.insert(0, digits[n % 10]);
    n /= 10;
  }
  return s;
}

std::string power_str(char var, unsigned p) {
  std::string s(1, var);
  if (p > 1) s += superscript(p);
  return s;
}

}  // namespace

std::string BivarPoly::pretty_str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (m.xp > 0) mono += power_str('x', m.xp);
    if (m.yp > 0) mono += (mono.empty() ? "" : " ") + power_str('y', m.yp);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + " " + mono;
    }
  }
  return out;
}

std::optional<Term> first_difference(const BivarPoly& a, const BivarPoly& b) {
  const BivarPoly d = a - b;
  if (d.is_zero()) return std::nullopt;
  const auto& [m, c] = *d.begin();
  return Term{m, c};
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly result;
    skip_ws();
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (!first && peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      // canonical output writes negative terms as "+ -c", so signs may stack
      while (pos_ < text_.size() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        ++pos_;
        skip_ws();
      }
      result += parse_term() * BigRational(sign);
      first = false;
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  BivarPoly parse_term() {
    BigRational coef = 1;
    unsigned xp = 0;
    unsigned yp = 0;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coef *= parse_number();
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        unsigned e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        (c == 'x' ? xp : yp) += e;
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
    }
    if (!any) fail("expected a factor");
    return BivarPoly::monomial(coef, xp, yp);
  }

  BigRational parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
        ++pos_;
      }
    };
    digits();
    if (pos_ + 1 < text_.size() && peek() == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    return BigRational::parse(text_.substr(start, pos_ - start));
  }

  unsigned parse_exponent() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace lacunae
