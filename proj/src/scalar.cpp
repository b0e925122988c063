#include "adhm/scalar.hpp"

#include <cctype>
#include <ostream>

namespace adhm {

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw InputError("Scalar::ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  Rational n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  Rational mag = abs(im_);
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "-") + mag.get_str() + "i";
}

namespace {

// Parses `[sign]digits[/digits]` starting at pos; advances pos.
Rational parse_rational(std::string_view s, std::size_t& pos, bool allow_sign) {
  std::size_t start = pos;
  bool neg = false;
  if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  auto digits = [&]() -> std::string {
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) {
      throw InputError("malformed scalar '" + std::string(s) + "' at offset " +
                       std::to_string(start));
    }
    return std::string(s.substr(b, pos - b));
  };
  mpz_class num(digits());
  mpz_class den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = mpz_class(digits());
    if (den == 0) throw InputError("malformed scalar '" + std::string(s) + "': zero denominator");
  }
  Rational q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty()) throw InputError("empty scalar");
  Rational first = parse_rational(text, pos, true);
  if (pos == text.size()) return Scalar(first);
  if (text[pos] == 'i' && pos + 1 == text.size()) return {Rational(0), first};
  if (text[pos] != '+' && text[pos] != '-') {
    throw InputError("malformed scalar '" + std::string(text) + "'");
  }
  bool neg = text[pos] == '-';
  ++pos;
  Rational second = parse_rational(text, pos, false);
  if (pos + 1 != text.size() || text[pos] != 'i') {
    throw InputError("malformed scalar '" + std::string(text) + "': expected trailing 'i'");
  }
  return {first, neg ? Rational(-second) : second};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace adhm
