#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adhm {

/// Thrown on malformed input (bad text, inconsistent dimensions, failed
/// preconditions). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails (e.g. an ADHM datum
/// whose monad is not framed). The CLI maps it to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Rational = mpq_class;

/// Element re + im*i of the Gaussian rationals Q(i).
///
/// mpq_class keeps every component canonical (positive denominator, lowest
/// terms) after each operation, so structural equality is field equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Scalar ratio(long num, long den);
  static Scalar imag_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_rational() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re first, then im). Only used for canonical sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Text form: `3`, `-1/2`, `2+1/3i`, `-1i`.
  std::string to_string() const;
  /// Parses the grammar produced by to_string(); throws InputError.
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace adhm
