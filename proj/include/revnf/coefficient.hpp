#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace revnf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Gaussian rational a + b i with canonical reduced fractions.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational re, Rational im = 0);

  static Coefficient imaginary_unit() { return Coefficient(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Coefficient conj() const { return Coefficient(re_, -im_); }

  Coefficient operator-() const { return Coefficient(-re_, -im_); }
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// Canonical text: "3/2", "-i", "2*i", "(1/2-3*i)".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

/// Text of a rational: "p" or "p/q".
std::string rational_text(const Rational& q);
/// Parses "p" or "p/q"; throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace revnf
