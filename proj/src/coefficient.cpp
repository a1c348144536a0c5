#include "revnf/coefficient.hpp"

#include <ostream>

#include "revnf/errors.hpp"

namespace revnf {

Coefficient::Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero coefficient");
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Coefficient::to_string() const {
  if (is_real()) return rational_text(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = rational_text(im_) + "*i";
  }
  if (sgn(re_) == 0) return im_part;
  std::string out = "(" + rational_text(re_);
  if (sgn(im_) > 0) out += "+";
  return out + im_part + ")";
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace revnf
