#include "g2s6/gaussian_rational.hpp"

#include <ostream>
#include <sstream>

#include "g2s6/errors.hpp"

namespace g2s6 {

GaussianRational GaussianRational::from_ratio(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw DomainError("GaussianRational: zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Most entries in the matrix model are real or purely imaginary; skip the
  // cross terms then, since every mpq product pays for a gcd.
  const bool o_real = sgn(o.im_) == 0;
  const bool o_imag = sgn(o.re_) == 0;
  if (o_real && o_imag) {
    re_ = 0;
    im_ = 0;
    return *this;
  }
  if (o_real) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (o_imag) {
    mpq_class re = -(im_ * o.im_);
    im_ = re_ * o.im_;
    re_ = std::move(re);
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("GaussianRational: division by zero");
  const mpq_class n = o.norm();
  // z / w = z * conj(w) / |w|^2
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.is_real()) return os << z.re_.get_str();
  if (sgn(z.re_) == 0) return os << z.im_.get_str() << "i";
  os << "(" << z.re_.get_str() << (sgn(z.im_) < 0 ? "" : "+") << z.im_.get_str() << "i)";
  return os;
}

}  // namespace g2s6
