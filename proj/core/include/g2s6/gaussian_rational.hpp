#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <iosfwd>
#include <string>

namespace g2s6 {

/// Exact complex number re + i*im with re, im in Q.
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral I>
  GaussianRational(I re) : re_(static_cast<long>(re)) {}  // NOLINT: integer literals

  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// (re_num/re_den) + i (im_num/im_den)
  static GaussianRational from_ratio(long re_num, long re_den, long im_num = 0, long im_den = 1);
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws DomainError on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace g2s6
