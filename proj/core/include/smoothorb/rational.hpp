#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smoothorb {

using Rational = mpq_class;

/// Parses "a" or "a/b" with an optional leading sign. Throws Errc::Parse.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Element of Q(i), kept exact. Both parts are canonicalized after every
/// operation (lowest terms, positive denominators).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers convert implicitly
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Accepts `a`, `a/b`, `a+ci`, `a/b-c/di`, `ci`, `i`, `-i`. Throws Errc::Parse.
GaussianRational parse_gaussian(std::string_view text);

/// Inverse of parse_gaussian: "3/2", "-i", "1/2+3/4i", "2i".
std::string to_string(const GaussianRational& z);

}  // namespace smoothorb
