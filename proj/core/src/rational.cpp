#include "smoothorb/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "smoothorb/error.hpp"

namespace smoothorb {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail(Errc::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
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
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational d = o.norm2();
  if (sgn(d) == 0) throw std::domain_error("division by zero in Q(i)");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) fail(Errc::Parse, "empty entry");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));

  const std::string_view body = text.substr(0, text.size() - 1);
  const auto sign = body.find_last_of("+-");
  const bool has_real = sign != std::string_view::npos && sign > 0;
  const std::string_view coefficient = has_real ? body.substr(sign) : body;
  Rational im;
  if (coefficient.empty() || coefficient == "+") {
    im = 1;
  } else if (coefficient == "-") {
    im = -1;
  } else {
    im = parse_rational(coefficient);
  }
  Rational re = has_real ? parse_rational(body.substr(0, sign)) : Rational(0);
  return {std::move(re), std::move(im)};
}

std::string to_string(const GaussianRational& z) {
  const int re_sign = sgn(z.re());
  const int im_sign = sgn(z.im());
  if (im_sign == 0) return to_string(z.re());
  std::string coefficient;
  if (z.im() == 1) {
    coefficient = "";
  } else if (z.im() == -1) {
    coefficient = "-";
  } else {
    coefficient = to_string(z.im());
  }
  if (re_sign == 0) return coefficient + "i";
  return to_string(z.re()) + (im_sign > 0 ? "+" : "") + coefficient + "i";
}

}  // namespace smoothorb
