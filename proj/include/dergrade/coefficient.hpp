#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dergrade {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + i*im with arbitrary precision parts.
///
/// Both parts are kept in lowest terms by the rational backend, so two
/// coefficients are equal iff their parts are equal and zero has a single
/// representation.
class Coefficient {
public:
  Coefficient() = default;
  Coefficient(std::int64_t re) : re_(re) {} // NOLINT(google-explicit-constructor)
  Coefficient(rational re, rational im = rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

  static Coefficient i() { return Coefficient(rational(0), rational(1)); }

  const rational& re() const noexcept { return re_; }
  const rational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Coefficient conj() const { return {re_, -im_}; }

  Coefficient operator-() const { return {-re_, -im_}; }

  Coefficient& operator+=(const Coefficient& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    rational re = re_ * o.re_ - im_ * o.im_;
    rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Coefficient& operator/=(const Coefficient& o) {
    if (o.is_zero()) throw std::domain_error("division by zero coefficient");
    rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
    if (c.im_.is_zero()) return os << c.re_;
    if (c.re_.is_zero()) return os << c.im_ << "i";
    os << "(" << c.re_;
    if (c.im_ > 0) os << "+";
    return os << c.im_ << "i)";
  }

private:
  rational re_{0};
  rational im_{0};
};

} // namespace dergrade
