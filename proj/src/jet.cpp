#include "qmaps/jet.hpp"

#include "qmaps/error.hpp"

namespace qmaps {

Jet2& Jet2::operator+=(const Jet2& rhs) {
  value_ += rhs.value_;
  d1_ += rhs.d1_;
  d2_ += rhs.d2_;
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) {
  value_ -= rhs.value_;
  d1_ -= rhs.d1_;
  d2_ -= rhs.d2_;
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& rhs) {
  // (uv)' = u'v + uv'
  d1_ = d1_ * rhs.value_ + value_ * rhs.d1_;
  d2_ = d2_ * rhs.value_ + value_ * rhs.d2_;
  value_ *= rhs.value_;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& rhs) {
  if (rhs.value_.is_zero()) throw DivisionByZero();
  // (u/v)' = (u'v - uv') / v^2
  const Scalar v2 = rhs.value_ * rhs.value_;
  d1_ = (d1_ * rhs.value_ - value_ * rhs.d1_) / v2;
  d2_ = (d2_ * rhs.value_ - value_ * rhs.d2_) / v2;
  value_ /= rhs.value_;
  return *this;
}

}  // namespace qmaps
