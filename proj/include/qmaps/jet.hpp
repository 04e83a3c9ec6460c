#pragma once

#include <array>
#include <utility>

#include "qmaps/scalar.hpp"

namespace qmaps {

/// First-order jet in two variables: a value with its exact partials
/// with respect to x (d1) and y (d2).
class Jet2 {
 public:
  Jet2() = default;
  Jet2(long constant) : value_(constant) {}               // NOLINT(google-explicit-constructor)
  Jet2(Scalar constant) : value_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  Jet2(Scalar value, Scalar d1, Scalar d2)
      : value_(std::move(value)), d1_(std::move(d1)), d2_(std::move(d2)) {}

  /// The coordinate function x seeded at `value`: partials (1, 0).
  static Jet2 variable_x(Scalar value) { return {std::move(value), 1, 0}; }
  /// The coordinate function y seeded at `value`: partials (0, 1).
  static Jet2 variable_y(Scalar value) { return {std::move(value), 0, 1}; }

  const Scalar& value() const noexcept { return value_; }
  const Scalar& d1() const noexcept { return d1_; }
  const Scalar& d2() const noexcept { return d2_; }

  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(const Jet2& rhs);
  /// Quotient rule; throws DivisionByZero when rhs.value() == 0.
  Jet2& operator/=(const Jet2& rhs);

  friend Jet2 operator+(Jet2 lhs, const Jet2& rhs) { return lhs += rhs; }
  friend Jet2 operator-(Jet2 lhs, const Jet2& rhs) { return lhs -= rhs; }
  friend Jet2 operator*(Jet2 lhs, const Jet2& rhs) { return lhs *= rhs; }
  friend Jet2 operator/(Jet2 lhs, const Jet2& rhs) { return lhs /= rhs; }
  friend Jet2 operator-(const Jet2& v) { return {-v.value_, -v.d1_, -v.d2_}; }

  friend bool operator==(const Jet2&, const Jet2&) = default;

 private:
  Scalar value_;
  Scalar d1_;
  Scalar d2_;
};

/// Exact 2x2 Jacobian, row i = gradient of output component i.
struct Jacobian2 {
  std::array<std::array<Scalar, 2>, 2> entries;

  const Scalar& operator()(int row, int col) const { return entries[row][col]; }
  Scalar det() const { return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]; }

  friend bool operator==(const Jacobian2&, const Jacobian2&) = default;
};

/// Seeds (x, y) with unit partials and evaluates a rational map written
/// generically over its scalar type, `f(std::array<T, 2>) -> std::array<T, 2>`.
template <class Map>
std::array<Jet2, 2> jet_eval(Map&& f, const Scalar& x, const Scalar& y) {
  const std::array<Jet2, 2> seed{Jet2::variable_x(x), Jet2::variable_y(y)};
  return std::forward<Map>(f)(seed);
}

inline Jacobian2 jacobian_of(const std::array<Jet2, 2>& jets) {
  return Jacobian2{{{{jets[0].d1(), jets[0].d2()}, {jets[1].d1(), jets[1].d2()}}}};
}

}  // namespace qmaps
