#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace qmaps {

/// Exact rational number in lowest terms with a positive denominator.
///
/// All arithmetic is exact. Every operation leaves the value normalized, so
/// structural equality of numerator/denominator is value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  Scalar(const mpz_class& numerator, const mpz_class& denominator);
  explicit Scalar(const mpq_class& value);

  /// Parses `p`, `p/q`, `+p/q` or `-p/q` (decimal digits only). The input
  /// need not be reduced; the result always is.
  static Scalar parse(std::string_view text);

  /// `p/q` in lowest terms, or `p` when the denominator is 1.
  std::string str() const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_positive() const noexcept { return sign() > 0; }
  bool is_one() const noexcept { return q_ == 1; }

  /// Max of the bit lengths of numerator and denominator.
  std::size_t bit_length() const;

  /// Height: max(|numerator|, denominator).
  mpz_class height() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) {
    q_ += rhs.q_;
    return *this;
  }
  Scalar& operator-=(const Scalar& rhs) {
    q_ -= rhs.q_;
    return *this;
  }
  Scalar& operator*=(const Scalar& rhs) {
    q_ *= rhs.q_;
    return *this;
  }
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Scalar operator-(const Scalar& v) { return from_canonical(mpq_class(-v.q_)); }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.q_ == rhs.q_; }
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& v);

  /// Adopts a value the caller guarantees is already in lowest terms.
  static Scalar from_canonical(mpq_class value) {
    Scalar s;
    s.q_ = std::move(value);
    return s;
  }

 private:
  mpq_class q_;
};

/// base^exponent, exact. Negative exponents require a nonzero base.
Scalar pow(const Scalar& base, long exponent);

/// Square root when both numerator and denominator are perfect squares.
std::optional<Scalar> try_sqrt_exact(const Scalar& s);

/// As try_sqrt_exact, but throws NotPerfectSquare. Requires s > 0.
Scalar sqrt_exact(const Scalar& s);

}  // namespace qmaps
