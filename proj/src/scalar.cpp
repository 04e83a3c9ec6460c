#include "qmaps/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "qmaps/error.hpp"

namespace qmaps {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Scalar::Scalar(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Scalar::Scalar(const mpq_class& value) : q_(value) {
  if (q_.get_den() == 0) throw DivisionByZero();
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty rational");
  std::string_view body = text.substr(first, last - first + 1);

  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) num = -num;
  return Scalar(num, den);
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Scalar::bit_length() const {
  const mpz_class& num = q_.get_num();
  const std::size_t nb = num == 0 ? 0 : mpz_sizeinbase(num.get_mpz_t(), 2);
  const std::size_t db = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
  return std::max(nb, db);
}

mpz_class Scalar::height() const {
  mpz_class num = abs(q_.get_num());
  return num > q_.get_den() ? num : q_.get_den();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Scalar(r);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }

namespace {

Scalar pow_unsigned(const Scalar& base, unsigned long exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime, so no gcd pass is needed.
  mpq_class r;
  mpz_swap(mpq_numref(r.get_mpq_t()), num.get_mpz_t());
  mpz_swap(mpq_denref(r.get_mpq_t()), den.get_mpz_t());
  return Scalar::from_canonical(std::move(r));
}

}  // namespace

Scalar pow(const Scalar& base, long exponent) {
  if (exponent >= 0) return pow_unsigned(base, static_cast<unsigned long>(exponent));
  return pow_unsigned(base.inverse(), static_cast<unsigned long>(-exponent));
}

std::optional<Scalar> try_sqrt_exact(const Scalar& s) {
  if (s.sign() < 0) return std::nullopt;
  const mpz_class num = s.numerator();
  const mpz_class den = s.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar(rn, rd);
}

Scalar sqrt_exact(const Scalar& s) {
  if (!s.is_positive()) throw InvalidArgument("sqrt_exact requires a positive argument");
  auto r = try_sqrt_exact(s);
  if (!r) throw NotPerfectSquare(s.str());
  return *r;
}

}  // namespace qmaps
