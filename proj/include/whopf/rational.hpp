// Exact rational scalar backed by GMP, usable as an Eigen scalar type.
#pragma once

#include <gmp.h>
#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace whopf {

/// Arbitrary-precision rational number, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}   // NOLINT: implicit, Eigen builds Scalar(0)/Scalar(1)
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional sign, decimal digits).
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    mpq_neg(a.v_.get_mpq_t(), a.v_.get_mpq_t());
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace whopf

namespace Eigen {

template <>
struct NumTraits<whopf::Rational> : GenericNumTraits<whopf::Rational> {
  using Real = whopf::Rational;
  using NonInteger = whopf::Rational;
  using Nested = whopf::Rational;
  using Literal = whopf::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
