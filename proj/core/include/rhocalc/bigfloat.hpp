#pragma once

#include <mpfr.h>

#include <string>

#include "rhocalc/rational.hpp"

namespace rhocalc {

/// Owning MPFR value with an explicit precision in bits. Results of binary
/// operations take the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 53);
  BigFloat(double value, mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  BigFloat abs() const;
  BigFloat rounded(mpfr_prec_t bits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }

  friend void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c);

 private:
  mpfr_t value_;
};

/// Complex number with BigFloat parts; the numeric embedding of cyclotomic
/// values.
struct BigFloatComplex {
  BigFloat real;
  BigFloat imag;

  mpfr_prec_t precision() const { return real.precision(); }
  BigFloat abs() const;

  friend BigFloatComplex operator+(const BigFloatComplex& a, const BigFloatComplex& b);
  friend BigFloatComplex operator-(const BigFloatComplex& a, const BigFloatComplex& b);
  friend BigFloatComplex operator*(const BigFloatComplex& a, const BigFloatComplex& b);
};

}  // namespace rhocalc
