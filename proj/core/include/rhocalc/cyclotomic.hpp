#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rhocalc/bigfloat.hpp"
#include "rhocalc/rational.hpp"

namespace rhocalc {

/// Shared, immutable data for Q(zeta_n): the cyclotomic polynomial and the
/// reductions of x^k mod Phi_n for 0 <= k < n.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }

  /// Phi_n, coefficients low to high, monic, length degree()+1.
  const std::vector<long>& polynomial() const { return polynomial_; }

  /// Power-basis coordinates of zeta^k, any integer k.
  const std::vector<long>& power(long k) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<long> polynomial_;
  std::vector<std::vector<long>> powers_;
};

/// Exact element of Q(zeta_n), stored in the power basis 1, zeta, ...,
/// zeta^(d-1) with d = phi(n). The representation is canonical, so equal
/// field elements compare equal coefficientwise.
///
/// Binary arithmetic requires equal orders and throws ValidationError on a
/// mismatch; lift both operands with lift() or lift_common() first.
class Cyclotomic {
 public:
  /// Zero of Q (order 1).
  Cyclotomic();
  Cyclotomic(int order, const Rational& value);
  Cyclotomic(int order, std::vector<Rational> coefficients);

  static Cyclotomic zero(int order) { return Cyclotomic(order, Rational(0)); }
  static Cyclotomic one(int order) { return Cyclotomic(order, Rational(1)); }
  /// zeta_n^k.
  static Cyclotomic root_of_unity(int order, long k);

  int order() const { return field_->order(); }
  int degree() const { return field_->degree(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_value() const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclotomic conj() const;
  /// Image under zeta -> zeta^s, gcd(s, n) = 1.
  Cyclotomic galois(long s) const;
  /// Same value viewed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic lift(int m) const;
  Cyclotomic inverse() const;

  bool is_real() const { return *this == conj(); }
  /// x + conj(x) == 0.
  bool is_purely_imaginary() const;

  /// Numeric value under zeta_n -> exp(2 pi i / n).
  BigFloatComplex embed(mpfr_prec_t precision_bits) const;

  /// Human-readable exact form, e.g. "-1/9" or "1/3 + 2*z^2" (z = zeta_n).
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  friend Cyclotomic operator-(const Cyclotomic& a);

  /// Exact equality; operands of different order are compared in the
  /// common field.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void require_same_field(const Cyclotomic& other, const char* op) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coefficients_;
};

/// Lifts both values to Q(zeta_lcm).
void lift_common(Cyclotomic& a, Cyclotomic& b);

int lcm_order(int a, int b);

}  // namespace rhocalc
