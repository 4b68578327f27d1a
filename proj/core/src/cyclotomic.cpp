#include "rhocalc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rhocalc/error.hpp"

namespace rhocalc {

namespace {

// Exact division of integer polynomials by a monic divisor (low to high).
std::vector<long> divide_monic(std::vector<long> dividend, const std::vector<long>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  std::vector<long> quotient(dividend.size() - dd, 0);
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const long c = dividend[i];
    quotient[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) dividend[i - dd + j] -= c * divisor[j];
  }
  return quotient;
}

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1) throw ValidationError("cyclotomic order must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<long> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_monic(poly, get(d)->polynomial());
  }
  polynomial_ = std::move(poly);
  degree_ = static_cast<int>(polynomial_.size()) - 1;

  powers_.assign(order_, std::vector<long>(degree_, 0));
  std::vector<long> current(degree_, 0);
  current[0] = 1;
  for (int k = 0; k < order_; ++k) {
    powers_[k] = current;
    // Multiply by x and reduce: x^d = -sum_{j<d} phi_j x^j.
    const long top = current[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) current[j] = current[j - 1] - top * polynomial_[j];
    current[0] = -top * polynomial_[0];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int order) {
  static std::recursive_mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  std::shared_ptr<const CyclotomicField> field(new CyclotomicField(order));
  cache.emplace(order, field);
  return field;
}

const std::vector<long>& CyclotomicField::power(long k) const {
  return powers_[mod_floor(k, order_)];
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic() : Cyclotomic(1, Rational(0)) {}

Cyclotomic::Cyclotomic(int order, const Rational& value)
    : field_(CyclotomicField::get(order)), coefficients_(field_->degree(), Rational(0)) {
  coefficients_[0] = value;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coefficients)
    : field_(CyclotomicField::get(order)) {
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coefficients.size() <= d) {
    coefficients.resize(d, Rational(0));
    coefficients_ = std::move(coefficients);
    return;
  }
  // Longer input is read as a polynomial in zeta and reduced.
  coefficients_.assign(d, Rational(0));
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    if (coefficients[e] == 0) continue;
    const auto& row = field_->power(static_cast<long>(e));
    for (std::size_t j = 0; j < d; ++j) {
      if (row[j] != 0) coefficients_[j] += coefficients[e] * row[j];
    }
  }
}

Cyclotomic Cyclotomic::root_of_unity(int order, long k) {
  auto field = CyclotomicField::get(order);
  const auto& row = field->power(k);
  std::vector<Rational> coefficients(row.begin(), row.end());
  return Cyclotomic(order, std::move(coefficients));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coefficients_.size(); ++j) {
    if (coefficients_[j] != 0) return false;
  }
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw ValidationError("cyclotomic value " + to_string() + " is not rational");
  return coefficients_[0];
}

Cyclotomic Cyclotomic::galois(long s) const {
  const int n = order();
  if (std::gcd(mod_floor(s, n), static_cast<long>(n)) != 1 && n > 1) {
    throw ValidationError("galois exponent must be a unit mod the order");
  }
  std::vector<Rational> out(coefficients_.size(), Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) continue;
    const auto& row = field_->power(s * static_cast<long>(k));
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (row[j] != 0) out[j] += coefficients_[k] * row[j];
    }
  }
  return Cyclotomic(order(), std::move(out));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::lift(int m) const {
  if (m % order() != 0) {
    throw ValidationError("cannot lift Q(zeta_" + std::to_string(order()) + ") to Q(zeta_" +
                          std::to_string(m) + ")");
  }
  if (m == order()) return *this;
  const long step = m / order();
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coefficients_.size(), Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) poly[k * step] = coefficients_[k];
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero cyclotomic value");
  // x^-1 = prod_{s != 1} sigma_s(x) / N(x), with N(x) the field norm.
  const int n = order();
  Cyclotomic cofactor = one(n);
  for (long s = 2; s < n; ++s) {
    if (std::gcd(s, static_cast<long>(n)) == 1) cofactor *= galois(s);
  }
  const Cyclotomic norm = *this * cofactor;
  return Rational(1) / norm.rational_value() * cofactor;
}

bool Cyclotomic::is_purely_imaginary() const { return (*this + conj()).is_zero(); }

BigFloatComplex Cyclotomic::embed(mpfr_prec_t precision_bits) const {
  // Guard bits absorb the cancellation in the power-basis sum.
  const mpfr_prec_t work = precision_bits + 64;
  BigFloat re(work);
  BigFloat im(work);
  const BigFloat two_pi = BigFloat::pi(work) * BigFloat(2.0, work);
  const BigFloat n(static_cast<double>(order()), work);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] == 0) continue;
    const BigFloat angle = two_pi * BigFloat(static_cast<double>(k), work) / n;
    BigFloat s(work);
    BigFloat c(work);
    sin_cos(angle, s, c);
    const BigFloat coeff(coefficients_[k], work);
    re = re + coeff * c;
    im = im + coeff * s;
  }
  return {re.rounded(precision_bits), im.rounded(precision_bits)};
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rhocalc::to_string(coefficients_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const auto& c = coefficients_[k];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << rhocalc::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << rhocalc::to_string(magnitude) << "*";
    out << "z";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

void Cyclotomic::require_same_field(const Cyclotomic& other, const char* op) const {
  if (order() != other.order()) {
    throw ValidationError(std::string("cyclotomic ") + op + ": order mismatch (" +
                          std::to_string(order()) + " vs " + std::to_string(other.order()) +
                          "); lift to a common order first");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_field(other, "add");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] += other.coefficients_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same_field(other, "subtract");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] -= other.coefficients_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_field(b, "multiply");
  const std::size_t d = a.coefficients_.size();
  std::vector<Rational> product(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coefficients_[j] == 0) continue;
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Cyclotomic(a.order(), std::move(product));
}

Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& c : out.coefficients_) c *= s;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a) { return Rational(-1) * a; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coefficients_ == b.coefficients_;
  Cyclotomic x = a;
  Cyclotomic y = b;
  lift_common(x, y);
  return x.coefficients_ == y.coefficients_;
}

void lift_common(Cyclotomic& a, Cyclotomic& b) {
  const int m = lcm_order(a.order(), b.order());
  a = a.lift(m);
  b = b.lift(m);
}

}  // namespace rhocalc
