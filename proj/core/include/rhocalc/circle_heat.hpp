#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhocalc/error.hpp"
#include "rhocalc/rational.hpp"

namespace rhocalc {

using Complex = std::complex<long double>;

/// Settings for the heat-kernel quadratures. Arithmetic is x87 extended
/// precision, so precision_bits must lie in [53, 64].
struct QuadratureConfig {
  long double abs_tol = 1e-14L;
  long double rel_tol = 1e-12L;
  /// Boundary between the small-t and large-t panels.
  long double t_split = 1.0L;
  int max_subdivisions = 400;
  int precision_bits = 64;

  void validate() const;
};

/// coeff * pi^pi_power * i^i_power, the exact shape of every circle eta
/// value (coeff * i / pi).
struct PiMonomial {
  Rational coeff;
  int pi_power = -1;
  int i_power = 1;

  Complex to_complex() const;
  /// e.g. "11/6*I/pi".
  std::string to_string() const;
  friend bool operator==(const PiMonomial&, const PiMonomial&) = default;
};

/// Integral kernel of D exp(-t D^2), D = -i d/dx on the real line:
///   i (x - y) / (2t sqrt(4 pi t)) * exp(-(x - y)^2 / (4t)).
/// Throws ValidationError for t <= 0.
Complex kernel_value(long double x, long double y, long double t);

/// Thrown when a quadrature exhausts max_subdivisions; carries what was
/// computed so far.
class QuadratureError : public ComputationError {
 public:
  QuadratureError(const std::string& what, Complex partial, long double error)
      : ComputationError(what), partial_value(partial), error_estimate(error) {}
  Complex partial_value;
  long double error_estimate;
};

enum class IntegrationOrder { TimeOuter, SpaceOuter };

struct EtaTerm {
  Complex value;
  long double error_estimate = 0;
  long evaluations = 0;
};

/// Contribution of the deck transformation x -> x + n (n != 0) to the
/// delocalized eta integral of the circle,
///   (1/sqrt(pi)) int_0^inf int_0^1 k_t(x + n, x) dx dt / sqrt(t),
/// by nested adaptive quadrature. The closed form is i / (pi n).
EtaTerm eta_term(long n, const QuadratureConfig& cfg, IntegrationOrder order = IntegrationOrder::TimeOuter);

/// Closed form of eta_term: (1/n) * i / pi.
PiMonomial eta_term_exact(long n);

/// Certificate attached to a custom subset family.
struct ConvergenceCertificate {
  bool convergent = false;
  std::string text;
  std::optional<Complex> value;
};

/// A subset X of the positive integers, enumerated in increasing order.
class SubsetFamily {
 public:
  enum class Kind { Finite, ArithmeticProgression, IndexGeometric, Primes, Custom };
  /// index -> element, or nullopt once a finite generator is exhausted.
  using Generator = std::function<std::optional<Integer>(std::size_t)>;

  /// Sorted and deduplicated; all elements must be >= 1.
  static SubsetFamily finite(std::vector<long> elements);
  /// a, a + d, a + 2d, ... with a, d >= 1.
  static SubsetFamily arithmetic(long a, long d);
  /// 1, b, b^2, ... with b >= 2.
  static SubsetFamily index_geometric(long base);
  static SubsetFamily primes();
  static SubsetFamily custom(std::string name, Generator generator,
                             std::optional<ConvergenceCertificate> certificate = std::nullopt);
  /// Perfect squares, registered without a certificate.
  static SubsetFamily squares();
  /// "finite:1,2,3", "ap:a,d", "geo:b", "primes", "squares".
  static SubsetFamily parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::string describe() const;
  /// The first m elements (fewer if the family is finite).
  std::vector<Integer> first(std::size_t m) const;

  const std::vector<long>& finite_elements() const { return finite_; }
  long ap_start() const { return a_; }
  long ap_step() const { return d_; }
  long base() const { return a_; }
  const std::optional<ConvergenceCertificate>& certificate() const { return certificate_; }

 private:
  SubsetFamily(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::vector<long> finite_;
  long a_ = 0;
  long d_ = 0;
  Generator generator_;
  std::optional<ConvergenceCertificate> certificate_;
};

struct Verdict {
  enum class Kind { Convergent, Divergent, Unknown };
  Kind kind = Kind::Unknown;
  /// Exact limit, when it has the form coeff * i / pi.
  std::optional<PiMonomial> exact;
  /// Numeric limit (accelerated where applicable).
  std::optional<Complex> value;
  std::string certificate;
};

const char* to_string(Verdict::Kind kind);

/// Decided by family rules, never by partial sums alone.
Verdict classify_convergence(const SubsetFamily& family);

struct PartialSum {
  std::size_t terms = 0;
  Complex value;
};

struct EtaReport {
  Verdict verdict;
  std::vector<PartialSum> partial_sums;
  /// Quadrature error estimates in audit mode, zeros on the closed-form path.
  std::vector<long double> per_term_errors;
  std::size_t terms_used = 0;
  bool audit = false;
  /// Exact partial sum over all terms used (finite families only).
  std::optional<PiMonomial> exact_sum;
};

/// Partial sums of eta_term over the first max_terms elements of X, recorded
/// at 1, 2, 5, 10, 20, 50, ... terms and at the last term. Without audit the
/// closed form is used per term; with audit every term is integrated
/// numerically, spread across `jobs` threads.
EtaReport eta_partial(const SubsetFamily& family, std::size_t max_terms, const QuadratureConfig& cfg,
                      bool audit = false, unsigned jobs = 1);

/// Scaling by the A-hat genus of M for products M x S^1.
Complex product_with_ahat(const Complex& value, const Rational& ahat);
PiMonomial product_with_ahat(const PiMonomial& value, const Rational& ahat);
/// A nonzero multiplier keeps the verdict; zero makes everything 0.
Verdict product_with_ahat(const Verdict& verdict, const Rational& ahat);

}  // namespace rhocalc
