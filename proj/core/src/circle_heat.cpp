#include "rhocalc/circle_heat.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "rhocalc/quadrature.hpp"

namespace rhocalc {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
const long double kSqrtPi = std::sqrt(kPi);

std::vector<long> parse_long_list(std::string_view text) {
  std::vector<long> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("expected an integer, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw ValidationError("quadrature tolerances must be positive");
  if (!(t_split > 0)) throw ValidationError("t_split must be positive");
  if (max_subdivisions < 1) throw ValidationError("max_subdivisions must be positive");
  if (precision_bits < 53 || precision_bits > 64) {
    throw ValidationError("precision_bits must lie in [53, 64] (extended-precision quadrature)");
  }
}

Complex PiMonomial::to_complex() const {
  const long double magnitude = coeff.get_d() * std::pow(kPi, static_cast<long double>(pi_power));
  switch (((i_power % 4) + 4) % 4) {
    case 0: return {magnitude, 0};
    case 1: return {0, magnitude};
    case 2: return {-magnitude, 0};
    default: return {0, -magnitude};
  }
}

std::string PiMonomial::to_string() const {
  std::string out = rhocalc::to_string(coeff);
  const int ip = ((i_power % 4) + 4) % 4;
  if (ip == 1) out += "*I";
  if (ip == 2) out = rhocalc::to_string(Rational(-coeff));
  if (ip == 3) out += "*(-I)";
  if (pi_power == -1) out += "/pi";
  else if (pi_power < -1) out += "/pi^" + std::to_string(-pi_power);
  else if (pi_power == 1) out += "*pi";
  else if (pi_power > 1) out += "*pi^" + std::to_string(pi_power);
  return out;
}

Complex kernel_value(long double x, long double y, long double t) {
  if (!(t > 0)) throw ValidationError("kernel_value: t must be positive");
  const long double d = x - y;
  const long double magnitude = d / (2 * t * std::sqrt(4 * kPi * t)) * std::exp(-d * d / (4 * t));
  return {0, magnitude};
}

namespace {

using quadrature::Result;

void require_converged(const Result<Complex>& r, const char* stage, long n) {
  if (!r.converged) {
    throw QuadratureError(std::string("eta_term(") + std::to_string(n) + "): " + stage +
                              " quadrature did not converge within max_subdivisions",
                          r.value, r.error);
  }
}

// Integral over t in (0, inf) of h(t) via s = n^2 / (4t); the panel
// boundary s0 corresponds to t = t_split.
template <typename H>
Result<Complex> integrate_time(H&& h, long double n, const QuadratureConfig& cfg, long double abs_tol,
                               long double rel_tol, long nn) {
  const long double scale = n * n / 4;
  auto in_s = [&](long double s) -> Complex {
    if (s <= 0) return {0, 0};
    const long double t = scale / s;
    return h(t) * (scale / (s * s));
  };
  const long double s0 = scale / cfg.t_split;
  auto near = quadrature::integrate<Complex>(in_s, 0, s0, abs_tol / 2, rel_tol, cfg.max_subdivisions);
  require_converged(near, "large-t", nn);
  auto far = quadrature::integrate_to_infinity<Complex>(in_s, s0, abs_tol / 2, rel_tol, cfg.max_subdivisions);
  require_converged(far, "small-t", nn);
  Result<Complex> out;
  out.value = near.value + far.value;
  out.error = near.error + far.error;
  out.evaluations = near.evaluations + far.evaluations;
  out.intervals = near.intervals + far.intervals;
  out.converged = true;
  return out;
}

}  // namespace

EtaTerm eta_term(long n, const QuadratureConfig& cfg, IntegrationOrder order) {
  cfg.validate();
  if (n == 0) throw ValidationError("eta_term: the deck element must be nonzero");
  const long double shift = static_cast<long double>(n);
  const long double magnitude = std::fabs(shift);
  // Inner integrals run tighter so their error stays below the outer one.
  const long double inner_rel = cfg.rel_tol * 1e-2L;
  const long double inner_abs = cfg.abs_tol * 1e-2L;
  long evaluations = 0;
  long double inner_error = 0;

  Result<Complex> outer;
  if (order == IntegrationOrder::TimeOuter) {
    auto time_integrand = [&](long double t) -> Complex {
      auto space = quadrature::integrate<Complex>(
          [&](long double x) { return kernel_value(x + shift, x, t); }, 0, 1, inner_abs, inner_rel,
          cfg.max_subdivisions);
      require_converged(space, "space", n);
      evaluations += space.evaluations;
      inner_error = std::max(inner_error, space.error / std::max(std::abs(space.value), 1e-300L));
      return space.value / (kSqrtPi * std::sqrt(t));
    };
    outer = integrate_time(time_integrand, magnitude, cfg, cfg.abs_tol, cfg.rel_tol, n);
  } else {
    auto space_integrand = [&](long double x) -> Complex {
      auto time = integrate_time(
          [&](long double t) { return kernel_value(x + shift, x, t) / (kSqrtPi * std::sqrt(t)); }, magnitude, cfg,
          inner_abs, inner_rel, n);
      evaluations += time.evaluations;
      inner_error = std::max(inner_error, time.error / std::max(std::abs(time.value), 1e-300L));
      return time.value;
    };
    outer = quadrature::integrate<Complex>(space_integrand, 0, 1, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
    require_converged(outer, "space", n);
  }
  EtaTerm term;
  term.value = outer.value;
  term.error_estimate = outer.error + inner_error * std::abs(outer.value);
  term.evaluations = evaluations + outer.evaluations;
  return term;
}

PiMonomial eta_term_exact(long n) {
  if (n == 0) throw ValidationError("eta_term: the deck element must be nonzero");
  return PiMonomial{make_rational(1, n), -1, 1};
}

SubsetFamily SubsetFamily::finite(std::vector<long> elements) {
  for (long e : elements) {
    if (e < 1) throw ValidationError("subset elements must be >= 1, got " + std::to_string(e));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SubsetFamily f(Kind::Finite, "finite");
  f.finite_ = std::move(elements);
  return f;
}

SubsetFamily SubsetFamily::arithmetic(long a, long d) {
  if (a < 1 || d < 1) throw ValidationError("arithmetic progression needs a >= 1 and d >= 1");
  SubsetFamily f(Kind::ArithmeticProgression, "ap");
  f.a_ = a;
  f.d_ = d;
  return f;
}

SubsetFamily SubsetFamily::index_geometric(long base) {
  if (base < 2) throw ValidationError("geometric family needs base >= 2");
  SubsetFamily f(Kind::IndexGeometric, "geo");
  f.a_ = base;
  return f;
}

SubsetFamily SubsetFamily::primes() { return SubsetFamily(Kind::Primes, "primes"); }

SubsetFamily SubsetFamily::custom(std::string name, Generator generator,
                                  std::optional<ConvergenceCertificate> certificate) {
  SubsetFamily f(Kind::Custom, std::move(name));
  f.generator_ = std::move(generator);
  f.certificate_ = std::move(certificate);
  return f;
}

SubsetFamily SubsetFamily::squares() {
  return custom("squares", [](std::size_t i) -> std::optional<Integer> {
    const Integer k(static_cast<unsigned long>(i + 1));
    return Integer(k * k);
  });
}

SubsetFamily SubsetFamily::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "primes") return primes();
  if (kind == "squares") return squares();
  if (kind == "finite") return finite(args.empty() ? std::vector<long>{} : parse_long_list(args));
  if (kind == "ap") {
    const auto v = parse_long_list(args);
    if (v.size() != 2) throw ValidationError("ap subset needs 'ap:a,d'");
    return arithmetic(v[0], v[1]);
  }
  if (kind == "geo") {
    const auto v = parse_long_list(args);
    if (v.size() != 1) throw ValidationError("geometric subset needs 'geo:b'");
    return index_geometric(v[0]);
  }
  throw ValidationError("unknown subset family '" + std::string(text) + "'");
}

std::string SubsetFamily::describe() const {
  switch (kind_) {
    case Kind::Finite: {
      std::string out = "finite:";
      for (std::size_t i = 0; i < finite_.size(); ++i) out += (i ? "," : "") + std::to_string(finite_[i]);
      return out;
    }
    case Kind::ArithmeticProgression: return "ap:" + std::to_string(a_) + "," + std::to_string(d_);
    case Kind::IndexGeometric: return "geo:" + std::to_string(a_);
    case Kind::Primes: return "primes";
    case Kind::Custom: return name_;
  }
  return name_;
}

std::vector<Integer> SubsetFamily::first(std::size_t m) const {
  std::vector<Integer> out;
  out.reserve(std::min<std::size_t>(m, 1 << 20));
  switch (kind_) {
    case Kind::Finite:
      for (std::size_t i = 0; i < std::min(m, finite_.size()); ++i) out.emplace_back(finite_[i]);
      break;
    case Kind::ArithmeticProgression:
      for (std::size_t i = 0; i < m; ++i) out.push_back(Integer(a_) + Integer(d_) * static_cast<unsigned long>(i));
      break;
    case Kind::IndexGeometric: {
      Integer x = 1;
      for (std::size_t i = 0; i < m; ++i, x *= a_) out.push_back(x);
      break;
    }
    case Kind::Primes:
      for (std::size_t i = 0; i < m; ++i) out.emplace_back(static_cast<unsigned long>(nth_prime(i)));
      break;
    case Kind::Custom:
      for (std::size_t i = 0; i < m; ++i) {
        auto x = generator_(i);
        if (!x) break;
        out.push_back(std::move(*x));
      }
      break;
  }
  return out;
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Convergent: return "Convergent";
    case Verdict::Kind::Divergent: return "Divergent";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// Aitken's delta-squared on the last three of the first `terms` partial
// sums of a geometric family.
Complex aitken_limit(const SubsetFamily& family, std::size_t terms) {
  const auto elements = family.first(terms);
  std::vector<long double> sums;
  long double s = 0;
  for (const auto& n : elements) {
    s += 1.0L / n.get_d();
    sums.push_back(s);
  }
  const std::size_t k = sums.size();
  const long double s0 = sums[k - 3], s1 = sums[k - 2], s2 = sums[k - 1];
  const long double denom = s2 - 2 * s1 + s0;
  const long double limit = denom == 0 ? s2 : s2 - (s2 - s1) * (s2 - s1) / denom;
  return {0, limit / kPi};
}

}  // namespace

Verdict classify_convergence(const SubsetFamily& family) {
  Verdict v;
  switch (family.kind()) {
    case SubsetFamily::Kind::Finite: {
      Rational sum = 0;
      for (long n : family.finite_elements()) sum += make_rational(1, n);
      v.kind = Verdict::Kind::Convergent;
      v.exact = PiMonomial{sum, -1, 1};
      v.value = v.exact->to_complex();
      v.certificate = "finite sum of " + std::to_string(family.finite_elements().size()) + " closed-form terms i/(pi n)";
      break;
    }
    case SubsetFamily::Kind::ArithmeticProgression: {
      const long a = family.ap_start(), d = family.ap_step();
      v.kind = Verdict::Kind::Divergent;
      v.certificate = "harmonic comparison: 1/(" + std::to_string(a) + " + " + std::to_string(d) + "k) >= 1/(" +
                      std::to_string(a + d) + "(k+1)) for k >= 0, and sum 1/(k+1) diverges";
      break;
    }
    case SubsetFamily::Kind::IndexGeometric: {
      const long b = family.base();
      v.kind = Verdict::Kind::Convergent;
      v.exact = PiMonomial{make_rational(b, b - 1), -1, 1};
      v.value = aitken_limit(family, 24);
      v.certificate = "ratio test: consecutive terms have ratio 1/" + std::to_string(b) +
                      " < 1; geometric sum equals " + rhocalc::to_string(v.exact->coeff);
      break;
    }
    case SubsetFamily::Kind::Primes:
      v.kind = Verdict::Kind::Divergent;
      v.certificate = "sum over primes of 1/p diverges (Euler; partial sums exceed ln ln N - 1)";
      break;
    case SubsetFamily::Kind::Custom:
      if (const auto& cert = family.certificate()) {
        v.kind = cert->convergent ? Verdict::Kind::Convergent : Verdict::Kind::Divergent;
        v.value = cert->value;
        v.certificate = cert->text;
      } else {
        v.kind = Verdict::Kind::Unknown;
        v.certificate = "no certificate attached to '" + family.describe() + "'; partial sums only";
      }
      break;
  }
  return v;
}

EtaReport eta_partial(const SubsetFamily& family, std::size_t max_terms, const QuadratureConfig& cfg, bool audit,
                      unsigned jobs) {
  if (max_terms < 1) throw ValidationError("eta_partial: max_terms must be >= 1");
  cfg.validate();
  EtaReport report;
  report.verdict = classify_convergence(family);
  report.audit = audit;
  const auto elements = family.first(max_terms);
  report.terms_used = elements.size();

  std::vector<Complex> terms(elements.size());
  report.per_term_errors.assign(elements.size(), 0.0L);
  if (audit) {
    for (const auto& n : elements) {
      if (!n.fits_slong_p()) throw ValidationError("audit mode: element " + n.get_str() + " too large for quadrature");
    }
    jobs = std::max(1u, jobs);
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < elements.size(); i += jobs) {
          const auto term = eta_term(elements[i].get_si(), cfg);
          terms[i] = term.value;
          report.per_term_errors[i] = term.error_estimate;
        }
      }));
    }
    for (auto& w : workers) w.get();
  } else {
    for (std::size_t i = 0; i < elements.size(); ++i) terms[i] = {0, 1.0L / (kPi * elements[i].get_d())};
  }

  Complex sum{0, 0};
  Complex compensation{0, 0};
  std::size_t next_checkpoint = 1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    // Kahan summation keeps 10^4-term sums at full precision.
    const Complex y = terms[i] - compensation;
    const Complex t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    const std::size_t used = i + 1;
    if (used == next_checkpoint || used == terms.size()) report.partial_sums.push_back({used, sum});
    if (used == next_checkpoint) {
      // 1, 2, 5, 10, 20, 50, ...
      std::size_t mantissa = next_checkpoint;
      while (mantissa >= 10) mantissa /= 10;
      next_checkpoint = mantissa == 2 ? next_checkpoint / 2 * 5 : next_checkpoint * 2;
    }
  }
  if (family.kind() == SubsetFamily::Kind::Finite) {
    Rational exact = 0;
    for (const auto& n : elements) exact += Rational(1, n);
    exact.canonicalize();
    report.exact_sum = PiMonomial{exact, -1, 1};
  }
  return report;
}

Complex product_with_ahat(const Complex& value, const Rational& ahat) {
  return value * static_cast<long double>(ahat.get_d());
}

PiMonomial product_with_ahat(const PiMonomial& value, const Rational& ahat) {
  return PiMonomial{value.coeff * ahat, value.pi_power, value.i_power};
}

Verdict product_with_ahat(const Verdict& verdict, const Rational& ahat) {
  Verdict out = verdict;
  if (ahat == 0) {
    out.kind = Verdict::Kind::Convergent;
    out.exact = PiMonomial{Rational(0), -1, 1};
    out.value = Complex{0, 0};
    out.certificate = "A-hat multiplier is 0, so every term vanishes";
    return out;
  }
  if (out.exact) out.exact = product_with_ahat(*out.exact, ahat);
  if (out.value) out.value = product_with_ahat(*out.value, ahat);
  if (out.kind == Verdict::Kind::Divergent) out.certificate += "; scaled by nonzero A-hat " + to_string(ahat);
  return out;
}

}  // namespace rhocalc
