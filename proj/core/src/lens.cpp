#include "rhocalc/lens.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <numeric>

#include "rhocalc/error.hpp"

namespace rhocalc {

LensSpace::LensSpace(int n, std::vector<int> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 3 || n % 2 == 0) throw ValidationError("lens space: n must be odd and >= 3, got " + std::to_string(n));
  if (weights_.empty()) throw ValidationError("lens space: at least one weight required");
  for (auto& a : weights_) {
    a = ((a % n) + n) % n;
    if (std::gcd(a, n) != 1) {
      throw ValidationError("lens space: weight " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
    }
  }
}

std::string LensSpace::describe() const {
  std::string out = "L(" + std::to_string(n_) + ";";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights_[i]);
  }
  return out + ")";
}

namespace {

// 1 / (w^e - w^-e) for e = 0..n-1 (entry 0 unused), w = zeta^((n+1)/2).
const std::vector<Cyclotomic>& defect_factors(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Cyclotomic>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const long half = (n + 1) / 2;
  std::vector<Cyclotomic> factors(n, Cyclotomic::zero(n));
  for (long e = 1; e < n; ++e) {
    const Cyclotomic diff = Cyclotomic::root_of_unity(n, half * e) - Cyclotomic::root_of_unity(n, -half * e);
    factors[e] = diff.inverse();
  }
  return cache.emplace(n, std::move(factors)).first->second;
}

}  // namespace

RhoVector lens_delocalized_rho(const LensSpace& lens, const Rational& defect_scale) {
  const int n = lens.n();
  const auto& factors = defect_factors(n);
  const Rational prefactor = defect_scale / n;
  std::vector<Cyclotomic> values(n, Cyclotomic::zero(n));
  for (long j = 1; j < n; ++j) {
    Cyclotomic product = Cyclotomic::one(n);
    for (int a : lens.weights()) product *= factors[(j * a) % n];
    values[j] = prefactor * product;
  }
  return RhoVector(FiniteGroup::cyclic(n), std::move(values));
}

Cyclotomic lens_twisted_rho(const LensSpace& lens, const VirtualRep& phi, const Rational& defect_scale) {
  if (!phi.group()->is_cyclic() || phi.group()->order() != lens.n()) {
    throw ValidationError("lens_twisted_rho: representation is not over Z/" + std::to_string(lens.n()));
  }
  return fourier_eta(phi, lens_delocalized_rho(lens, defect_scale));
}

std::vector<LensSpace> canonical_lens_family(int n, int k) {
  if (k < 1) throw ValidationError("lens family: k must be positive");
  std::vector<int> units;
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) units.push_back(a);
  }
  std::vector<LensSpace> family;
  // Non-decreasing tuples over the units, as index vectors into `units`.
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<int> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = units[idx[i]];
    bool canonical = true;
    for (int u : units) {
      std::vector<int> image(k);
      for (int i = 0; i < k; ++i) image[i] = static_cast<int>((static_cast<long>(u) * tuple[i]) % n);
      std::sort(image.begin(), image.end());
      if (image < tuple) {
        canonical = false;
        break;
      }
    }
    if (canonical) family.emplace_back(n, tuple);

    int pos = k - 1;
    while (pos >= 0 && idx[pos] + 1 == units.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[pos];
  }
  return family;
}

namespace {

void require_pairing_input(int n, Parity parity, const ClassFunction& f) {
  if (!f.group()->is_cyclic() || f.group()->order() != n) {
    throw ValidationError("class function is not over Z/" + std::to_string(n));
  }
  if (!f.in_class_space(parity)) {
    throw ValidationError(std::string("class function is not in Class^") + (parity == Parity::Plus ? "+" : "-") +
                          "_0(Z/" + std::to_string(n) + ")");
  }
}

}  // namespace

SearchOutcome search_nonvanishing(int n, Parity parity, const ClassFunction& f, const std::vector<int>& k_values,
                                  std::size_t weight_budget, unsigned jobs) {
  require_pairing_input(n, parity, f);
  bool is_zero = true;
  for (const auto& v : f.values()) is_zero = is_zero && v.is_zero();
  if (is_zero) throw ValidationError("search_nonvanishing: f must be nonzero");

  std::vector<LensSpace> candidates;
  bool any_k = false;
  for (int k : k_values) {
    if (k < 1 || (k % 2 == 0) != (parity == Parity::Plus)) continue;
    any_k = true;
    for (auto& lens : canonical_lens_family(n, k)) {
      if (candidates.size() == weight_budget) break;
      candidates.push_back(std::move(lens));
    }
  }
  if (!any_k) {
    throw ValidationError(std::string("search_nonvanishing: no k in range matches parity ") + to_string(parity) +
                          " (plus needs k even, minus needs k odd)");
  }

  jobs = std::max(1u, jobs);
  const std::size_t block = std::max<std::size_t>(jobs, 1) * 4;
  SearchOutcome outcome;
  for (std::size_t start = 0; start < candidates.size(); start += block) {
    const std::size_t stop = std::min(candidates.size(), start + block);
    std::vector<std::future<Cyclotomic>> pending;
    std::vector<Cyclotomic> values;
    if (jobs == 1) {
      for (std::size_t i = start; i < stop; ++i) values.push_back(pair_phi(f, lens_delocalized_rho(candidates[i])));
    } else {
      for (std::size_t i = start; i < stop; ++i) {
        pending.push_back(std::async(std::launch::async, [&f, &lens = candidates[i]] {
          return pair_phi(f, lens_delocalized_rho(lens));
        }));
      }
      for (auto& p : pending) values.push_back(p.get());
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i].is_zero()) {
        outcome.candidates_tried = start + i + 1;
        outcome.witness = NonvanishingWitness{candidates[start + i], values[i]};
        return outcome;
      }
    }
  }
  outcome.candidates_tried = candidates.size();
  return outcome;
}

CyclotomicMatrix lens_pairing_matrix(int n, Parity parity, const std::vector<LensSpace>& family) {
  const auto basis = class_space_basis(FiniteGroup::cyclic(n), parity);
  CyclotomicMatrix matrix;
  for (const auto& lens : family) {
    if (lens.n() != n) throw ValidationError("lens family: mixed n");
    const auto rho = lens_delocalized_rho(lens);
    std::vector<Cyclotomic> row;
    for (const auto& f : basis) row.push_back(pair_phi(f, rho));
    matrix.push_back(std::move(row));
  }
  return matrix;
}

int span_rank(int n, Parity parity, int k, const std::vector<LensSpace>& family) {
  if ((k % 2 == 0) != (parity == Parity::Plus)) {
    throw ValidationError("span_rank: k=" + std::to_string(k) + " incompatible with parity " + to_string(parity));
  }
  for (const auto& lens : family) {
    if (lens.k() != k) throw ValidationError("span_rank: family member " + lens.describe() + " does not have k weights");
  }
  if (family.empty()) return 0;
  return exact_rank(lens_pairing_matrix(n, parity, family));
}

}  // namespace rhocalc
