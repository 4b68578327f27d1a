#include "rhocalc/rho_calculus.hpp"

#include "rhocalc/error.hpp"

namespace rhocalc {

SubgroupInclusion::SubgroupInclusion(GroupPtr sub, GroupPtr target, std::vector<int> image)
    : sub_(std::move(sub)), target_(std::move(target)), image_(std::move(image)) {
  if (!sub_ || !target_) throw ValidationError("inclusion: null group");
  const int n = sub_->order();
  if (static_cast<int>(image_.size()) != n) throw ValidationError("inclusion: image size != |sub|");
  std::vector<bool> hit(target_->order(), false);
  for (int x : image_) {
    if (x < 0 || x >= target_->order()) throw ValidationError("inclusion: image out of range");
    if (hit[x]) throw ValidationError("inclusion: map is not injective");
    hit[x] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (image_[sub_->multiply(a, b)] != target_->multiply(image_[a], image_[b])) {
        throw ValidationError("inclusion: map is not a homomorphism at (" + sub_->label(a) + ", " +
                              sub_->label(b) + ")");
      }
    }
  }
}

SubgroupInclusion SubgroupInclusion::from_cyclic_generator(GroupPtr sub, GroupPtr target, int generator_image) {
  if (!sub->is_cyclic()) throw ValidationError("inclusion: source is not cyclic");
  if (generator_image < 0 || generator_image >= target->order()) {
    throw ValidationError("inclusion: generator image out of range");
  }
  if (target->element_order(generator_image) != sub->order()) {
    throw ValidationError("inclusion: generator image has order " +
                          std::to_string(target->element_order(generator_image)) + ", expected " +
                          std::to_string(sub->order()));
  }
  std::vector<int> image(sub->order());
  for (int k = 0; k < sub->order(); ++k) image[k] = target->power(generator_image, k);
  return SubgroupInclusion(std::move(sub), std::move(target), std::move(image));
}

SubgroupInclusion SubgroupInclusion::after(const SubgroupInclusion& inner) const {
  if (!same_group(inner.target(), sub_)) throw ValidationError("inclusion composition: groups do not match");
  std::vector<int> image(inner.sub()->order());
  for (int a = 0; a < inner.sub()->order(); ++a) image[a] = image_[inner(a)];
  return SubgroupInclusion(inner.sub(), target_, std::move(image));
}

RhoVector induce_rho(const SubgroupInclusion& j, const RhoVector& rho) {
  if (!same_group(rho.group(), j.sub())) throw ValidationError("induce_rho: rho is not over the source group");
  const auto& sub = *j.sub();
  const auto& target = *j.target();
  const int order = rho.field_order();
  std::vector<Cyclotomic> out(target.class_count(), Cyclotomic::zero(order));
  // j maps each sub-class into a single target class.
  for (int c = 0; c < sub.class_count(); ++c) {
    out[target.class_of(j(sub.class_representative(c)))] += rho[c];
  }
  return RhoVector(j.target(), std::move(out));
}

Cyclotomic rho2_from_delocalized(const RhoVector& rho) {
  const auto& g = *rho.group();
  Cyclotomic sum = Cyclotomic::zero(rho.field_order());
  for (int c = 0; c < g.class_count(); ++c) {
    if (c == g.identity_class()) continue;
    sum += Rational(g.class_size(c)) * rho[c];
  }
  return -sum;
}

bool DenominatorRing::contains(const Rational& q) const {
  Integer den = q.get_den();
  for (auto p : primes_) {
    const Integer prime(static_cast<unsigned long>(p));
    while (den % prime == 0) den /= prime;
  }
  return den == 1;
}

DenominatorRing DenominatorRing::join(const DenominatorRing& other) const {
  auto primes = primes_;
  primes.insert(other.primes_.begin(), other.primes_.end());
  return DenominatorRing(std::move(primes));
}

DenominatorRing ring_from_orders(const std::vector<ElementOrder>& orders, bool invert_two) {
  std::set<std::uint64_t> primes;
  for (const auto& o : orders) {
    if (!o) continue;
    if (*o == 0) throw ValidationError("element order must be positive");
    for (auto p : prime_divisors(*o)) primes.insert(p);
  }
  if (invert_two) primes.insert(2);
  return DenominatorRing(std::move(primes));
}

}  // namespace rhocalc
