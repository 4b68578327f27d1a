#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rhocalc/characters.hpp"
#include "rhocalc/rational.hpp"

namespace rhocalc {

/// An injective homomorphism j: sub -> target between finite groups, given
/// as the image of every element of sub.
class SubgroupInclusion {
 public:
  /// Validates that the map is an injective homomorphism.
  SubgroupInclusion(GroupPtr sub, GroupPtr target, std::vector<int> image);

  /// Z/n -> target sending the generator 1 to `generator_image`; the image
  /// element must have order exactly n.
  static SubgroupInclusion from_cyclic_generator(GroupPtr sub, GroupPtr target, int generator_image);

  const GroupPtr& sub() const { return sub_; }
  const GroupPtr& target() const { return target_; }
  int operator()(int element) const { return image_[element]; }
  const std::vector<int>& image() const { return image_; }

  /// (this after inner): inner.sub() -> target().
  SubgroupInclusion after(const SubgroupInclusion& inner) const;

 private:
  GroupPtr sub_;
  GroupPtr target_;
  std::vector<int> image_;
};

/// Induction of delocalized rho data: the value on a target class <g> is the
/// sum of rho over the sub-classes contained in j^-1(<g>). Target classes
/// without preimage get 0; the identity slot is carried over unchanged.
RhoVector induce_rho(const SubgroupInclusion& j, const RhoVector& rho);

/// The L2 rho value expressed through delocalized data:
/// -sum over nontrivial elements h of rho_<h>.
Cyclotomic rho2_from_delocalized(const RhoVector& rho);

/// Z[1/N] for N the product of a finite set of primes.
class DenominatorRing {
 public:
  DenominatorRing() = default;
  explicit DenominatorRing(std::set<std::uint64_t> primes) : primes_(std::move(primes)) {}

  const std::set<std::uint64_t>& prime_support() const { return primes_; }

  /// Every prime of the reduced denominator lies in the support.
  bool contains(const Rational& q) const;

  /// Smallest ring containing both.
  DenominatorRing join(const DenominatorRing& other) const;

 private:
  std::set<std::uint64_t> primes_;
};

/// Element order; std::nullopt means infinite order, which contributes
/// nothing to the ring.
using ElementOrder = std::optional<std::uint64_t>;

/// Smallest subring of Q containing Z and 1/o for every finite order o.
/// invert_two adds 1/2 (the ring used for signature operators).
DenominatorRing ring_from_orders(const std::vector<ElementOrder>& orders, bool invert_two = false);

inline bool ring_contains(const DenominatorRing& ring, const Rational& q) { return ring.contains(q); }

}  // namespace rhocalc
