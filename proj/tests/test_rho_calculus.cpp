#include <gtest/gtest.h>

#include <random>

#include "rhocalc/error.hpp"
#include "rhocalc/lens.hpp"
#include "rhocalc/rho_calculus.hpp"

using namespace rhocalc;

namespace {

RhoVector rational_rho(const GroupPtr& g, const std::vector<Rational>& values) {
  std::vector<Cyclotomic> out;
  for (const auto& v : values) out.push_back(Cyclotomic(1, v));
  return RhoVector(g, out);
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_rational(num(rng), den(rng)));
  return out;
}

// Sum, for each target class, of the source class values whose image lies in it.
std::vector<Rational> induce_by_hand(const SubgroupInclusion& j, const std::vector<Rational>& source) {
  const auto& sub = *j.sub();
  const auto& target = *j.target();
  std::vector<Rational> out(target.class_count(), 0);
  for (int c = 0; c < sub.class_count(); ++c) out[target.class_of(j(sub.class_representative(c)))] += source[c];
  return out;
}

std::vector<Rational> rational_values(const ClassValues& v) {
  std::vector<Rational> out;
  for (const auto& c : v.values()) out.push_back(c.rational_value());
  return out;
}

}  // namespace

TEST(Induce, CyclicTwoIntoFour) {
  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
  const auto j = SubgroupInclusion::from_cyclic_generator(c2, c4, 2);
  const auto out = induce_rho(j, rational_rho(c2, {make_rational(3, 5), make_rational(-2, 7)}));
  EXPECT_EQ(rational_values(out),
            (std::vector<Rational>{make_rational(3, 5), 0, make_rational(-2, 7), 0}));
}

TEST(Induce, IdentityInclusion) {
  const auto c5 = FiniteGroup::cyclic(5);
  const auto rho = lens_delocalized_rho(LensSpace(5, {1, 2}));
  EXPECT_EQ(induce_rho(SubgroupInclusion::from_cyclic_generator(c5, c5, 1), rho).values(), rho.values());
}

TEST(Induce, CyclicThreeIntoS3) {
  const auto c3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
  const auto j = SubgroupInclusion::from_cyclic_generator(c3, s3, *s3->find_label("(123)"));
  const std::vector<Rational> rho = {make_rational(1, 2), make_rational(1, 3), make_rational(1, 5)};
  const auto out = induce_rho(j, rational_rho(c3, rho));
  EXPECT_EQ(out.at_element(*s3->find_label("(123)")).rational_value(), make_rational(8, 15));
  EXPECT_EQ(out.at_element(*s3->find_label("(12)")).rational_value(), 0);
  EXPECT_EQ(out.identity_value().rational_value(), make_rational(1, 2));
}

TEST(Induce, RejectsBadMaps) {
  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4), c3 = FiniteGroup::cyclic(3);
  EXPECT_THROW(SubgroupInclusion(c2, c4, {0, 1}), ValidationError);
  EXPECT_THROW(SubgroupInclusion(c4, c2, {0, 1, 0, 1}), ValidationError);
  EXPECT_THROW(SubgroupInclusion::from_cyclic_generator(c3, c4, 1), ValidationError);
  EXPECT_THROW(SubgroupInclusion::from_cyclic_generator(c4, c4, 2), ValidationError);
}

TEST(InduceProperty, FunctorialOnChains) {
  std::mt19937_64 rng(8);
  const std::vector<std::vector<int>> chains = {{2, 4, 8}, {3, 6, 12}, {2, 6, 12}, {3, 9, 27}, {5, 10, 20}};
  for (const auto& chain : chains) {
    const auto a = FiniteGroup::cyclic(chain[0]), b = FiniteGroup::cyclic(chain[1]), c = FiniteGroup::cyclic(chain[2]);
    const auto i = SubgroupInclusion::from_cyclic_generator(a, b, chain[1] / chain[0]);
    const auto j = SubgroupInclusion::from_cyclic_generator(b, c, chain[2] / chain[1]);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = rational_rho(a, random_values(rng, chain[0]));
      EXPECT_EQ(induce_rho(j, induce_rho(i, rho)).values(), induce_rho(j.after(i), rho).values());
    }
  }
}

TEST(InduceProperty, LinearAndMatchesDirectSum) {
  std::mt19937_64 rng(9);
  const auto s3 = FiniteGroup::symmetric(3), s4 = FiniteGroup::symmetric(4);
  std::vector<SubgroupInclusion> maps = {
      SubgroupInclusion::from_cyclic_generator(FiniteGroup::cyclic(3), s3, *s3->find_label("(132)")),
      SubgroupInclusion::from_cyclic_generator(FiniteGroup::cyclic(2), s3, *s3->find_label("(13)")),
      SubgroupInclusion::from_cyclic_generator(FiniteGroup::cyclic(4), s4, *s4->find_label("(1234)")),
      SubgroupInclusion::from_cyclic_generator(FiniteGroup::cyclic(6), FiniteGroup::cyclic(12), 2),
  };
  for (const auto& j : maps) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_values(rng, j.sub()->class_count()), y = random_values(rng, j.sub()->class_count());
      const Cyclotomic s(1, make_rational(-7, 3));
      const auto rx = rational_rho(j.sub(), x), ry = rational_rho(j.sub(), y);
      EXPECT_EQ(induce_rho(j, rx + s * ry).values(), (induce_rho(j, rx) + s * induce_rho(j, ry)).values());
      const auto out = induce_rho(j, rx);
      EXPECT_EQ(rational_values(out), induce_by_hand(j, x));
      Rational source_sum = 0, target_sum = 0;
      for (const auto& v : x) source_sum += v;
      for (const auto& v : rational_values(out)) target_sum += v;
      EXPECT_EQ(source_sum, target_sum);
      EXPECT_EQ(out.identity_value(), rx.identity_value());
    }
  }
}

TEST(Rho2, Examples) {
  const auto c4 = FiniteGroup::cyclic(4);
  EXPECT_TRUE(rho2_from_delocalized(rational_rho(c4, {5, 0, 0, 0})).is_zero());
  const auto c3 = FiniteGroup::cyclic(3);
  EXPECT_EQ(rho2_from_delocalized(rational_rho(c3, {0, make_rational(-1, 9), make_rational(-1, 9)})),
            Cyclotomic(1, make_rational(2, 9)));
  EXPECT_EQ(rho2_from_delocalized(lens_delocalized_rho(LensSpace(3, {1, 1}))), Cyclotomic(1, make_rational(2, 9)));
}

TEST(Rho2Property, MatchesFourierOfL2Twist) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> order(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = order(rng);
    const auto g = FiniteGroup::cyclic(n);
    const auto rho = rational_rho(g, random_values(rng, n));
    EXPECT_EQ(rho2_from_delocalized(rho), fourier_eta(l2_twist(g), rho));
  }
}

TEST(Rings, Examples) {
  EXPECT_EQ(ring_from_orders({3u, 5u}).prime_support(), (std::set<std::uint64_t>{3, 5}));
  EXPECT_TRUE(ring_from_orders({std::nullopt}).prime_support().empty());
  EXPECT_EQ(ring_from_orders({2u, 3u}, true).prime_support(), (std::set<std::uint64_t>{2, 3}));
  EXPECT_EQ(ring_from_orders({9u}, true).prime_support(), (std::set<std::uint64_t>{2, 3}));
  const auto r = ring_from_orders({3u, 5u});
  EXPECT_TRUE(ring_contains(r, make_rational(7, 15)));
  EXPECT_FALSE(ring_contains(r, make_rational(1, 2)));
  EXPECT_TRUE(ring_contains(ring_from_orders({std::nullopt}), Rational(-12)));
  EXPECT_TRUE(ring_contains(r, make_rational(2, 45)));
}

TEST(RingsProperty, ClosedUnderRingOperations) {
  std::mt19937_64 rng(11);
  const auto ring = ring_from_orders({6u, 35u});
  const std::vector<long> denominators = {1, 2, 3, 5, 7, 4, 9, 25, 42, 210, 1050};
  std::uniform_int_distribution<std::size_t> pick(0, denominators.size() - 1);
  std::uniform_int_distribution<long> num(-1000, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = make_rational(num(rng), denominators[pick(rng)]);
    const auto b = make_rational(num(rng), denominators[pick(rng)]);
    ASSERT_TRUE(ring_contains(ring, a) && ring_contains(ring, b));
    EXPECT_TRUE(ring_contains(ring, a + b));
    EXPECT_TRUE(ring_contains(ring, a * b));
    EXPECT_TRUE(ring_contains(ring, a - b));
  }
}
