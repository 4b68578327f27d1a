#include <gtest/gtest.h>

#include <random>

#include "rhocalc/characters.hpp"
#include "rhocalc/error.hpp"
#include "rhocalc/exact_linalg.hpp"

using namespace rhocalc;

namespace {

Cyclotomic q(long num, long den = 1) { return Cyclotomic(1, make_rational(num, den)); }

ClassFunction rational_function(const GroupPtr& g, const std::vector<long>& values) {
  std::vector<Cyclotomic> out;
  for (long v : values) out.push_back(q(v));
  return ClassFunction(g, out);
}

RhoVector rational_rho(const GroupPtr& g, const std::vector<Rational>& values) {
  std::vector<Cyclotomic> out;
  for (const auto& v : values) out.push_back(Cyclotomic(1, v));
  return RhoVector(g, out);
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(make_rational(num(rng), den(rng)));
  return out;
}

// -triv + (1/n) regular on Z/n.
VirtualRep l2_twist_by_hand(const GroupPtr& g) {
  const int n = g->order();
  return Cyclotomic(1, make_rational(1, n)) * VirtualRep::regular(g) - VirtualRep::trivial(g);
}

Cyclotomic add(Cyclotomic a, Cyclotomic b) {
  lift_common(a, b);
  return a + b;
}

Cyclotomic mul(Cyclotomic a, Cyclotomic b) {
  lift_common(a, b);
  return a * b;
}

}  // namespace

TEST(FiniteGroup, CyclicStructure) {
  const auto g = FiniteGroup::cyclic(6);
  EXPECT_EQ(g->order(), 6);
  EXPECT_EQ(g->class_count(), 6);
  EXPECT_EQ(g->element_order(4), 3);
  EXPECT_EQ(g->inverse(2), 4);
  EXPECT_EQ(g->label(5), "5");
  EXPECT_EQ(g->describe(), "cyclic:6");
}

TEST(FiniteGroup, SymmetricClasses) {
  const auto s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(s3->order(), 6);
  EXPECT_EQ(s3->class_count(), 3);
  EXPECT_EQ(s3->class_size(s3->class_of(*s3->find_label("(12)"))), 3);
  EXPECT_EQ(s3->class_size(s3->class_of(*s3->find_label("(123)"))), 2);
  EXPECT_EQ(s3->class_of(*s3->find_label("(123)")), s3->class_of(*s3->find_label("(132)")));
  EXPECT_EQ(s3->class_members(s3->identity_class()).size(), 1u);
  EXPECT_EQ(FiniteGroup::symmetric(4)->class_count(), 5);
}

TEST(FiniteGroup, TableValidation) {
  EXPECT_NO_THROW(FiniteGroup::from_json(R"({"elements":["e","a"],"table":[[0,1],[1,0]]})"));
  EXPECT_THROW(FiniteGroup::from_json(R"({"elements":["e","a"],"table":[[0,1],[1,1]]})"), ValidationError);
  EXPECT_THROW(FiniteGroup::from_json(R"({"elements":["e","a"],"table":[[0,1]]})"), ValidationError);
  EXPECT_THROW(FiniteGroup::parse("dihedral:4"), ValidationError);
  EXPECT_THROW(FiniteGroup::cyclic(0), ValidationError);
}

TEST(TauOrbits, Examples) {
  EXPECT_EQ(tau_orbits(*FiniteGroup::cyclic(4)), (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));
  EXPECT_EQ(tau_orbits(*FiniteGroup::cyclic(2)), (std::vector<std::vector<int>>{{0}, {1}}));
  const auto s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(tau_orbits(*s3).size(), 3u);
  for (const auto& orbit : tau_orbits(*s3)) EXPECT_EQ(orbit.size(), 1u);
}

TEST(ClassSpaces, BasesAndRanks) {
  const auto c5 = FiniteGroup::cyclic(5);
  const auto plus = class_space_basis(c5, Parity::Plus);
  ASSERT_EQ(plus.size(), 2u);
  EXPECT_EQ(plus[0].values(), rational_function(c5, {0, 1, 0, 0, 1}).values());
  EXPECT_EQ(plus[1].values(), rational_function(c5, {0, 0, 1, 1, 0}).values());
  EXPECT_EQ(class_space_basis(c5, Parity::Minus).size(), 2u);
  EXPECT_TRUE(class_space_basis(FiniteGroup::cyclic(2), Parity::Minus).empty());

  EXPECT_EQ(rank_plus(*c5), 2);
  EXPECT_EQ(rank_minus(*c5), 2);
  EXPECT_EQ(rank_plus(*FiniteGroup::cyclic(2)), 1);
  EXPECT_EQ(rank_minus(*FiniteGroup::cyclic(2)), 0);
  EXPECT_EQ(rank_plus(*FiniteGroup::symmetric(3)), 2);
  EXPECT_EQ(rank_minus(*FiniteGroup::symmetric(3)), 0);
  EXPECT_EQ(rank_plus(*c5, true), 3);
}

TEST(ClassSpaces, MembershipTests) {
  const auto c5 = FiniteGroup::cyclic(5);
  for (const auto& f : class_space_basis(c5, Parity::Plus)) {
    EXPECT_TRUE(f.in_class_space(Parity::Plus));
    EXPECT_FALSE(f.in_class_space(Parity::Minus));
  }
  EXPECT_FALSE(rational_function(c5, {1, 0, 0, 0, 0}).in_class_space(Parity::Plus));
}

TEST(VirtualReps, R0Membership) {
  for (int n : {2, 3, 5, 8}) {
    const auto g = FiniteGroup::cyclic(n);
    EXPECT_TRUE(is_in_R0(l2_twist_by_hand(g), Parity::Plus));
    EXPECT_TRUE(is_in_R0(l2_twist(g), Parity::Plus));
    EXPECT_TRUE(is_in_R0(VirtualRep::zero(g), Parity::Plus));
    EXPECT_TRUE(is_in_R0(VirtualRep::zero(g), Parity::Minus));
    EXPECT_FALSE(is_in_R0(VirtualRep::trivial(g), Parity::Plus));
    EXPECT_FALSE(is_in_R0(VirtualRep::trivial(g), Parity::Minus));
    EXPECT_TRUE(VirtualRep::regular(g).is_unitary_consistent());
  }
}

TEST(FourierEta, Examples) {
  std::mt19937_64 rng(3);
  for (int n : {3, 4, 7}) {
    const auto g = FiniteGroup::cyclic(n);
    const auto values = random_values(rng, n);
    const auto rho = rational_rho(g, values);
    Rational total = 0;
    for (const auto& v : values) total += v;
    EXPECT_EQ(fourier_eta(VirtualRep::trivial(g), rho), Cyclotomic(1, total));
    EXPECT_EQ(fourier_eta(VirtualRep::regular(g), rho), Cyclotomic(1, n * values[0]));
  }
  const auto c3 = FiniteGroup::cyclic(3);
  const auto rho = rational_rho(c3, {make_rational(5, 1), make_rational(2, 3), make_rational(-1, 7)});
  EXPECT_EQ(fourier_eta(l2_twist_by_hand(c3), rho), Cyclotomic(1, -make_rational(2, 3) + make_rational(1, 7)));
}

TEST(FourierEta, NoncyclicSumsOverElements) {
  const auto s3 = FiniteGroup::symmetric(3);
  // Sign character: 1, -1 on transpositions, 1 on 3-cycles.
  std::vector<Cyclotomic> sign(3);
  sign[s3->identity_class()] = q(1);
  sign[s3->class_of(*s3->find_label("(12)"))] = q(-1);
  sign[s3->class_of(*s3->find_label("(123)"))] = q(1);
  std::vector<Cyclotomic> rho_values(3);
  rho_values[s3->identity_class()] = q(1);
  rho_values[s3->class_of(*s3->find_label("(12)"))] = q(2);
  rho_values[s3->class_of(*s3->find_label("(123)"))] = q(5);
  const auto phi = VirtualRep::from_character(ClassFunction(s3, sign));
  EXPECT_EQ(fourier_eta(phi, RhoVector(s3, rho_values)), q(1 - 3 * 2 + 2 * 5));
  EXPECT_EQ(pair_phi(ClassFunction(s3, sign), RhoVector(s3, rho_values)), q(1 - 2 + 5));
}

TEST(PairPhi, Examples) {
  const auto c5 = FiniteGroup::cyclic(5);
  std::mt19937_64 rng(4);
  const auto values = random_values(rng, 5);
  const auto rho = rational_rho(c5, values);
  EXPECT_TRUE(pair_phi(ClassFunction::zero(c5), rho).is_zero());
  EXPECT_EQ(pair_phi(rational_function(c5, {0, 1, 0, 0, 1}), rho), Cyclotomic(1, values[1] + values[4]));
  EXPECT_EQ(pair_phi(rational_function(c5, {0, 1, 0, 0, -1}), rho), Cyclotomic(1, values[1] - values[4]));
  EXPECT_THROW(pair_phi(ClassFunction::zero(FiniteGroup::cyclic(3)), rho), ValidationError);
}

TEST(FiniteCharsProperty, TauIsInvolutionWithSmallOrbits) {
  for (int n = 1; n <= 24; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    for (int c = 0; c < g->class_count(); ++c) EXPECT_EQ(g->inverse_class(g->inverse_class(c)), c);
    for (const auto& orbit : tau_orbits(*g)) EXPECT_TRUE(orbit.size() == 1 || orbit.size() == 2);
  }
  for (int k = 1; k <= 4; ++k) {
    const auto g = FiniteGroup::symmetric(k);
    for (int c = 0; c < g->class_count(); ++c) EXPECT_EQ(g->inverse_class(g->inverse_class(c)), c);
  }
}

TEST(FiniteCharsProperty, ClassSpaceDimensions) {
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 16; ++n) groups.push_back(FiniteGroup::cyclic(n));
  for (int k = 1; k <= 4; ++k) groups.push_back(FiniteGroup::symmetric(k));
  for (const auto& g : groups) {
    CyclotomicMatrix plus, minus;
    for (const auto& f : class_space_basis(g, Parity::Plus)) plus.push_back(f.values());
    for (const auto& f : class_space_basis(g, Parity::Minus)) minus.push_back(f.values());
    const int dim_plus = plus.empty() ? 0 : exact_rank(plus);
    const int dim_minus = minus.empty() ? 0 : exact_rank(minus);
    EXPECT_EQ(dim_plus, rank_plus(*g)) << g->describe();
    EXPECT_EQ(dim_minus, rank_minus(*g)) << g->describe();
    EXPECT_EQ(dim_plus + dim_minus, g->class_count() - 1) << g->describe();
  }
}

TEST(FiniteCharsProperty, ThetaInjectiveOnPlusDuals) {
  for (int n = 2; n <= 24; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    CyclotomicMatrix characters;
    for (const auto& kappa : class_space_basis(g, Parity::Plus)) {
      const auto phi = theta_inverse_cyclic(kappa);
      EXPECT_TRUE(is_in_R0(phi, Parity::Plus));
      EXPECT_EQ(theta(phi).values(), kappa.values());
      characters.push_back(theta(phi).values());
    }
    EXPECT_EQ(exact_rank(characters), rank_plus(*g)) << n;
  }
}

TEST(FiniteCharsProperty, BilinearAndMatchesPairing) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 12; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Cyclotomic> m1, m2;
      for (const auto& v : random_values(rng, n)) m1.push_back(Cyclotomic(n, v));
      for (const auto& v : random_values(rng, n)) m2.push_back(Cyclotomic(n, v));
      const auto phi1 = VirtualRep::from_cyclic_multiplicities(g, m1);
      const auto phi2 = VirtualRep::from_cyclic_multiplicities(g, m2);
      const auto rho1 = rational_rho(g, random_values(rng, n));
      const auto rho2 = rational_rho(g, random_values(rng, n));
      const Cyclotomic a(1, make_rational(3, 2));
      EXPECT_EQ(fourier_eta(phi1 + phi2, rho1), add(fourier_eta(phi1, rho1), fourier_eta(phi2, rho1)));
      EXPECT_EQ(fourier_eta(phi1, rho1 + a * rho2), add(fourier_eta(phi1, rho1), mul(a, fourier_eta(phi1, rho2))));
      EXPECT_EQ(fourier_eta(phi1, rho1), pair_phi(theta(phi1), rho1));
    }
  }
}

TEST(FiniteCharsProperty, OppositeParitiesAreOrthogonal) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> coefficient(-4, 4);
  for (int n = 3; n <= 15; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    const auto plus = class_space_basis(g, Parity::Plus);
    const auto minus = class_space_basis(g, Parity::Minus);
    if (minus.empty()) continue;
    ClassFunction f = ClassFunction::zero(g), h = ClassFunction::zero(g);
    for (const auto& b : plus) f = f + Cyclotomic(1, Rational(coefficient(rng))) * b;
    for (const auto& b : minus) h = h + Cyclotomic(1, Rational(coefficient(rng))) * b;
    const auto phi = theta_inverse_cyclic(f);
    ASSERT_TRUE(is_in_R0(phi, Parity::Plus));
    const RhoVector rho(g, h.values());
    ASSERT_TRUE(rho.is_tau_antisymmetric());
    EXPECT_TRUE(fourier_eta(phi, rho).is_zero()) << n;
  }
}
