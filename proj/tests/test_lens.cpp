#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>

#include "rhocalc/error.hpp"
#include "rhocalc/lens.hpp"
#include "rhocalc/rho_calculus.hpp"

using namespace rhocalc;

namespace {

using C = std::complex<long double>;

// (1/n) prod_l 1 / (w^(j a_l) - w^(-j a_l)) with w = exp(2 pi i (n+1) / (2n)).
C lens_value_by_hand(int n, const std::vector<int>& weights, int j) {
  const long double pi = std::acos(-1.0L);
  C product = 1.0L / n;
  for (int a : weights) {
    const long double angle = pi * (n + 1) * static_cast<long double>(j) * a / n;
    product /= std::polar(1.0L, angle) - std::polar(1.0L, -angle);
  }
  return product;
}

C embed(const Cyclotomic& c) {
  const auto z = c.embed(64);
  return {z.real.to_long_double(), z.imag.to_long_double()};
}

std::vector<int> units(int n) {
  std::vector<int> out;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

// Rank of a complex matrix by Gaussian elimination with partial pivoting.
int numeric_rank(std::vector<std::vector<C>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < m.size(); ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) < 1e-10L) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const C factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

ClassFunction rational_function(const GroupPtr& g, const std::vector<long>& values) {
  std::vector<Cyclotomic> out;
  for (long v : values) out.push_back(Cyclotomic(1, Rational(v)));
  return ClassFunction(g, out);
}

}  // namespace

TEST(LensSpace, Validation) {
  EXPECT_NO_THROW(LensSpace(5, {1, 2}));
  EXPECT_THROW(LensSpace(4, {1}), ValidationError);
  EXPECT_THROW(LensSpace(9, {3}), ValidationError);
  EXPECT_THROW(LensSpace(3, {}), ValidationError);
  const LensSpace l(7, {1, 2, 3});
  EXPECT_EQ(l.dimension(), 5);
  EXPECT_EQ(l.parity(), Parity::Minus);
  EXPECT_EQ(l.describe(), "L(7;1,2,3)");
}

TEST(LensRho, LThreeOneOne) {
  const auto rho = lens_delocalized_rho(LensSpace(3, {1, 1}));
  EXPECT_TRUE(rho.identity_value().is_zero());
  EXPECT_EQ(rho[1], Cyclotomic(1, make_rational(-1, 9)));
  EXPECT_EQ(rho[2], Cyclotomic(1, make_rational(-1, 9)));
  EXPECT_NEAR(static_cast<double>(lens_value_by_hand(3, {1, 1}, 1).real()), -1.0 / 9, 1e-15);
}

TEST(LensRho, LThreeOne) {
  const auto rho = lens_delocalized_rho(LensSpace(3, {1}));
  EXPECT_EQ(rho[1], -rho[2]);
  EXPECT_TRUE(rho[1].is_purely_imaginary());
  EXPECT_FALSE(rho[1].is_zero());
}

TEST(LensRho, DefectScale) {
  const auto rho = lens_delocalized_rho(LensSpace(5, {1, 3}), make_rational(-2, 1));
  const auto base = lens_delocalized_rho(LensSpace(5, {1, 3}));
  for (int c = 0; c < 5; ++c) EXPECT_EQ(rho[c], make_rational(-2, 1) * base[c]);
}

TEST(LensTwisted, Examples) {
  const auto c3 = FiniteGroup::cyclic(3);
  const LensSpace l(3, {1, 1});
  const auto twist = Cyclotomic(1, make_rational(1, 3)) * VirtualRep::regular(c3) - VirtualRep::trivial(c3);
  EXPECT_EQ(lens_twisted_rho(l, twist), Cyclotomic(1, make_rational(2, 9)));
  EXPECT_TRUE(lens_twisted_rho(l, VirtualRep::zero(c3)).is_zero());
  for (int n : {3, 5, 7}) {
    for (const auto& lens : canonical_lens_family(n, 2)) {
      EXPECT_TRUE(lens_twisted_rho(lens, VirtualRep::regular(FiniteGroup::cyclic(n))).is_zero());
    }
  }
  EXPECT_THROW(lens_twisted_rho(l, VirtualRep::trivial(FiniteGroup::cyclic(5))), ValidationError);
}

TEST(LensSearch, Examples) {
  const auto c3 = FiniteGroup::cyclic(3);
  const auto found = search_nonvanishing(3, Parity::Plus, rational_function(c3, {0, 1, 1}), {2}, 100);
  ASSERT_TRUE(found.witness.has_value());
  EXPECT_EQ(found.witness->lens, LensSpace(3, {1, 1}));
  EXPECT_EQ(found.witness->value, Cyclotomic(1, make_rational(-2, 9)));

  const auto c5 = FiniteGroup::cyclic(5);
  const auto minus = search_nonvanishing(5, Parity::Minus, rational_function(c5, {0, 1, 0, 0, -1}), {1}, 100);
  ASSERT_TRUE(minus.witness.has_value());
  EXPECT_EQ(minus.witness->lens.k(), 1);
  EXPECT_FALSE(minus.witness->value.is_zero());

  EXPECT_THROW(search_nonvanishing(3, Parity::Plus, ClassFunction::zero(c3), {2}, 100), ValidationError);
  EXPECT_THROW(search_nonvanishing(3, Parity::Plus, rational_function(c3, {0, 1, 1}), {1}, 100), ValidationError);
}

TEST(LensSearch, ParallelMatchesSerial) {
  const auto c7 = FiniteGroup::cyclic(7);
  const auto f = rational_function(c7, {0, 0, 1, 0, 0, 1, 0});
  const auto serial = search_nonvanishing(7, Parity::Plus, f, {2, 4}, 5000, 1);
  const auto parallel = search_nonvanishing(7, Parity::Plus, f, {2, 4}, 5000, 4);
  ASSERT_TRUE(serial.witness && parallel.witness);
  EXPECT_EQ(serial.witness->lens, parallel.witness->lens);
  EXPECT_EQ(serial.candidates_tried, parallel.candidates_tried);
}

TEST(LensRank, Examples) {
  EXPECT_EQ(span_rank(3, Parity::Plus, 2, canonical_lens_family(3, 2)), 1);
  EXPECT_EQ(span_rank(5, Parity::Plus, 2, {}), 0);
  EXPECT_EQ(span_rank(5, Parity::Plus, 4, canonical_lens_family(5, 4)), 2);
  EXPECT_LE(span_rank(5, Parity::Plus, 2, canonical_lens_family(5, 2)), 2);
}

TEST(LensRank, AgreesWithNumericRank) {
  for (int n : {3, 5, 7, 9}) {
    for (int k : {2, 4}) {
      const auto family = canonical_lens_family(n, k);
      const auto basis = class_space_basis(FiniteGroup::cyclic(n), Parity::Plus);
      std::vector<std::vector<C>> m;
      for (const auto& lens : family) {
        std::vector<C> row;
        for (const auto& f : basis) {
          C sum = 0;
          for (int j = 1; j < n; ++j) sum += embed(f.at_element(j)) * lens_value_by_hand(n, lens.weights(), j);
          row.push_back(sum);
        }
        m.push_back(row);
      }
      EXPECT_EQ(span_rank(n, Parity::Plus, k, family), numeric_rank(m)) << n << " " << k;
    }
  }
}

TEST(LensProperty, ValuesMatchDirectEvaluation) {
  std::mt19937_64 rng(21);
  for (int n : {3, 5, 7, 9, 11, 15}) {
    const auto u = units(n);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> weights;
      for (int i = 0; i < k; ++i) weights.push_back(u[pick(rng)]);
      const auto rho = lens_delocalized_rho(LensSpace(n, weights));
      for (int j = 1; j < n; ++j) {
        EXPECT_LT(std::abs(embed(rho.at_element(j)) - lens_value_by_hand(n, weights, j)), 1e-14L) << n << " " << j;
      }
    }
  }
}

TEST(LensProperty, ParityAndReality) {
  for (int n : {3, 5, 7, 9, 11, 13}) {
    for (int k = 1; k <= 4; ++k) {
      for (const auto& lens : canonical_lens_family(n, k)) {
        const auto rho = lens_delocalized_rho(lens);
        if (k % 2 == 0) {
          EXPECT_TRUE(rho.is_tau_symmetric()) << lens.describe();
          for (const auto& v : rho.values()) EXPECT_TRUE(v.is_real());
        } else {
          EXPECT_TRUE(rho.is_tau_antisymmetric()) << lens.describe();
          for (const auto& v : rho.values()) EXPECT_TRUE(v.is_purely_imaginary());
        }
      }
    }
  }
}

TEST(LensProperty, RationalityAndFourierConsistency) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  for (int n : {3, 5, 7, 9, 15}) {
    const auto g = FiniteGroup::cyclic(n);
    const auto ring = ring_from_orders({static_cast<std::uint64_t>(n)});
    for (int trial = 0; trial < 10; ++trial) {
      // Multiplicities constant on gcd classes give integer characters; the
      // identity slot is fixed so that the dimension is 0.
      std::map<int, int> by_gcd;
      std::vector<Cyclotomic> m(n, Cyclotomic::zero(n));
      long dimension = 0;
      for (int a = 1; a < n; ++a) {
        const int d = std::gcd(a, n);
        if (!by_gcd.count(d)) by_gcd[d] = coefficient(rng);
        m[a] = Cyclotomic(n, Rational(by_gcd[d]));
        dimension += by_gcd[d];
      }
      m[0] = Cyclotomic(n, Rational(-dimension));
      const auto phi = VirtualRep::from_cyclic_multiplicities(g, m);
      for (const auto& v : phi.character().values()) ASSERT_TRUE(v.is_rational());
      ASSERT_TRUE(phi.dimension().is_zero());
      for (int k = 1; k <= 3; ++k) {
        for (const auto& lens : canonical_lens_family(n, k)) {
          const auto value = lens_twisted_rho(lens, phi);
          EXPECT_EQ(value, pair_phi(theta(phi), lens_delocalized_rho(lens)));
          ASSERT_TRUE(value.is_rational()) << lens.describe();
          EXPECT_TRUE(ring_contains(ring, value.rational_value())) << lens.describe();
        }
      }
    }
  }
}
