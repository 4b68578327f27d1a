#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "rhocalc/error.hpp"
#include "rhocalc/group_zoo.hpp"

using namespace rhocalc;

namespace {

std::vector<ZooPtr> all_groups() {
  return {ZooGroup::cyclic(5),         ZooGroup::lamplighter(2), ZooGroup::lamplighter(3), ZooGroup::lamplighter(0),
          ZooGroup::qsemidirect(),     ZooGroup::hnn_shift(),    ZooGroup::parse("product(cyclic:3,lamplighter:2)")};
}

std::vector<std::string> random_word(std::mt19937_64& rng, const ZooGroup& g, std::size_t max_length) {
  const auto names = g.generator_names();
  std::uniform_int_distribution<std::size_t> length(0, max_length), pick(0, names.size() - 1);
  std::vector<std::string> word(length(rng));
  for (auto& letter : word) letter = names[pick(rng)];
  return word;
}

// Ball sizes of Z/2 wr Z on {a, t}: states are (lamp bitmask around an offset, position).
std::vector<std::size_t> lamplighter_two_ball_by_hand(int radius) {
  const int offset = radius + 1;
  std::map<std::pair<unsigned long, int>, int> seen;
  std::queue<std::pair<unsigned long, int>> frontier;
  seen[{0, 0}] = 0;
  frontier.push({0, 0});
  while (!frontier.empty()) {
    const auto state = frontier.front();
    frontier.pop();
    const int d = seen[state];
    if (d == radius) continue;
    const std::pair<unsigned long, int> next[] = {
        {state.first ^ (1ul << (state.second + offset)), state.second},
        {state.first, state.second + 1},
        {state.first, state.second - 1}};
    for (const auto& n : next) {
      if (seen.emplace(n, d + 1).second) frontier.push(n);
    }
  }
  std::vector<std::size_t> counts(radius + 1, 0);
  for (const auto& [state, d] : seen)
    for (int r = d; r <= radius; ++r) ++counts[r];
  return counts;
}

}  // namespace

TEST(Normalize, Examples) {
  const auto hnn = ZooGroup::hnn_shift();
  EXPECT_EQ(hnn->normalize("t e:0 t^-1"), hnn->normalize("e:1"));
  EXPECT_EQ(hnn->normalize("t e:0 t^-1").to_string(), "e:1");
  const auto gamma = ZooGroup::qsemidirect();
  EXPECT_EQ(gamma->normalize("e:0 q:1 e:0^-1"), gamma->normalize("q:2"));
  EXPECT_EQ(gamma->normalize("e:1 q:1 e:1^-1"), gamma->normalize("q:3"));
  EXPECT_EQ(gamma->normalize("e:-1 q:1 e:-1^-1"), gamma->normalize("q:3"));
  for (const auto& g : all_groups()) {
    EXPECT_TRUE(g->is_identity(g->normalize(""))) << g->describe();
    EXPECT_TRUE(g->is_identity(g->normalize(std::vector<std::string>{}))) << g->describe();
  }
}

TEST(Normalize, MalformedLetters) {
  EXPECT_THROW(ZooGroup::hnn_shift()->normalize("x"), ValidationError);
  EXPECT_THROW(ZooGroup::qsemidirect()->normalize("t"), ValidationError);
  EXPECT_THROW(ZooGroup::qsemidirect()->normalize("q:1/0"), ValidationError);
  EXPECT_THROW(ZooGroup::lamplighter(2)->normalize("e:0"), ValidationError);
  EXPECT_THROW(ZooGroup::cyclic(3)->normalize("g^"), ValidationError);
  EXPECT_THROW(ZooGroup::parse("lamplighter:1"), ValidationError);
  EXPECT_THROW(ZooGroup::parse("free:2"), ValidationError);
}

TEST(Elements, Orders) {
  const auto l2 = ZooGroup::lamplighter(2);
  EXPECT_EQ(l2->element_order(l2->normalize("lamp:0")), 2);
  EXPECT_EQ(l2->element_order(l2->normalize("t")), 0);
  EXPECT_EQ(l2->element_order(l2->normalize("lamp:0 lamp:3")), 2);
  const auto c6 = ZooGroup::cyclic(6);
  EXPECT_EQ(c6->element_order(c6->normalize("g^4")), 3);
  const auto p = ZooGroup::parse("product(cyclic:4,cyclic:6)");
  EXPECT_EQ(p->element_order(p->normalize("x.g y.g^2")), 12);
  EXPECT_EQ(ZooGroup::hnn_shift()->element_order(ZooGroup::hnn_shift()->normalize("q:1")), 0);
}

TEST(Elements, LamplighterConjugationTranslates) {
  const auto l2 = ZooGroup::lamplighter(2);
  EXPECT_EQ(l2->conjugate(l2->normalize("t"), l2->normalize("lamp:0")), l2->normalize("lamp:1"));
  EXPECT_EQ(l2->conjugate(l2->normalize("lamp:5"), l2->normalize("lamp:0")), l2->normalize("lamp:0"));
}

TEST(NormalFormProperty, SoundOnRandomPairs) {
  std::mt19937_64 rng(31);
  for (const auto& g : all_groups()) {
    for (int trial = 0; trial < 10000; ++trial) {
      auto u = random_word(rng, *g, 8), v = random_word(rng, *g, 8);
      const auto nu = g->normalize(u), nv = g->normalize(v);
      std::vector<std::string> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      ASSERT_EQ(g->normalize(uv), g->multiply(nu, nv)) << g->describe();
      ASSERT_EQ(g->normalize(nu.to_string()), nu) << g->describe() << " " << nu.to_string();
    }
  }
}

TEST(NormalFormProperty, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(32);
  for (const auto& g : all_groups()) {
    for (int trial = 0; trial < 2000; ++trial) {
      const auto a = g->normalize(random_word(rng, *g, 10));
      const auto b = g->normalize(random_word(rng, *g, 10));
      const auto c = g->normalize(random_word(rng, *g, 10));
      ASSERT_EQ(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c))) << g->describe();
      ASSERT_TRUE(g->is_identity(g->multiply(a, g->inverse(a)))) << g->describe();
      ASSERT_EQ(g->multiply(a, g->identity()), a);
      ASSERT_EQ(g->power(a, 3), g->multiply(a, g->multiply(a, a)));
      ASSERT_EQ(g->power(a, -2), g->inverse(g->multiply(a, a)));
      EXPECT_NO_THROW(g->check(a));
    }
  }
}

TEST(PrimeWeights, IndexingAndShift) {
  EXPECT_EQ(prime_weight({{0, 1}}), Rational(2));
  EXPECT_EQ(prime_weight({{1, 1}, {-1, 1}}), Rational(9));
  EXPECT_EQ(prime_weight({{2, -1}}), make_rational(1, 5));
  EXPECT_EQ(shift_index({{0, 2}, {3, -1}}, 1), (SparseVector{{1, 2}, {4, -1}}));
  EXPECT_EQ(format_sparse({{0, 1}, {2, -3}}), "{0:1,2:-3}");
}

TEST(Britton, ReducesPinches) {
  zoo::QElement e0{Rational(0), {{0, 1}}};
  const HnnWord word = {{true, 1, {}}, {false, 1, e0}, {true, -1, {}}};
  EXPECT_TRUE(has_pinch(word));
  const auto reduced = britton_reduce(word);
  EXPECT_EQ(reduced.pinches, 1u);
  ASSERT_EQ(reduced.reduced.size(), 1u);
  EXPECT_EQ(reduced.reduced[0].base.lambda, (SparseVector{{1, 1}}));
  EXPECT_EQ(britton_reduce({{true, 1, {}}, {true, -1, {}}}).reduced.size(), 0u);
  zoo::QElement q1{Rational(1), {}};
  const HnnWord stuck = {{true, 1, {}}, {false, 1, q1}, {true, -1, {}}};
  EXPECT_FALSE(has_pinch(stuck));
  EXPECT_EQ(britton_reduce(stuck).pinches, 0u);
}

TEST(BrittonProperty, RandomWords) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> length(0, 20), kind(0, 4), index(-2, 2), value(-2, 2), sign(0, 1);
  const auto hnn = ZooGroup::hnn_shift();
  for (int trial = 0; trial < 10000; ++trial) {
    HnnWord word(length(rng));
    for (auto& letter : word) {
      const int k = kind(rng);
      if (k < 2) {
        letter = {true, sign(rng) ? 1 : -1, {}};
      } else if (k == 2) {
        letter = {false, 1, {Rational(value(rng)), {}}};
      } else {
        const long v = value(rng);
        letter = {false, 1, {Rational(0), v ? SparseVector{{index(rng), v}} : SparseVector{}}};
      }
    }
    const auto reduced = britton_reduce(word);
    ASSERT_FALSE(has_pinch(reduced.reduced));
    ASSERT_LE(reduced.reduced.size() + reduced.pinches, word.size());
    ASSERT_EQ(evaluate_word(*hnn, reduced.reduced), evaluate_word(*hnn, word));
  }
}

TEST(WordBalls, Basics) {
  const auto c5 = ZooGroup::cyclic(5);
  EXPECT_EQ(word_ball(c5, 3).cumulative_counts(), (std::vector<std::size_t>{1, 3, 5, 5}));
  for (const auto& g : all_groups()) {
    const auto ball = word_ball(g, 3);
    EXPECT_TRUE(g->is_identity(ball.elements.front().element));
    EXPECT_EQ(ball.elements.front().length, 0);
    const auto counts = ball.cumulative_counts();
    EXPECT_TRUE(std::is_sorted(counts.begin(), counts.end())) << g->describe();
  }
  EXPECT_THROW(word_ball(ZooGroup::hnn_shift(), 9, 1000), ComputationError);
}

TEST(WordBalls, LamplighterMatchesIndependentSearch) {
  EXPECT_EQ(word_ball(ZooGroup::lamplighter(2), 7).cumulative_counts(), lamplighter_two_ball_by_hand(7));
}

TEST(WordBalls, QSemidirectIsGammaPartOfG) {
  const auto gamma = word_ball(ZooGroup::qsemidirect(), 4);
  const auto g = word_ball(ZooGroup::hnn_shift(), 4);
  std::set<std::string> from_g;
  for (const auto& e : g.elements) {
    const auto& h = e.element.as<zoo::HnnElement>();
    if (h.syllables.empty()) from_g.insert(e.element.to_string() + "@" + std::to_string(e.length));
  }
  std::set<std::string> direct;
  for (const auto& e : gamma.elements) direct.insert(e.element.to_string() + "@" + std::to_string(e.length));
  EXPECT_EQ(direct, from_g);
}
