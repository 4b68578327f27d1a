#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rhocalc/rational.hpp"

namespace rhocalc {

/// Finitely supported map Z -> Z (or Z/n); zero entries are never stored.
using SparseVector = std::map<long, long>;

namespace zoo {

struct CyclicElement {
  long k = 0;
  friend bool operator==(const CyclicElement&, const CyclicElement&) = default;
};

/// (lamps, shift) in (sum_Z Z/n) x| Z; lamp values are reduced into [0, n).
struct LampElement {
  SparseVector lamps;
  long shift = 0;
  friend bool operator==(const LampElement&, const LampElement&) = default;
};

/// (q, lambda) in Q x| (sum_Z Z).
struct QElement {
  Rational q;
  SparseVector lambda;
  friend bool operator==(const QElement&, const QElement&) = default;
};

/// One t^power q block of an HNN normal form.
struct Syllable {
  long power = 0;
  Rational q;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// head t^m1 q1 t^m2 q2 ... t^mk qk (0, lambda): every m_i != 0 and every q_i
/// except the last is nonzero, so no t^e a t^-e pinch can occur.
struct HnnElement {
  Rational head;
  std::vector<Syllable> syllables;
  SparseVector lambda;
  friend bool operator==(const HnnElement&, const HnnElement&) = default;
};

struct PairElement;

}  // namespace zoo

class GroupElement {
 public:
  using Variant = std::variant<zoo::CyclicElement, zoo::LampElement, zoo::QElement, zoo::HnnElement,
                               std::shared_ptr<const zoo::PairElement>>;

  GroupElement() : value_(zoo::CyclicElement{}) {}
  GroupElement(zoo::CyclicElement e) : value_(std::move(e)) {}
  GroupElement(zoo::LampElement e) : value_(std::move(e)) {}
  GroupElement(zoo::QElement e) : value_(std::move(e)) {}
  GroupElement(zoo::HnnElement e) : value_(std::move(e)) {}
  GroupElement(GroupElement left, GroupElement right);

  const Variant& value() const { return value_; }
  template <typename T>
  const T& as() const {
    return std::get<T>(value_);
  }
  const GroupElement& left() const;
  const GroupElement& right() const;

  /// Canonical text of the normal form; equal elements give equal strings.
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  Variant value_;
};

namespace zoo {
struct PairElement {
  GroupElement left;
  GroupElement right;
};
}  // namespace zoo

class ZooGroup;
using ZooPtr = std::shared_ptr<const ZooGroup>;

/// The example groups: Z/n, products, lamplighters, Q x| (sum Z) and its HNN
/// extension by the index shift. Immutable; share through ZooPtr.
class ZooGroup {
 public:
  enum class Kind { Cyclic, Product, Lamplighter, QSemidirect, HNNShift };

  static ZooPtr cyclic(long n);
  static ZooPtr product(ZooPtr left, ZooPtr right);
  /// (sum_Z Z/n) x| Z for n >= 2; n == 0 gives Z wr Z.
  static ZooPtr lamplighter(long n);
  static ZooPtr qsemidirect();
  static ZooPtr hnn_shift();
  /// "cyclic:n", "lamplighter:n", "qsemi", "hnn", "product(A,B)".
  static ZooPtr parse(std::string_view text);

  Kind kind() const { return kind_; }
  long modulus() const { return n_; }
  const ZooPtr& left() const { return left_; }
  const ZooPtr& right() const { return right_; }
  std::string describe() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long k) const;
  GroupElement conjugate(const GroupElement& w, const GroupElement& h) const {
    return multiply(multiply(w, h), inverse(w));
  }
  bool is_identity(const GroupElement& a) const { return a == identity(); }
  /// Throws ValidationError if the element does not belong to this group.
  void check(const GroupElement& a) const;

  /// Canonical symmetric generating set (each generator followed by its
  /// inverse when distinct): Z/n {g}; lamplighter {a, t}; Gamma and G
  /// {1 in Q, e0, t}; products concatenate x. and y. generators.
  std::vector<GroupElement> generators() const;
  /// Letter names matching generators().
  std::vector<std::string> generator_names() const;

  /// One letter: "g", "t", "a", "lamp:k", "q:r", "e:i", each optionally
  /// followed by "^k"; products prefix "x." or "y.".
  GroupElement parse_letter(std::string_view token) const;
  /// Product of whitespace- or '*'-separated letters; "" and "1" are the
  /// identity.
  GroupElement normalize(std::string_view word) const;
  GroupElement normalize(const std::vector<std::string>& letters) const;

  /// Finite order, or 0 for elements of infinite order.
  long element_order(const GroupElement& a) const;

  friend bool operator==(const ZooGroup& a, const ZooGroup& b);

 private:
  ZooGroup(Kind kind, long n, ZooPtr left = nullptr, ZooPtr right = nullptr)
      : kind_(kind), n_(n), left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  long n_;
  ZooPtr left_;
  ZooPtr right_;
};

/// m(lambda) = prod_i p(|i|)^lambda_i with p(0) = 2, p(1) = 3, p(2) = 5, ...
Rational prime_weight(const SparseVector& lambda);

/// The index shift alpha(lambda)(i) = lambda(i - 1), raised to `power`.
SparseVector shift_index(const SparseVector& lambda, long power);

/// Raw alternating word over Gamma and t^(+-1), before normal forms.
struct HnnWordLetter {
  bool is_stable = false;
  int stable_sign = 1;
  zoo::QElement base;
};
using HnnWord = std::vector<HnnWordLetter>;

struct BrittonResult {
  HnnWord reduced;
  std::size_t pinches = 0;
};

/// Britton reduction: adjacent Gamma letters are merged and every
/// t^e a t^-e with a in A = sum Z is replaced by alpha^e(a) until none remain.
BrittonResult britton_reduce(HnnWord word);
/// True if some t^e a t^-e with a in A occurs.
bool has_pinch(const HnnWord& word);
/// Evaluate a raw word in G.
GroupElement evaluate_word(const ZooGroup& hnn, const HnnWord& word);

struct BallEntry {
  GroupElement element;
  int length = 0;
};

/// Elements of word length <= radius, sorted by (length, canonical text).
struct WordBall {
  ZooPtr group;
  int radius = 0;
  std::vector<BallEntry> elements;
  /// |B(r)| for r = 0..radius.
  std::vector<std::size_t> cumulative_counts() const;
};

/// Breadth-first ball. For Q x| (sum Z) the ball of G is computed and
/// restricted to Gamma. Throws ComputationError beyond max_elements.
WordBall word_ball(const ZooPtr& group, int radius, std::size_t max_elements = 2'000'000);

std::string format_sparse(const SparseVector& v);

}  // namespace rhocalc
