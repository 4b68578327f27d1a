#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rhocalc/characters.hpp"
#include "rhocalc/group_zoo.hpp"

namespace rhocalc {

struct ConjugacyOptions {
  /// Largest radius accepted by class_ball and growth_classify.
  int radius_cap = 12;
  /// Generic breadth-first search gives up beyond this many class elements.
  std::size_t max_elements = 2'000'000;
  /// Workers for frontier expansion; results are merged in a fixed order.
  unsigned jobs = 1;
};

struct ClassEntry {
  GroupElement element;
  /// Least word length of a conjugator w with w h w^-1 = element.
  int distance = 0;
};

/// {w h w^-1 : |w| <= radius}, sorted by (distance, canonical text).
struct ClassBall {
  ZooPtr group;
  GroupElement h;
  int radius = 0;
  std::vector<ClassEntry> elements;
  /// "bfs" for conjugation by generators, "kernel" for the closed route on
  /// elements (q, 0) of Q x| (sum Z).
  std::string method;

  /// |class_ball(r)| for r = 0..radius.
  std::vector<std::size_t> cumulative_counts() const;
};

/// Conjugacy-class ball. For Q x| (sum Z) only kernel elements (q, 0) are
/// supported; conjugators range over Gamma inside the ball of G, which gives
/// {(m(lambda) q, 0) : lambda in Lambda_r}. For G = HNN the ball is a
/// breadth-first search over conjugation by {1, e0, t}.
/// Throws ValidationError above radius_cap, ComputationError above
/// max_elements.
ClassBall class_ball(const ZooPtr& group, const GroupElement& h, int radius, const ConjugacyOptions& options = {});

/// Lambda_r: the lambda in sum Z with (0, lambda) of word length <= r in
/// the ball of G, each with that length. Computed as the shift-0 part of the
/// Z wr Z ball on {e0, t}.
std::vector<std::pair<SparseVector, int>> kernel_conjugator_ball(int radius);

/// (q, 0) conjugates of (q_h, 0) by conjugators of length <= radius, for
/// both Q x| (sum Z) and G. By Britton's lemma any conjugator of a nonzero
/// (q, 0) into Q lies in Gamma, so this is the whole Q-part of the class
/// ball in both groups.
std::vector<std::pair<Rational, int>> rational_class_part(const Rational& q, int radius,
                                                          const ConjugacyOptions& options = {});

/// For (q, 0) in the Q kernel: q > 0, i.e. membership in the class of 1.
/// std::nullopt when the element is outside the kernel.
std::optional<bool> conjugate_of_one_test(const GroupElement& element);

/// Integers in the class of 1 in Q x| (sum Z) or G within the radius,
/// ascending.
std::vector<Integer> class_intersect_integers(const ZooPtr& group, int radius, const ConjugacyOptions& options = {});

struct GrowthEstimate {
  enum class Kind { Polynomial, Exponential, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// Log-log slope on the fit window (Polynomial).
  double degree = 0;
  /// Geometric mean of count ratios per radius step on the fit window.
  double step_ratio = 1;
  /// Slopes on the two halves of the window.
  double slope_low = 0;
  double slope_high = 0;
  /// Coefficient of determination of log c against log r and against r.
  double r2_power = 0;
  double r2_exponential = 0;
  int window_begin = 0;
  int window_end = 0;
  /// |class_ball(r)| for r = 0..max_radius.
  std::vector<std::size_t> counts;
};

const char* to_string(GrowthEstimate::Kind kind);

/// Fits r in [max_radius/2, max_radius]. Exponential when the per-step
/// count ratio is >= 1.5; Polynomial when the log-log slopes of both window
/// halves and the whole window agree within 0.25; otherwise Inconclusive.
GrowthEstimate growth_classify(const ZooPtr& group, const GroupElement& h, int max_radius,
                               const ConjugacyOptions& options = {});

/// Canonical key of the conjugacy class of a torsion element (or of a Q
/// kernel element). Throws ValidationError where classes are not decided.
std::string conjugacy_key(const ZooGroup& group, const GroupElement& element);

struct ZooClassValue {
  std::string class_key;
  GroupElement representative;
  Cyclotomic value;
};

/// Induction of rho data from Z/m (rho over FiniteGroup::cyclic(m)) into a
/// zoo group along 1 -> generator_image, which must have order exactly m.
/// Lists the target classes met by the image, identity class first; all
/// other classes carry 0.
std::vector<ZooClassValue> induce_rho_zoo(const RhoVector& rho, const ZooPtr& target,
                                          const GroupElement& generator_image);

/// "normal_form\tlength" rows with a header line.
std::string to_tsv(const WordBall& ball);
std::string to_tsv(const ClassBall& ball);

}  // namespace rhocalc
