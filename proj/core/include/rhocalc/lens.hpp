#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rhocalc/characters.hpp"
#include "rhocalc/exact_linalg.hpp"

namespace rhocalc {

/// L(n; a_1, ..., a_k): the quotient of S^(2k-1) by Z/n acting with rotation
/// weights a_l. n is odd and every weight is a unit mod n. Weights are stored
/// reduced into [1, n-1].
class LensSpace {
 public:
  LensSpace(int n, std::vector<int> weights);

  int n() const { return n_; }
  const std::vector<int>& weights() const { return weights_; }
  int k() const { return static_cast<int>(weights_.size()); }
  int dimension() const { return 2 * k() - 1; }
  /// dim = 3 mod 4 (k even) gives tau-symmetric data, dim = 1 mod 4 gives
  /// tau-antisymmetric data.
  Parity parity() const { return k() % 2 == 0 ? Parity::Plus : Parity::Minus; }
  std::string describe() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  int n_;
  std::vector<int> weights_;
};

/// The delocalized rho vector of L over Z/n. The identity slot is 0 and for
/// j = 1..n-1
///
///   rho_(g^j) = scale * (1/n) * prod_l 1 / (w^(j a_l) - w^(-j a_l)),
///
/// where w = zeta_n^((n+1)/2) is the square root of zeta_n in Q(zeta_n).
RhoVector lens_delocalized_rho(const LensSpace& lens, const Rational& defect_scale = Rational(1));

/// fourier_eta(phi, lens_delocalized_rho(lens)).
Cyclotomic lens_twisted_rho(const LensSpace& lens, const VirtualRep& phi,
                            const Rational& defect_scale = Rational(1));

/// Weight tuples of length k, one per class under permutations of the
/// weights and multiplication of all weights by a common unit. Each class is
/// represented by its lexicographically least sorted tuple; the list is in
/// lexicographic order.
std::vector<LensSpace> canonical_lens_family(int n, int k);

struct NonvanishingWitness {
  LensSpace lens;
  Cyclotomic value;
};

struct SearchOutcome {
  /// Empty means NotFound within the budget.
  std::optional<NonvanishingWitness> witness;
  std::size_t candidates_tried = 0;
};

/// First lens space (in k order, then canonical family order) whose rho
/// vector pairs nontrivially with f. Only k of the matching parity are
/// searched; at most weight_budget candidates are evaluated. Evaluation is
/// spread over `jobs` threads; the reported witness does not depend on it.
SearchOutcome search_nonvanishing(int n, Parity parity, const ClassFunction& f,
                                  const std::vector<int>& k_values, std::size_t weight_budget,
                                  unsigned jobs = 1);

/// Matrix of pair_phi(basis_c, rho(L_r)) against the Class^(parity)_0 basis
/// of Z/n; one row per lens space.
CyclotomicMatrix lens_pairing_matrix(int n, Parity parity, const std::vector<LensSpace>& family);

/// exact_rank(lens_pairing_matrix(...)); family members must all have k
/// weights and matching parity.
int span_rank(int n, Parity parity, int k, const std::vector<LensSpace>& family);

}  // namespace rhocalc
