#pragma once

#include <optional>
#include <vector>

#include "rhocalc/cyclotomic.hpp"
#include "rhocalc/finite_group.hpp"

namespace rhocalc {

enum class Parity { Plus, Minus };

const char* to_string(Parity parity);
Parity parse_parity(std::string_view text);

/// Values indexed by the conjugacy classes of a finite group, all held in
/// one cyclotomic field (the lcm of the orders supplied).
class ClassValues {
 public:
  ClassValues(GroupPtr group, std::vector<Cyclotomic> values);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& operator[](int class_index) const { return values_[class_index]; }
  const Cyclotomic& at_element(int element) const { return values_[group_->class_of(element)]; }
  int field_order() const { return values_.front().order(); }
  std::size_t size() const { return values_.size(); }

  /// f(<h^-1>) == f(<h>) on every class.
  bool is_tau_symmetric() const;
  /// f(<h^-1>) == -f(<h>) on every class.
  bool is_tau_antisymmetric() const;

 protected:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Complex class function f: G -> Q(zeta).
class ClassFunction : public ClassValues {
 public:
  using ClassValues::ClassValues;

  static ClassFunction zero(GroupPtr group);

  /// f(1) = 0 and f(h) = +-f(h^-1), tested exactly.
  bool in_class_space(Parity parity) const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclotomic& s, const ClassFunction& f);
};

/// The collection rho_<h> of delocalized rho values, one per class; the
/// identity-class slot carries the L2 value.
class RhoVector : public ClassValues {
 public:
  using ClassValues::ClassValues;

  static RhoVector zero(GroupPtr group);
  const Cyclotomic& identity_value() const { return values_[group_->identity_class()]; }

  friend RhoVector operator+(const RhoVector& a, const RhoVector& b);
  friend RhoVector operator*(const Cyclotomic& s, const RhoVector& r);
};

/// A virtual representation (with Q(zeta) coefficients) recorded through its
/// character. For cyclic groups the multiplicities over the irreducible
/// characters chi_a(g^j) = zeta^(a j) are also kept.
class VirtualRep {
 public:
  static VirtualRep zero(GroupPtr group);
  static VirtualRep trivial(GroupPtr group);
  static VirtualRep regular(GroupPtr group);
  /// Irreducible character chi_a of Z/n.
  static VirtualRep cyclic_irrep(GroupPtr group, int a);
  /// sum_a m_a chi_a on Z/n; multiplicities.size() must equal n.
  static VirtualRep from_cyclic_multiplicities(GroupPtr group, std::vector<Cyclotomic> multiplicities);
  static VirtualRep from_character(ClassFunction character);

  const GroupPtr& group() const { return character_.group(); }
  const ClassFunction& character() const { return character_; }
  const std::optional<std::vector<Cyclotomic>>& multiplicities() const { return multiplicities_; }
  /// chi(1).
  const Cyclotomic& dimension() const { return character_.at_element(group()->identity()); }

  /// chi(h^-1) == conj(chi(h)) for every class.
  bool is_unitary_consistent() const;

  friend VirtualRep operator+(const VirtualRep& a, const VirtualRep& b);
  friend VirtualRep operator-(const VirtualRep& a, const VirtualRep& b);
  friend VirtualRep operator*(const Cyclotomic& s, const VirtualRep& phi);

 private:
  VirtualRep(ClassFunction character, std::optional<std::vector<Cyclotomic>> multiplicities);

  ClassFunction character_;
  std::optional<std::vector<Cyclotomic>> multiplicities_;
};

/// The twisting virtual rep -triv + (1/|G|) regular, whose twisted rho is
/// the L2 rho invariant.
VirtualRep l2_twist(GroupPtr group);

/// Orbits of <h> -> <h^-1> on all classes, each sorted, listed by least
/// class index. The identity class is its own orbit.
std::vector<std::vector<int>> tau_orbits(const FiniteGroup& group);

/// Basis of Class^+_0 (characteristic functions of <g> u <g^-1>, one per
/// orbit of nontrivial classes) or Class^-_0 (+1 on <g>, -1 on <g^-1>, one
/// per two-element orbit; +1 sits on the class with the smaller index).
std::vector<ClassFunction> class_space_basis(const GroupPtr& group, Parity parity);

/// Number of tau-orbits on nontrivial classes; include_identity adds the
/// identity orbit.
int rank_plus(const FiniteGroup& group, bool include_identity = false);
/// Number of tau-orbits {<h>, <h^-1>} with <h> != <h^-1>.
int rank_minus(const FiniteGroup& group);

/// chi(1) = 0 and chi(h) = +-chi(h^-1) for all h.
bool is_in_R0(const VirtualRep& phi, Parity parity);

/// eta_phi = sum over elements h of chi(h) rho_<h>. For cyclic reps with
/// known multiplicities this is evaluated irreducible by irreducible.
Cyclotomic fourier_eta(const VirtualRep& phi, const RhoVector& rho);

/// Phi(f)(rho) = sum over classes <h> of rho_<h> f(<h>).
Cyclotomic pair_phi(const ClassFunction& f, const RhoVector& rho);

/// Theta: the character of phi, as a class function.
inline const ClassFunction& theta(const VirtualRep& phi) { return phi.character(); }

/// Inverse of Theta on Z/n: multiplicities m_a = (1/n) sum_j f(j) zeta^(-a j).
VirtualRep theta_inverse_cyclic(const ClassFunction& f);

}  // namespace rhocalc
