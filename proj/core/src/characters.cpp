#include "rhocalc/characters.hpp"

#include <algorithm>

#include "rhocalc/error.hpp"

namespace rhocalc {

const char* to_string(Parity parity) { return parity == Parity::Plus ? "plus" : "minus"; }

Parity parse_parity(std::string_view text) {
  if (text == "plus" || text == "+") return Parity::Plus;
  if (text == "minus" || text == "-") return Parity::Minus;
  throw ValidationError("parity must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

namespace {

int common_order(const std::vector<Cyclotomic>& values) {
  int order = 1;
  for (const auto& v : values) order = lcm_order(order, v.order());
  return order;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b)) throw ValidationError(std::string(what) + ": group mismatch");
}

// Entrywise combination in the common field of both operands.
template <typename Op>
std::vector<Cyclotomic> combine(const ClassValues& a, const ClassValues& b, Op op) {
  require_same_group(a.group(), b.group(), "class-function arithmetic");
  const int order = lcm_order(a.field_order(), b.field_order());
  std::vector<Cyclotomic> out;
  out.reserve(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    out.push_back(op(a.values()[c].lift(order), b.values()[c].lift(order)));
  }
  return out;
}

std::vector<Cyclotomic> scale(const Cyclotomic& s, const std::vector<Cyclotomic>& values) {
  int order = s.order();
  for (const auto& v : values) order = lcm_order(order, v.order());
  const Cyclotomic factor = s.lift(order);
  std::vector<Cyclotomic> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(factor * v.lift(order));
  return out;
}

}  // namespace

ClassValues::ClassValues(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw ValidationError("class values: null group");
  if (static_cast<int>(values_.size()) != group_->class_count()) {
    throw ValidationError("class values: expected " + std::to_string(group_->class_count()) +
                          " entries, got " + std::to_string(values_.size()));
  }
  const int order = common_order(values_);
  for (auto& v : values_) v = v.lift(order);
}

bool ClassValues::is_tau_symmetric() const {
  for (int c = 0; c < group_->class_count(); ++c) {
    if (!(values_[c] == values_[group_->inverse_class(c)])) return false;
  }
  return true;
}

bool ClassValues::is_tau_antisymmetric() const {
  for (int c = 0; c < group_->class_count(); ++c) {
    if (!(values_[c] + values_[group_->inverse_class(c)]).is_zero()) return false;
  }
  return true;
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const auto n = static_cast<std::size_t>(group->class_count());
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(n, Cyclotomic()));
}

bool ClassFunction::in_class_space(Parity parity) const {
  if (!values_[group_->identity_class()].is_zero()) return false;
  return parity == Parity::Plus ? is_tau_symmetric() : is_tau_antisymmetric();
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  return ClassFunction(a.group(), combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; }));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  return ClassFunction(a.group(), combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; }));
}

ClassFunction operator*(const Cyclotomic& s, const ClassFunction& f) {
  return ClassFunction(f.group(), scale(s, f.values()));
}

RhoVector RhoVector::zero(GroupPtr group) {
  const auto n = static_cast<std::size_t>(group->class_count());
  return RhoVector(std::move(group), std::vector<Cyclotomic>(n, Cyclotomic()));
}

RhoVector operator+(const RhoVector& a, const RhoVector& b) {
  return RhoVector(a.group(), combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; }));
}

RhoVector operator*(const Cyclotomic& s, const RhoVector& r) {
  return RhoVector(r.group(), scale(s, r.values()));
}

VirtualRep::VirtualRep(ClassFunction character, std::optional<std::vector<Cyclotomic>> multiplicities)
    : character_(std::move(character)), multiplicities_(std::move(multiplicities)) {}

VirtualRep VirtualRep::zero(GroupPtr group) {
  if (group->is_cyclic()) {
    return from_cyclic_multiplicities(group, std::vector<Cyclotomic>(group->order(), Cyclotomic()));
  }
  return VirtualRep(ClassFunction::zero(std::move(group)), std::nullopt);
}

VirtualRep VirtualRep::trivial(GroupPtr group) {
  if (group->is_cyclic()) return cyclic_irrep(std::move(group), 0);
  std::vector<Cyclotomic> values(group->class_count(), Cyclotomic::one(1));
  return VirtualRep(ClassFunction(std::move(group), std::move(values)), std::nullopt);
}

VirtualRep VirtualRep::regular(GroupPtr group) {
  if (group->is_cyclic()) {
    return from_cyclic_multiplicities(group, std::vector<Cyclotomic>(group->order(), Cyclotomic::one(1)));
  }
  std::vector<Cyclotomic> values(group->class_count(), Cyclotomic());
  values[group->identity_class()] = Cyclotomic(1, Rational(group->order()));
  return VirtualRep(ClassFunction(std::move(group), std::move(values)), std::nullopt);
}

VirtualRep VirtualRep::cyclic_irrep(GroupPtr group, int a) {
  if (!group->is_cyclic()) throw ValidationError("cyclic_irrep: group is not cyclic");
  const int n = group->order();
  std::vector<Cyclotomic> m(n, Cyclotomic());
  m[((a % n) + n) % n] = Cyclotomic::one(1);
  return from_cyclic_multiplicities(std::move(group), std::move(m));
}

VirtualRep VirtualRep::from_cyclic_multiplicities(GroupPtr group, std::vector<Cyclotomic> multiplicities) {
  if (!group->is_cyclic()) throw ValidationError("multiplicities: group is not cyclic");
  const int n = group->order();
  if (static_cast<int>(multiplicities.size()) != n) {
    throw ValidationError("multiplicities: expected " + std::to_string(n) + " entries");
  }
  const int order = lcm_order(n, common_order(multiplicities));
  for (auto& m : multiplicities) m = m.lift(order);
  std::vector<Cyclotomic> chi(n, Cyclotomic::zero(order));
  for (int a = 0; a < n; ++a) {
    if (multiplicities[a].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      chi[j] += multiplicities[a] * Cyclotomic::root_of_unity(n, static_cast<long>(a) * j).lift(order);
    }
  }
  return VirtualRep(ClassFunction(group, std::move(chi)), std::move(multiplicities));
}

VirtualRep VirtualRep::from_character(ClassFunction character) {
  return VirtualRep(std::move(character), std::nullopt);
}

bool VirtualRep::is_unitary_consistent() const {
  const auto& g = *group();
  for (int c = 0; c < g.class_count(); ++c) {
    if (!(character_[g.inverse_class(c)] == character_[c].conj())) return false;
  }
  return true;
}

namespace {

std::optional<std::vector<Cyclotomic>> combine_multiplicities(const VirtualRep& a, const VirtualRep& b, int sign) {
  if (!a.multiplicities() || !b.multiplicities()) return std::nullopt;
  const auto& ma = *a.multiplicities();
  const auto& mb = *b.multiplicities();
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    Cyclotomic x = ma[i];
    Cyclotomic y = mb[i];
    lift_common(x, y);
    out.push_back(sign > 0 ? x + y : x - y);
  }
  return out;
}

}  // namespace

VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) {
  return VirtualRep(a.character_ + b.character_, combine_multiplicities(a, b, +1));
}

VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) {
  return VirtualRep(a.character_ - b.character_, combine_multiplicities(a, b, -1));
}

VirtualRep operator*(const Cyclotomic& s, const VirtualRep& phi) {
  std::optional<std::vector<Cyclotomic>> m;
  if (phi.multiplicities_) m = scale(s, *phi.multiplicities_);
  return VirtualRep(s * phi.character_, std::move(m));
}

VirtualRep l2_twist(GroupPtr group) {
  const Rational inv_order(1, group->order());
  auto reg = VirtualRep::regular(group);
  return Cyclotomic(1, inv_order) * reg - VirtualRep::trivial(group);
}

std::vector<std::vector<int>> tau_orbits(const FiniteGroup& group) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(group.class_count(), false);
  for (int c = 0; c < group.class_count(); ++c) {
    if (seen[c]) continue;
    const int d = group.inverse_class(c);
    seen[c] = seen[d] = true;
    orbits.push_back(c == d ? std::vector<int>{c} : std::vector<int>{c, d});
  }
  return orbits;
}

std::vector<ClassFunction> class_space_basis(const GroupPtr& group, Parity parity) {
  std::vector<ClassFunction> basis;
  const int id = group->identity_class();
  for (const auto& orbit : tau_orbits(*group)) {
    if (orbit.front() == id) continue;
    if (parity == Parity::Minus && orbit.size() == 1) continue;
    std::vector<Cyclotomic> values(group->class_count(), Cyclotomic());
    values[orbit[0]] = Cyclotomic::one(1);
    if (orbit.size() == 2) {
      values[orbit[1]] = parity == Parity::Plus ? Cyclotomic::one(1) : -Cyclotomic::one(1);
    }
    basis.emplace_back(group, std::move(values));
  }
  return basis;
}

int rank_plus(const FiniteGroup& group, bool include_identity) {
  const int orbits = static_cast<int>(tau_orbits(group).size());
  return include_identity ? orbits : orbits - 1;
}

int rank_minus(const FiniteGroup& group) {
  int count = 0;
  for (const auto& orbit : tau_orbits(group)) count += orbit.size() == 2;
  return count;
}

bool is_in_R0(const VirtualRep& phi, Parity parity) {
  return phi.character().in_class_space(parity);
}

Cyclotomic fourier_eta(const VirtualRep& phi, const RhoVector& rho) {
  require_same_group(phi.group(), rho.group(), "fourier_eta");
  const auto& g = *rho.group();
  if (phi.multiplicities()) {
    // Twisted eta of each irreducible, then the linear combination.
    const int n = g.order();
    const auto& m = *phi.multiplicities();
    const int order = lcm_order(lcm_order(n, rho.field_order()), m.front().order());
    Cyclotomic total = Cyclotomic::zero(order);
    for (int a = 0; a < n; ++a) {
      if (m[a].is_zero()) continue;
      Cyclotomic twisted = Cyclotomic::zero(order);
      for (int j = 0; j < n; ++j) {
        twisted += Cyclotomic::root_of_unity(n, static_cast<long>(a) * j).lift(order) * rho.at_element(j).lift(order);
      }
      total += m[a].lift(order) * twisted;
    }
    return total;
  }
  const auto& chi = phi.character();
  const int order = lcm_order(chi.field_order(), rho.field_order());
  Cyclotomic total = Cyclotomic::zero(order);
  for (int c = 0; c < g.class_count(); ++c) {
    total += Rational(g.class_size(c)) * (chi[c].lift(order) * rho[c].lift(order));
  }
  return total;
}

Cyclotomic pair_phi(const ClassFunction& f, const RhoVector& rho) {
  require_same_group(f.group(), rho.group(), "pair_phi");
  const int order = lcm_order(f.field_order(), rho.field_order());
  Cyclotomic total = Cyclotomic::zero(order);
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[static_cast<int>(c)].is_zero()) continue;
    total += rho[static_cast<int>(c)].lift(order) * f[static_cast<int>(c)].lift(order);
  }
  return total;
}

VirtualRep theta_inverse_cyclic(const ClassFunction& f) {
  const auto& group = f.group();
  if (!group->is_cyclic()) throw ValidationError("theta_inverse_cyclic: group is not cyclic");
  const int n = group->order();
  const int order = lcm_order(n, f.field_order());
  const Rational inv_n(1, n);
  std::vector<Cyclotomic> m;
  m.reserve(n);
  for (int a = 0; a < n; ++a) {
    Cyclotomic sum = Cyclotomic::zero(order);
    for (int j = 0; j < n; ++j) {
      sum += f.at_element(j).lift(order) * Cyclotomic::root_of_unity(n, -static_cast<long>(a) * j).lift(order);
    }
    m.push_back(inv_n * sum);
  }
  return VirtualRep::from_cyclic_multiplicities(group, std::move(m));
}

}  // namespace rhocalc
