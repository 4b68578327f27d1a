#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rhocalc {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by a multiplication table, with its conjugacy classes
/// and the inversion involution on classes precomputed.
///
/// Elements are indices 0..order()-1. Classes are numbered in increasing
/// order of their representative, which is the least element index in the
/// class. For cyclic(n) the element k is g^k.
class FiniteGroup {
 public:
  enum class Kind { Cyclic, Table };

  static GroupPtr cyclic(int n);
  /// The symmetric group on k letters, elements in lexicographic order of
  /// one-line notation, labels in 1-based cycle notation ("e", "(12)",
  /// "(123)"). Product is composition: (a*b)(i) = a(b(i)).
  static GroupPtr symmetric(int k);
  /// Validates closure, associativity (O(n^3)), identity and inverses.
  static GroupPtr from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table);
  /// {"elements": [labels], "table": [[index, ...], ...]}
  static GroupPtr from_json(std::string_view json_text);
  /// "cyclic:5", "sym:3"; table groups must be loaded with from_json.
  static GroupPtr parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == Kind::Cyclic; }
  std::string describe() const;

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  /// lcm of element orders; characters take values in Q(zeta_exponent).
  int exponent() const { return exponent_; }
  int power(int a, long k) const;

  const std::string& label(int a) const { return labels_[a]; }
  std::optional<int> find_label(std::string_view label) const;

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_representative(int c) const { return classes_[c].front(); }
  int class_of(int element) const { return class_of_[element]; }
  int identity_class() const { return class_of_[identity_]; }
  /// tau: <h> -> <h^-1>.
  int inverse_class(int c) const { return inverse_class_[c]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  FiniteGroup(Kind kind, std::vector<std::string> labels, std::vector<int> table);
  void derive();

  Kind kind_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> table_;
  int identity_ = 0;
  int exponent_ = 1;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

}  // namespace rhocalc
