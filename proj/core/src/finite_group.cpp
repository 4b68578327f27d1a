#include "rhocalc/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "rhocalc/error.hpp"

namespace rhocalc {

FiniteGroup::FiniteGroup(Kind kind, std::vector<std::string> labels, std::vector<int> table)
    : kind_(kind), labels_(std::move(labels)), table_(std::move(table)) {}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<std::string> labels(n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(Kind::Cyclic, std::move(labels), std::move(table)));
  g->derive();
  return g;
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    for (auto i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 6) throw ValidationError("symmetric group supported for 1 <= k <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const int n = static_cast<int>(perms.size());
  std::vector<std::string> labels;
  for (const auto& perm : perms) labels.push_back(cycle_label(perm));
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      const auto it = std::lower_bound(perms.begin(), perms.end(), c);
      table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(it - perms.begin());
    }
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(Kind::Table, std::move(labels), std::move(table)));
  g->name_ = "sym:" + std::to_string(k);
  g->derive();
  return g;
}

GroupPtr FiniteGroup::from_table(std::vector<std::string> labels,
                                 std::vector<std::vector<int>> rows) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw ValidationError("group table: no elements");
  if (static_cast<int>(rows.size()) != n) throw ValidationError("group table: row count != element count");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("group table: row length != element count");
    for (int x : row) {
      if (x < 0 || x >= n) throw ValidationError("group table: entry out of range");
      table.push_back(x);
    }
  }
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw ValidationError("group table: not associative at (" + labels[a] + ", " + labels[b] +
                                ", " + labels[c] + ")");
        }
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw ValidationError("group table: no identity element");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = mul(a, b) == identity && mul(b, a) == identity;
    if (!has_inverse) throw ValidationError("group table: element " + labels[a] + " has no inverse");
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(Kind::Table, std::move(labels), std::move(table)));
  g->derive();
  return g;
}

GroupPtr FiniteGroup::from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
    return from_table(doc.at("elements").get<std::vector<std::string>>(),
                      doc.at("table").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("group table JSON: ") + e.what());
  }
}

GroupPtr FiniteGroup::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  if (colon == std::string_view::npos) throw ValidationError("group spec needs kind:arg, got '" + std::string(spec) + "'");
  int arg = 0;
  try {
    arg = std::stoi(std::string(spec.substr(colon + 1)));
  } catch (const std::exception&) {
    throw ValidationError("group spec: bad argument in '" + std::string(spec) + "'");
  }
  if (kind == "cyclic") return cyclic(arg);
  if (kind == "sym") return symmetric(arg);
  throw ValidationError("unknown group kind '" + std::string(kind) + "'");
}

std::string FiniteGroup::describe() const {
  if (is_cyclic()) return "cyclic:" + std::to_string(order());
  return name_.empty() ? "table:" + std::to_string(order()) : name_;
}

int FiniteGroup::power(int a, long k) const {
  const int m = element_order_[a];
  long e = k % m;
  if (e < 0) e += m;
  int out = identity_;
  for (long i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

std::optional<int> FiniteGroup::find_label(std::string_view label) const {
  for (int a = 0; a < order(); ++a) {
    if (labels_[a] == label) return a;
  }
  return std::nullopt;
}

void FiniteGroup::derive() {
  const int n = order();
  for (int e = 0; e < n; ++e) {
    if (multiply(e, e) == e) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(n, -1);
  element_order_.assign(n, 0);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (multiply(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    int k = 1;
    for (int x = a; x != identity_; x = multiply(x, a)) ++k;
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, element_order_[a]);
  }

  class_of_.assign(n, -1);
  classes_.clear();
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < n; ++g) members.push_back(multiply(multiply(g, a), inverse_[g]));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int c = static_cast<int>(classes_.size());
    for (int m : members) class_of_[m] = c;
    classes_.push_back(std::move(members));
  }
  inverse_class_.resize(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    inverse_class_[c] = class_of_[inverse_[classes_[c].front()]];
  }
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a && b && (a == b || *a == *b);
}

}  // namespace rhocalc
