#include "rhocalc/group_zoo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rhocalc/error.hpp"

namespace rhocalc {

namespace {

long reduce(long v, long n) { return n == 0 ? v : ((v % n) + n) % n; }

void add_into(SparseVector& target, const SparseVector& v, long n = 0, long sign = 1) {
  for (const auto& [k, x] : v) {
    const long r = reduce(target[k] + sign * x, n);
    if (r == 0) target.erase(k);
    else target[k] = r;
  }
}

// (sigma^s f)(k) = f(k - s).
SparseVector translate(const SparseVector& v, long s) {
  SparseVector out;
  for (const auto& [k, x] : v) out.emplace_hint(out.end(), k + s, x);
  return out;
}

SparseVector negate(const SparseVector& v, long n = 0) {
  SparseVector out;
  for (const auto& [k, x] : v) out.emplace_hint(out.end(), k, reduce(-x, n));
  return out;
}

long parse_long(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("malformed " + std::string(what) + " '" + std::string(text) + "'");
}

std::string power_suffix(long k) { return k == 1 ? "" : "^" + std::to_string(k); }

std::string join_words(const std::vector<std::string>& letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? " " : "") + letters[i];
  return out;
}

std::vector<std::string> letters_of(const GroupElement& e);

void append_lambda(std::vector<std::string>& out, const SparseVector& lambda) {
  for (const auto& [i, v] : lambda) out.push_back("e:" + std::to_string(i) + power_suffix(v));
}

std::vector<std::string> letters_of(const GroupElement& e) {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, zoo::CyclicElement>) {
          if (x.k != 0) out.push_back("g" + power_suffix(x.k));
        } else if constexpr (std::is_same_v<T, zoo::LampElement>) {
          for (const auto& [k, v] : x.lamps) out.push_back("lamp:" + std::to_string(k) + power_suffix(v));
          if (x.shift != 0) out.push_back("t" + power_suffix(x.shift));
        } else if constexpr (std::is_same_v<T, zoo::QElement>) {
          if (x.q != 0) out.push_back("q:" + to_string(x.q));
          append_lambda(out, x.lambda);
        } else if constexpr (std::is_same_v<T, zoo::HnnElement>) {
          if (x.head != 0) out.push_back("q:" + to_string(x.head));
          for (const auto& s : x.syllables) {
            out.push_back("t" + power_suffix(s.power));
            if (s.q != 0) out.push_back("q:" + to_string(s.q));
          }
          append_lambda(out, x.lambda);
        } else {
          for (const auto& l : letters_of(x->left)) out.push_back("x." + l);
          for (const auto& l : letters_of(x->right)) out.push_back("y." + l);
        }
      },
      e.value());
  return out;
}

// Right multiplication helpers on HNN normal forms.
Rational& last_q(zoo::HnnElement& x) { return x.syllables.empty() ? x.head : x.syllables.back().q; }

void hnn_times_gamma(zoo::HnnElement& x, const Rational& q, const SparseVector& lambda) {
  if (q != 0) {
    Rational& target = last_q(x);
    target += prime_weight(x.lambda) * q;
  }
  add_into(x.lambda, lambda);
}

void hnn_times_t(zoo::HnnElement& x, long m) {
  if (m == 0) return;
  // (0, lambda) t^m = t^m (0, alpha^-m lambda).
  x.lambda = shift_index(x.lambda, -m);
  if (!x.syllables.empty() && x.syllables.back().q == 0) {
    x.syllables.back().power += m;
    if (x.syllables.back().power == 0) x.syllables.pop_back();
  } else {
    x.syllables.push_back({m, Rational(0)});
  }
}

}  // namespace

Rational prime_weight(const SparseVector& lambda) {
  Integer num = 1, den = 1;
  for (const auto& [i, v] : lambda) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), nth_prime(static_cast<std::size_t>(i < 0 ? -i : i)),
                  static_cast<unsigned long>(v < 0 ? -v : v));
    if (v > 0) num *= p;
    else den *= p;
  }
  return make_rational(num, den);
}

SparseVector shift_index(const SparseVector& lambda, long power) { return translate(lambda, power); }

std::string format_sparse(const SparseVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, x] : v) {
    out += (first ? "" : ",") + std::to_string(k) + ":" + std::to_string(x);
    first = false;
  }
  return out + "}";
}

GroupElement::GroupElement(GroupElement left, GroupElement right)
    : value_(std::make_shared<const zoo::PairElement>(zoo::PairElement{std::move(left), std::move(right)})) {}

const GroupElement& GroupElement::left() const {
  return std::get<std::shared_ptr<const zoo::PairElement>>(value_)->left;
}

const GroupElement& GroupElement::right() const {
  return std::get<std::shared_ptr<const zoo::PairElement>>(value_)->right;
}

std::string GroupElement::to_string() const { return join_words(letters_of(*this)); }

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* pa = std::get_if<std::shared_ptr<const zoo::PairElement>>(&a.value_)) {
    const auto& pb = std::get<std::shared_ptr<const zoo::PairElement>>(b.value_);
    return (*pa)->left == pb->left && (*pa)->right == pb->right;
  }
  return a.value_ == b.value_;
}

ZooPtr ZooGroup::cyclic(long n) {
  if (n < 1) throw ValidationError("cyclic group order must be >= 1, got " + std::to_string(n));
  return ZooPtr(new ZooGroup(Kind::Cyclic, n));
}

ZooPtr ZooGroup::product(ZooPtr left, ZooPtr right) {
  if (!left || !right) throw ValidationError("product of null groups");
  return ZooPtr(new ZooGroup(Kind::Product, 0, std::move(left), std::move(right)));
}

ZooPtr ZooGroup::lamplighter(long n) {
  if (n < 0 || n == 1) throw ValidationError("lamplighter needs n >= 2 (or 0 for Z lamps), got " + std::to_string(n));
  return ZooPtr(new ZooGroup(Kind::Lamplighter, n));
}

ZooPtr ZooGroup::qsemidirect() { return ZooPtr(new ZooGroup(Kind::QSemidirect, 0)); }

ZooPtr ZooGroup::hnn_shift() { return ZooPtr(new ZooGroup(Kind::HNNShift, 0)); }

ZooPtr ZooGroup::parse(std::string_view text) {
  if (text == "qsemi") return qsemidirect();
  if (text == "hnn") return hnn_shift();
  if (text.starts_with("cyclic:")) return cyclic(parse_long(text.substr(7), "group order"));
  if (text.starts_with("lamplighter:")) return lamplighter(parse_long(text.substr(12), "lamp modulus"));
  if (text.starts_with("product(") && text.ends_with(")")) {
    const auto inner = text.substr(8, text.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) return product(parse(inner.substr(0, i)), parse(inner.substr(i + 1)));
    }
  }
  throw ValidationError("unknown zoo group '" + std::string(text) +
                        "' (expected cyclic:n, lamplighter:n, qsemi, hnn, product(A,B))");
}

std::string ZooGroup::describe() const {
  switch (kind_) {
    case Kind::Cyclic: return "cyclic:" + std::to_string(n_);
    case Kind::Lamplighter: return "lamplighter:" + std::to_string(n_);
    case Kind::QSemidirect: return "qsemi";
    case Kind::HNNShift: return "hnn";
    case Kind::Product: return "product(" + left_->describe() + "," + right_->describe() + ")";
  }
  return "?";
}

bool operator==(const ZooGroup& a, const ZooGroup& b) {
  if (a.kind_ != b.kind_ || a.n_ != b.n_) return false;
  if (a.kind_ != ZooGroup::Kind::Product) return true;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

GroupElement ZooGroup::identity() const {
  switch (kind_) {
    case Kind::Cyclic: return zoo::CyclicElement{};
    case Kind::Lamplighter: return zoo::LampElement{};
    case Kind::QSemidirect: return zoo::QElement{};
    case Kind::HNNShift: return zoo::HnnElement{};
    case Kind::Product: return GroupElement(left_->identity(), right_->identity());
  }
  return {};
}

void ZooGroup::check(const GroupElement& a) const {
  auto fail = [&](const std::string& why) {
    throw ValidationError("element '" + a.to_string() + "' is not in " + describe() + ": " + why);
  };
  switch (kind_) {
    case Kind::Cyclic: {
      const auto* e = std::get_if<zoo::CyclicElement>(&a.value());
      if (!e) fail("wrong element type");
      if (e->k < 0 || e->k >= n_) fail("residue out of range");
      return;
    }
    case Kind::Lamplighter: {
      const auto* e = std::get_if<zoo::LampElement>(&a.value());
      if (!e) fail("wrong element type");
      for (const auto& [k, v] : e->lamps) {
        if (v == 0 || (n_ != 0 && (v < 0 || v >= n_))) fail("lamp value not reduced");
      }
      return;
    }
    case Kind::QSemidirect:
      if (!std::holds_alternative<zoo::QElement>(a.value())) fail("wrong element type");
      return;
    case Kind::HNNShift: {
      const auto* e = std::get_if<zoo::HnnElement>(&a.value());
      if (!e) fail("wrong element type");
      for (std::size_t i = 0; i < e->syllables.size(); ++i) {
        if (e->syllables[i].power == 0) fail("zero t-power");
        if (i + 1 < e->syllables.size() && e->syllables[i].q == 0) fail("internal syllable without Q part");
      }
      return;
    }
    case Kind::Product:
      if (!std::holds_alternative<std::shared_ptr<const zoo::PairElement>>(a.value())) fail("wrong element type");
      left_->check(a.left());
      right_->check(a.right());
      return;
  }
}

GroupElement ZooGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::Cyclic:
      return zoo::CyclicElement{(a.as<zoo::CyclicElement>().k + b.as<zoo::CyclicElement>().k) % n_};
    case Kind::Lamplighter: {
      const auto& x = a.as<zoo::LampElement>();
      const auto& y = b.as<zoo::LampElement>();
      zoo::LampElement out{x.lamps, x.shift + y.shift};
      add_into(out.lamps, translate(y.lamps, x.shift), n_);
      return out;
    }
    case Kind::QSemidirect: {
      const auto& x = a.as<zoo::QElement>();
      const auto& y = b.as<zoo::QElement>();
      zoo::QElement out{x.q + prime_weight(x.lambda) * y.q, x.lambda};
      add_into(out.lambda, y.lambda);
      return out;
    }
    case Kind::HNNShift: {
      zoo::HnnElement out = a.as<zoo::HnnElement>();
      const auto& y = b.as<zoo::HnnElement>();
      hnn_times_gamma(out, y.head, {});
      for (const auto& s : y.syllables) {
        hnn_times_t(out, s.power);
        hnn_times_gamma(out, s.q, {});
      }
      hnn_times_gamma(out, Rational(0), y.lambda);
      return out;
    }
    case Kind::Product:
      return GroupElement(left_->multiply(a.left(), b.left()), right_->multiply(a.right(), b.right()));
  }
  return {};
}

GroupElement ZooGroup::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Cyclic: return zoo::CyclicElement{(n_ - a.as<zoo::CyclicElement>().k) % n_};
    case Kind::Lamplighter: {
      const auto& x = a.as<zoo::LampElement>();
      return zoo::LampElement{negate(translate(x.lamps, -x.shift), n_), -x.shift};
    }
    case Kind::QSemidirect: {
      const auto& x = a.as<zoo::QElement>();
      return zoo::QElement{Rational(-x.q / prime_weight(x.lambda)), negate(x.lambda)};
    }
    case Kind::HNNShift: {
      const auto& x = a.as<zoo::HnnElement>();
      zoo::HnnElement out;
      hnn_times_gamma(out, Rational(0), negate(x.lambda));
      for (std::size_t i = x.syllables.size(); i-- > 0;) {
        hnn_times_gamma(out, Rational(-x.syllables[i].q), {});
        hnn_times_t(out, -x.syllables[i].power);
      }
      hnn_times_gamma(out, Rational(-x.head), {});
      return out;
    }
    case Kind::Product: return GroupElement(left_->inverse(a.left()), right_->inverse(a.right()));
  }
  return {};
}

GroupElement ZooGroup::power(const GroupElement& a, long k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  GroupElement result = identity();
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

std::vector<GroupElement> ZooGroup::generators() const {
  std::vector<GroupElement> out;
  auto add_pair = [&](const GroupElement& g) {
    out.push_back(g);
    const auto inv = inverse(g);
    if (!(inv == g)) out.push_back(inv);
  };
  switch (kind_) {
    case Kind::Cyclic:
      if (n_ > 1) add_pair(zoo::CyclicElement{1});
      break;
    case Kind::Lamplighter:
      add_pair(zoo::LampElement{{{0, 1}}, 0});
      add_pair(zoo::LampElement{{}, 1});
      break;
    case Kind::QSemidirect:
      add_pair(zoo::QElement{Rational(1), {}});
      add_pair(zoo::QElement{Rational(0), {{0, 1}}});
      break;
    case Kind::HNNShift:
      add_pair(zoo::HnnElement{Rational(1), {}, {}});
      add_pair(zoo::HnnElement{Rational(0), {}, {{0, 1}}});
      add_pair(zoo::HnnElement{Rational(0), {{1, Rational(0)}}, {}});
      break;
    case Kind::Product:
      for (const auto& g : left_->generators()) out.emplace_back(g, right_->identity());
      for (const auto& g : right_->generators()) out.emplace_back(left_->identity(), g);
      break;
  }
  return out;
}

std::vector<std::string> ZooGroup::generator_names() const {
  std::vector<std::string> out;
  for (const auto& g : generators()) out.push_back(g.to_string());
  return out;
}

GroupElement ZooGroup::parse_letter(std::string_view token) const {
  if (token.empty()) throw ValidationError("empty letter");
  if (kind_ == Kind::Product) {
    if (token.starts_with("x.")) return GroupElement(left_->parse_letter(token.substr(2)), right_->identity());
    if (token.starts_with("y.")) return GroupElement(left_->identity(), right_->parse_letter(token.substr(2)));
    throw ValidationError("product letters need an x. or y. prefix: '" + std::string(token) + "'");
  }
  long exponent = 1;
  std::string_view base = token;
  if (const auto caret = token.rfind('^'); caret != std::string_view::npos) {
    exponent = parse_long(token.substr(caret + 1), "exponent");
    base = token.substr(0, caret);
  }
  auto bad = [&]() -> GroupElement {
    throw ValidationError("letter '" + std::string(token) + "' is not in the alphabet of " + describe());
  };
  GroupElement letter;
  switch (kind_) {
    case Kind::Cyclic:
      if (base != "g") return bad();
      letter = zoo::CyclicElement{n_ > 1 ? 1 : 0};
      break;
    case Kind::Lamplighter:
      if (base == "t") letter = zoo::LampElement{{}, 1};
      else if (base == "a") letter = zoo::LampElement{{{0, 1}}, 0};
      else if (base.starts_with("lamp:")) letter = zoo::LampElement{{{parse_long(base.substr(5), "lamp index"), 1}}, 0};
      else return bad();
      break;
    case Kind::QSemidirect:
    case Kind::HNNShift: {
      const bool hnn = kind_ == Kind::HNNShift;
      Rational q = 0;
      SparseVector lambda;
      if (base.starts_with("q:")) q = parse_rational(base.substr(2));
      else if (base.starts_with("e:")) lambda[parse_long(base.substr(2), "e index")] = 1;
      else if (base == "t" && hnn) letter = zoo::HnnElement{Rational(0), {{1, Rational(0)}}, {}};
      else return bad();
      if (base != "t") {
        if (hnn) letter = zoo::HnnElement{q, {}, lambda};
        else letter = zoo::QElement{q, lambda};
      }
      break;
    }
    case Kind::Product: break;
  }
  return power(letter, exponent);
}

GroupElement ZooGroup::normalize(const std::vector<std::string>& letters) const {
  GroupElement out = identity();
  for (const auto& l : letters) {
    if (l == "1") continue;
    out = multiply(out, parse_letter(l));
  }
  return out;
}

GroupElement ZooGroup::normalize(std::string_view word) const {
  std::vector<std::string> letters;
  std::string current;
  for (char c : word) {
    if (c == ' ' || c == '*' || c == '\t' || c == '\n') {
      if (!current.empty()) letters.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) letters.push_back(std::move(current));
  return normalize(letters);
}

long ZooGroup::element_order(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Cyclic: {
      const long k = a.as<zoo::CyclicElement>().k;
      return n_ / std::gcd(k, n_);
    }
    case Kind::Lamplighter: {
      const auto& x = a.as<zoo::LampElement>();
      if (x.shift != 0) return 0;
      long order = 1;
      for (const auto& [k, v] : x.lamps) {
        if (n_ == 0) return 0;
        order = std::lcm(order, n_ / std::gcd(v, n_));
      }
      return order;
    }
    case Kind::QSemidirect:
    case Kind::HNNShift: return is_identity(a) ? 1 : 0;
    case Kind::Product: {
      const long l = left_->element_order(a.left());
      const long r = right_->element_order(a.right());
      return (l == 0 || r == 0) ? 0 : std::lcm(l, r);
    }
  }
  return 0;
}

namespace {

bool in_A(const zoo::QElement& a) { return a.q == 0; }

zoo::QElement gamma_multiply(const zoo::QElement& x, const zoo::QElement& y) {
  zoo::QElement out{x.q + prime_weight(x.lambda) * y.q, x.lambda};
  add_into(out.lambda, y.lambda);
  return out;
}

bool is_trivial(const zoo::QElement& a) { return a.q == 0 && a.lambda.empty(); }

}  // namespace

bool has_pinch(const HnnWord& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!word[i].is_stable) continue;
    std::size_t j = i + 1;
    if (j < word.size() && !word[j].is_stable) {
      if (!in_A(word[j].base)) continue;
      ++j;
    }
    if (j < word.size() && word[j].is_stable && word[j].stable_sign == -word[i].stable_sign) return true;
  }
  return false;
}

BrittonResult britton_reduce(HnnWord word) {
  BrittonResult result;
  HnnWord& stack = result.reduced;
  auto push_base = [&](const zoo::QElement& a) {
    if (!stack.empty() && !stack.back().is_stable) {
      stack.back().base = gamma_multiply(stack.back().base, a);
      if (is_trivial(stack.back().base)) stack.pop_back();
    } else if (!is_trivial(a)) {
      stack.push_back({false, 1, a});
    }
  };
  for (auto& letter : word) {
    if (!letter.is_stable) {
      push_base(letter.base);
      continue;
    }
    const int e = letter.stable_sign;
    if (!stack.empty() && stack.back().is_stable && stack.back().stable_sign == -e) {
      // t^-e t^e
      stack.pop_back();
      ++result.pinches;
      continue;
    }
    if (stack.size() >= 2 && !stack.back().is_stable && in_A(stack.back().base) &&
        stack[stack.size() - 2].is_stable && stack[stack.size() - 2].stable_sign == -e) {
      // t^-e a t^e = alpha^-e(a)
      zoo::QElement shifted{Rational(0), shift_index(stack.back().base.lambda, -e)};
      stack.pop_back();
      stack.pop_back();
      ++result.pinches;
      push_base(shifted);
      continue;
    }
    stack.push_back({true, e, {}});
  }
  return result;
}

GroupElement evaluate_word(const ZooGroup& hnn, const HnnWord& word) {
  if (hnn.kind() != ZooGroup::Kind::HNNShift) throw ValidationError("evaluate_word needs the HNN group");
  zoo::HnnElement out;
  for (const auto& letter : word) {
    if (letter.is_stable) hnn_times_t(out, letter.stable_sign);
    else {
      hnn_times_gamma(out, letter.base.q, {});
      hnn_times_gamma(out, Rational(0), letter.base.lambda);
    }
  }
  return out;
}

std::vector<std::size_t> WordBall::cumulative_counts() const {
  std::vector<std::size_t> counts(radius + 1, 0);
  for (const auto& e : elements) ++counts[e.length];
  for (int r = 1; r <= radius; ++r) counts[r] += counts[r - 1];
  return counts;
}

WordBall word_ball(const ZooPtr& group, int radius, std::size_t max_elements) {
  if (radius < 0) throw ValidationError("word_ball: radius must be >= 0");
  const bool restrict_to_gamma = group->kind() == ZooGroup::Kind::QSemidirect;
  const ZooPtr ambient = restrict_to_gamma ? ZooGroup::hnn_shift() : group;
  const auto gens = ambient->generators();

  std::unordered_map<std::string, int> seen;
  std::vector<BallEntry> all{{ambient->identity(), 0}};
  seen.emplace(all.front().element.to_string(), 0);
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t frontier_end = all.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        GroupElement next = ambient->multiply(all[i].element, g);
        if (seen.emplace(next.to_string(), r).second) {
          all.push_back({std::move(next), r});
          if (all.size() > max_elements) {
            throw ComputationError("word_ball: more than " + std::to_string(max_elements) + " elements at radius " +
                                   std::to_string(r));
          }
        }
      }
    }
    frontier_begin = frontier_end;
  }

  WordBall ball{group, radius, {}};
  for (auto& entry : all) {
    if (restrict_to_gamma) {
      const auto& h = entry.element.as<zoo::HnnElement>();
      if (!h.syllables.empty()) continue;
      ball.elements.push_back({zoo::QElement{h.head, h.lambda}, entry.length});
    } else {
      ball.elements.push_back(std::move(entry));
    }
  }
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) order.emplace_back(ball.elements[i].element.to_string(), i);
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    const int lx = ball.elements[x.second].length, ly = ball.elements[y.second].length;
    return lx != ly ? lx < ly : x.first < y.first;
  });
  std::vector<BallEntry> sorted;
  sorted.reserve(order.size());
  for (const auto& [key, i] : order) sorted.push_back(std::move(ball.elements[i]));
  ball.elements = std::move(sorted);
  return ball;
}

}  // namespace rhocalc
