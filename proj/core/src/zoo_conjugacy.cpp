#include "rhocalc/zoo_conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <unordered_map>

#include "rhocalc/error.hpp"

namespace rhocalc {

namespace {

void check_radius(int radius, const ConjugacyOptions& options) {
  if (radius < 0) throw ValidationError("radius must be >= 0");
  if (radius > options.radius_cap) {
    throw ValidationError("radius " + std::to_string(radius) + " exceeds the cap " +
                          std::to_string(options.radius_cap));
  }
}

void sort_entries(std::vector<ClassEntry>& entries) {
  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) order.emplace_back(entries[i].element.to_string(), i);
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    const int dx = entries[x.second].distance, dy = entries[y.second].distance;
    return dx != dy ? dx < dy : x.first < y.first;
  });
  std::vector<ClassEntry> sorted;
  sorted.reserve(entries.size());
  for (const auto& [key, i] : order) sorted.push_back(std::move(entries[i]));
  entries = std::move(sorted);
}

ClassBall bfs_class_ball(const ZooPtr& group, const GroupElement& h, int radius, const ConjugacyOptions& options) {
  struct Conjugator {
    GroupElement g;
    GroupElement inverse;
  };
  std::vector<Conjugator> gens;
  for (const auto& g : group->generators()) gens.push_back({g, group->inverse(g)});

  std::unordered_map<std::string, int> seen;
  std::vector<ClassEntry> all{{h, 0}};
  seen.emplace(h.to_string(), 0);
  std::size_t frontier_begin = 0;
  const unsigned jobs = std::max(1u, options.jobs);

  using Candidate = std::pair<std::string, GroupElement>;
  auto expand = [&](std::size_t begin, std::size_t end) {
    std::vector<Candidate> out;
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : gens) {
        GroupElement c = group->multiply(group->multiply(s.g, all[i].element), s.inverse);
        out.emplace_back(c.to_string(), std::move(c));
      }
    }
    return out;
  };

  for (int r = 1; r <= radius; ++r) {
    const std::size_t frontier_end = all.size();
    const std::size_t size = frontier_end - frontier_begin;
    std::vector<std::vector<Candidate>> chunks;
    if (jobs == 1 || size < 64) {
      chunks.push_back(expand(frontier_begin, frontier_end));
    } else {
      std::vector<std::future<std::vector<Candidate>>> pending;
      const std::size_t step = (size + jobs - 1) / jobs;
      for (std::size_t b = frontier_begin; b < frontier_end; b += step) {
        pending.push_back(std::async(std::launch::async, expand, b, std::min(frontier_end, b + step)));
      }
      for (auto& p : pending) chunks.push_back(p.get());
    }
    for (auto& chunk : chunks) {
      for (auto& [key, element] : chunk) {
        if (!seen.emplace(std::move(key), r).second) continue;
        all.push_back({std::move(element), r});
        if (all.size() > options.max_elements) {
          throw ComputationError("class_ball: more than " + std::to_string(options.max_elements) +
                                 " class elements at radius " + std::to_string(r) + " in " + group->describe());
        }
      }
    }
    frontier_begin = frontier_end;
  }
  sort_entries(all);
  return ClassBall{group, h, radius, std::move(all), "bfs"};
}

std::optional<Rational> kernel_value(const GroupElement& element) {
  if (const auto* q = std::get_if<zoo::QElement>(&element.value())) {
    if (q->lambda.empty()) return q->q;
  } else if (const auto* x = std::get_if<zoo::HnnElement>(&element.value())) {
    if (x->syllables.empty() && x->lambda.empty()) return x->head;
  }
  return std::nullopt;
}

std::string sign_key(const Rational& q) {
  const int s = sgn(q);
  return s == 0 ? "1" : (s > 0 ? "Q>0" : "Q<0");
}

}  // namespace

std::vector<std::size_t> ClassBall::cumulative_counts() const {
  std::vector<std::size_t> counts(radius + 1, 0);
  for (const auto& e : elements) ++counts[e.distance];
  for (int r = 1; r <= radius; ++r) counts[r] += counts[r - 1];
  return counts;
}

std::vector<std::pair<SparseVector, int>> kernel_conjugator_ball(int radius) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<SparseVector, int>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(radius); it != cache.end()) return it->second;
  const auto ball = word_ball(ZooGroup::lamplighter(0), radius, 50'000'000);
  std::vector<std::pair<SparseVector, int>> out;
  for (const auto& entry : ball.elements) {
    const auto& x = entry.element.as<zoo::LampElement>();
    if (x.shift == 0) out.emplace_back(x.lamps, entry.length);
  }
  cache.emplace(radius, out);
  return out;
}

std::vector<std::pair<Rational, int>> rational_class_part(const Rational& q, int radius,
                                                          const ConjugacyOptions& options) {
  check_radius(radius, options);
  if (q == 0) return {{Rational(0), 0}};
  std::map<Rational, int> best;
  for (const auto& [lambda, length] : kernel_conjugator_ball(radius)) {
    const Rational value = prime_weight(lambda) * q;
    auto [it, inserted] = best.emplace(value, length);
    if (!inserted) it->second = std::min(it->second, length);
  }
  std::vector<std::pair<Rational, int>> out(best.begin(), best.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

ClassBall class_ball(const ZooPtr& group, const GroupElement& h, int radius, const ConjugacyOptions& options) {
  check_radius(radius, options);
  group->check(h);
  if (group->kind() == ZooGroup::Kind::QSemidirect) {
    const auto q = kernel_value(h);
    if (!q) {
      throw ValidationError("class_ball on qsemi supports kernel elements (q, 0) only, got '" + h.to_string() + "'");
    }
    std::vector<ClassEntry> entries;
    for (const auto& [value, distance] : rational_class_part(*q, radius, options)) {
      entries.push_back({zoo::QElement{value, {}}, distance});
    }
    sort_entries(entries);
    return ClassBall{group, h, radius, std::move(entries), "kernel"};
  }
  return bfs_class_ball(group, h, radius, options);
}

std::optional<bool> conjugate_of_one_test(const GroupElement& element) {
  const auto q = kernel_value(element);
  if (!q) return std::nullopt;
  return sgn(*q) > 0;
}

std::vector<Integer> class_intersect_integers(const ZooPtr& group, int radius, const ConjugacyOptions& options) {
  if (group->kind() != ZooGroup::Kind::QSemidirect && group->kind() != ZooGroup::Kind::HNNShift) {
    throw ValidationError("class_intersect_integers needs qsemi or hnn, got " + group->describe());
  }
  std::vector<Integer> out;
  for (const auto& [value, distance] : rational_class_part(Rational(1), radius, options)) {
    if (is_integer(value)) out.push_back(value.get_num());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(GrowthEstimate::Kind kind) {
  switch (kind) {
    case GrowthEstimate::Kind::Polynomial: return "PolynomialDegreeEstimate";
    case GrowthEstimate::Kind::Exponential: return "ExponentialFlag";
    case GrowthEstimate::Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

struct LineFit {
  double slope = 0;
  double r2 = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx == 0 ? 0 : sxy / sxx;
  fit.r2 = syy == 0 ? 1 : (sxy * sxy) / (sxx * syy);
  return fit;
}

double log_log_slope(const std::vector<std::size_t>& counts, int begin, int end) {
  std::vector<double> x, y;
  for (int r = begin; r <= end; ++r) {
    x.push_back(std::log(static_cast<double>(r)));
    y.push_back(std::log(static_cast<double>(counts[r])));
  }
  return fit_line(x, y).slope;
}

}  // namespace

GrowthEstimate growth_classify(const ZooPtr& group, const GroupElement& h, int max_radius,
                               const ConjugacyOptions& options) {
  check_radius(max_radius, options);
  if (max_radius < 2) throw ValidationError("growth_classify needs max_radius >= 2");
  GrowthEstimate est;
  est.counts = class_ball(group, h, max_radius, options).cumulative_counts();
  est.window_begin = std::max(1, max_radius / 2);
  est.window_end = max_radius;
  const int b = est.window_begin, e = est.window_end;

  std::vector<double> r, log_r, log_c;
  for (int i = b; i <= e; ++i) {
    r.push_back(i);
    log_r.push_back(std::log(static_cast<double>(i)));
    log_c.push_back(std::log(static_cast<double>(est.counts[i])));
  }
  const LineFit power = fit_line(log_r, log_c);
  const LineFit exponential = fit_line(r, log_c);
  est.r2_power = power.r2;
  est.r2_exponential = exponential.r2;
  est.degree = power.slope;
  est.step_ratio = std::exp((log_c.back() - log_c.front()) / (e - b));
  const int mid = (b + e) / 2;
  est.slope_low = log_log_slope(est.counts, b, std::max(mid, b + 1));
  est.slope_high = log_log_slope(est.counts, std::min(mid, e - 1), e);

  if (est.step_ratio >= 1.5) {
    est.kind = GrowthEstimate::Kind::Exponential;
  } else {
    const double lo = std::min({est.degree, est.slope_low, est.slope_high});
    const double hi = std::max({est.degree, est.slope_low, est.slope_high});
    est.kind = hi - lo <= 0.25 ? GrowthEstimate::Kind::Polynomial : GrowthEstimate::Kind::Inconclusive;
  }
  return est;
}

std::string conjugacy_key(const ZooGroup& group, const GroupElement& element) {
  group.check(element);
  switch (group.kind()) {
    case ZooGroup::Kind::Cyclic: return element.to_string();
    case ZooGroup::Kind::Lamplighter: {
      const auto& x = element.as<zoo::LampElement>();
      if (x.shift != 0) {
        throw ValidationError("conjugacy_key: lamplighter classes are decided for shift-0 elements only, got '" +
                              element.to_string() + "'");
      }
      if (x.lamps.empty()) return "1";
      // Conjugation by (g, s) sends (f, 0) to (sigma^s f, 0).
      SparseVector moved;
      const long offset = x.lamps.begin()->first;
      for (const auto& [k, v] : x.lamps) moved.emplace_hint(moved.end(), k - offset, v);
      return "lamps" + format_sparse(moved);
    }
    case ZooGroup::Kind::QSemidirect:
    case ZooGroup::Kind::HNNShift: {
      const auto q = kernel_value(element);
      if (!q) {
        throw ValidationError("conjugacy_key: only Q kernel elements are supported in " + group.describe() +
                              ", got '" + element.to_string() + "'");
      }
      return sign_key(*q);
    }
    case ZooGroup::Kind::Product:
      return "(" + conjugacy_key(*group.left(), element.left()) + "," + conjugacy_key(*group.right(), element.right()) +
             ")";
  }
  return "";
}

std::vector<ZooClassValue> induce_rho_zoo(const RhoVector& rho, const ZooPtr& target,
                                          const GroupElement& generator_image) {
  const auto& sub = *rho.group();
  if (!sub.is_cyclic()) throw ValidationError("induce_rho_zoo: source group must be cyclic");
  target->check(generator_image);
  const long m = sub.order();
  const long order = target->element_order(generator_image);
  if (order != m) {
    throw ValidationError("induce_rho_zoo: image '" + generator_image.to_string() + "' has order " +
                          (order == 0 ? std::string("infinity") : std::to_string(order)) + ", expected " +
                          std::to_string(m) + " for an injective map");
  }
  std::vector<ZooClassValue> out;
  std::map<std::string, std::size_t> slot;
  GroupElement current = target->identity();
  for (long j = 0; j < m; ++j) {
    const std::string key = conjugacy_key(*target, current);
    const Cyclotomic& value = rho.at_element(static_cast<int>(j));
    if (auto it = slot.find(key); it != slot.end()) {
      out[it->second].value = out[it->second].value + value;
    } else {
      slot.emplace(key, out.size());
      out.push_back({key, current, value});
    }
    current = target->multiply(current, generator_image);
  }
  return out;
}

std::string to_tsv(const WordBall& ball) {
  std::string out = "normal_form\tlength\n";
  for (const auto& e : ball.elements) out += e.element.to_string() + "\t" + std::to_string(e.length) + "\n";
  return out;
}

std::string to_tsv(const ClassBall& ball) {
  std::string out = "normal_form\tdistance\n";
  for (const auto& e : ball.elements) out += e.element.to_string() + "\t" + std::to_string(e.distance) + "\n";
  return out;
}

}  // namespace rhocalc
