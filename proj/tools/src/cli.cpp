#include "rhocalc_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rhocalc/error.hpp"
#include "rhocalc/rho_calculus.hpp"
#include "rhocalc/zoo_conjugacy.hpp"
#include "rhocalc_tools/acceptance.hpp"
#include "rhocalc_tools/serialize.hpp"

namespace rhocalc::tools {

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::string> split(std::string_view text, char sep = ',') {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string item;
  for (char c : text) {
    if (c == sep) {
      out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

long to_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("malformed " + what + " '" + text + "'");
}

std::vector<int> int_list(std::string_view text, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(text)) out.push_back(static_cast<int>(to_long(item, what)));
  return out;
}

std::vector<Rational> rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& item : split(text)) out.push_back(parse_rational(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

GroupPtr load_group(const std::string& spec, const std::string& table_file) {
  if (!table_file.empty()) return FiniteGroup::from_json(read_file(table_file));
  return FiniteGroup::parse(spec);
}

std::string compact(const Json& v);

struct Context {
  Json results = Json::object();
  Json diagnostics = Json::array();
  std::string tsv;
  std::string pretty;
  int exit_code = kOk;
  unsigned jobs = 1;
  std::istream* in = nullptr;

  void warn(const std::string& message) { diagnostics.push_back({{"level", "warning"}, {"message", message}}); }
};

// ---------------------------------------------------------------- chars

struct CharsOptions {
  std::string group = "cyclic:5";
  std::string table;
  std::string basis = "both";
  bool include_identity = false;
};

Json basis_json(const std::vector<ClassFunction>& basis) {
  Json out = Json::array();
  for (const auto& f : basis) {
    Json values = Json::array();
    for (const auto& v : f.values()) values.push_back(v.to_string());
    out.push_back(std::move(values));
  }
  return out;
}

void run_chars(const CharsOptions& o, Context& ctx) {
  const auto group = load_group(o.group, o.table);
  if (o.basis != "plus" && o.basis != "minus" && o.basis != "both") {
    throw ValidationError("--basis must be plus, minus or both");
  }
  auto& r = ctx.results;
  r["group"] = group->describe();
  r["order"] = group->order();
  r["classes"] = class_table(*group);
  Json orbits = Json::array();
  for (const auto& orbit : tau_orbits(*group)) orbits.push_back(orbit);
  r["tau_orbits"] = orbits;
  if (o.basis != "minus") r["basis_plus"] = basis_json(class_space_basis(group, Parity::Plus));
  if (o.basis != "plus") r["basis_minus"] = basis_json(class_space_basis(group, Parity::Minus));
  r["rank_plus"] = rank_plus(*group, o.include_identity);
  r["rank_plus_includes_identity"] = o.include_identity;
  r["rank_minus"] = rank_minus(*group);
}

// ---------------------------------------------------------------- induce

struct InduceOptions {
  std::string sub = "cyclic:3";
  std::string sub_table;
  std::string target;
  std::string target_table;
  std::string zoo;
  std::string image;
  std::string map;
  std::string rho;
  std::string lens;
};

RhoVector input_rho(const GroupPtr& sub, const InduceOptions& o) {
  if (!o.rho.empty() && !o.lens.empty()) throw ValidationError("give either --rho or --lens, not both");
  if (!o.lens.empty()) {
    if (!sub->is_cyclic()) throw ValidationError("--lens needs a cyclic source group");
    return lens_delocalized_rho(LensSpace(sub->order(), int_list(o.lens, "weight")));
  }
  if (o.rho.empty()) throw ValidationError("induce needs --rho (one value per source class) or --lens weights");
  const auto values = rational_list(o.rho);
  if (static_cast<int>(values.size()) != sub->class_count()) {
    throw ValidationError("--rho has " + std::to_string(values.size()) + " values, source group has " +
                          std::to_string(sub->class_count()) + " classes");
  }
  std::vector<Cyclotomic> cyclo;
  for (const auto& q : values) cyclo.push_back(Cyclotomic(1, q));
  return RhoVector(sub, std::move(cyclo));
}

void run_induce(const InduceOptions& o, Context& ctx) {
  const auto sub = load_group(o.sub, o.sub_table);
  const auto rho = input_rho(sub, o);
  auto& r = ctx.results;
  r["source"] = sub->describe();
  r["rho"] = class_values_json(rho);
  if (!o.zoo.empty()) {
    const auto target = ZooGroup::parse(o.zoo);
    if (o.image.empty()) throw ValidationError("--image (a word) is required for zoo targets");
    const auto image = target->normalize(o.image);
    Json classes = Json::array();
    for (const auto& c : induce_rho_zoo(rho, target, image)) {
      classes.push_back({{"class_key", c.class_key}, {"representative", c.representative.to_string()}, {"value", to_json(c.value)}});
    }
    r["target"] = target->describe();
    r["generator_image"] = image.to_string();
    r["classes"] = classes;
    r["unlisted_classes"] = "0";
    return;
  }
  if (o.target.empty() && o.target_table.empty()) throw ValidationError("induce needs --target, --target-table or --zoo");
  const auto target = load_group(o.target, o.target_table);
  auto label_index = [&](const std::string& label) {
    const auto idx = target->find_label(label);
    if (!idx) throw ValidationError("no element labelled '" + label + "' in " + target->describe());
    return *idx;
  };
  std::optional<SubgroupInclusion> j;
  if (!o.map.empty()) {
    std::vector<int> image;
    for (const auto& label : split(o.map)) image.push_back(label_index(label));
    j.emplace(sub, target, std::move(image));
  } else if (!o.image.empty()) {
    j.emplace(SubgroupInclusion::from_cyclic_generator(sub, target, label_index(o.image)));
  } else {
    throw ValidationError("induce needs --image (generator image label) or --map (image of every element)");
  }
  const auto induced = induce_rho(*j, rho);
  // Every source class lands in exactly one target class, so class sums agree.
  auto class_sum = [](const ClassValues& v) {
    Cyclotomic total = Cyclotomic::zero(v.field_order());
    for (const auto& c : v.values()) total = total + c;
    return total;
  };
  r["target"] = target->describe();
  r["image"] = [&] {
    Json image = Json::array();
    for (int e = 0; e < sub->order(); ++e) image.push_back(target->label((*j)(e)));
    return image;
  }();
  r["classes"] = class_values_json(induced);
  r["class_sum_preserved"] = class_sum(rho) == class_sum(induced);
}

// ---------------------------------------------------------------- lens

struct LensOptions {
  int n = 3;
  std::string weights = "1,1";
  std::string defect_scale = "1";
  std::string phi;
  bool search = false;
  bool rank = false;
  std::string parity = "plus";
  std::string f;
  std::string k = "2,4";
  std::size_t budget = 0;
};

ClassFunction class_function_from(const GroupPtr& group, std::string_view text) {
  std::vector<Cyclotomic> values;
  for (const auto& q : rational_list(text)) values.push_back(Cyclotomic(1, q));
  if (static_cast<int>(values.size()) != group->class_count()) {
    throw ValidationError("class function needs " + std::to_string(group->class_count()) + " values");
  }
  return ClassFunction(group, std::move(values));
}

void run_lens(const LensOptions& o, Context& ctx) {
  auto& r = ctx.results;
  const auto group = FiniteGroup::cyclic(o.n);
  if (o.search && o.rank) throw ValidationError("--search and --rank are exclusive");
  if (o.search) {
    if (o.f.empty()) throw ValidationError("--search needs --f (class function values)");
    const Parity parity = parse_parity(o.parity);
    const auto f = class_function_from(group, o.f);
    const std::size_t budget = o.budget ? o.budget : static_cast<std::size_t>(std::pow(4.0, o.n));
    const auto outcome = search_nonvanishing(o.n, parity, f, int_list(o.k, "k"), budget, ctx.jobs);
    r["parity"] = to_string(parity);
    r["budget"] = budget;
    r["candidates_tried"] = outcome.candidates_tried;
    if (outcome.witness) {
      r["status"] = "Found";
      r["lens"] = to_json(outcome.witness->lens);
      r["pairing"] = to_json(outcome.witness->value);
    } else {
      r["status"] = "NotFound";
      ctx.warn("no nonvanishing lens space within the budget");
    }
    return;
  }
  if (o.rank) {
    const Parity parity = parse_parity(o.parity);
    Json rows = Json::array();
    for (int k : int_list(o.k, "k")) {
      const auto family = canonical_lens_family(o.n, k);
      rows.push_back({{"k", k}, {"family_size", family.size()}, {"span_rank", span_rank(o.n, parity, k, family)}});
    }
    r["parity"] = to_string(parity);
    r["ranks"] = rows;
    r["rank_plus"] = rank_plus(*group);
    r["rank_minus"] = rank_minus(*group);
    return;
  }
  const LensSpace lens(o.n, int_list(o.weights, "weight"));
  const Rational scale = parse_rational(o.defect_scale);
  const auto rho = lens_delocalized_rho(lens, scale);
  r["lens"] = to_json(lens);
  r["defect_scale"] = to_string(scale);
  r["expected_parity"] = to_string(lens.parity());
  r["rho"] = class_values_json(rho);
  r["tau_symmetric"] = rho.is_tau_symmetric();
  r["tau_antisymmetric"] = rho.is_tau_antisymmetric();
  const bool all_real = std::all_of(rho.values().begin(), rho.values().end(), [](const Cyclotomic& c) { return c.is_real(); });
  const bool all_imag =
      std::all_of(rho.values().begin(), rho.values().end(), [](const Cyclotomic& c) { return c.is_purely_imaginary(); });
  r["values_real"] = all_real;
  r["values_purely_imaginary"] = all_imag;
  const auto rho2 = rho2_from_delocalized(rho);
  r["rho2"] = to_json(rho2);
  if (rho2.is_rational()) {
    r["rho2_in_Z[1/n]"] = ring_contains(ring_from_orders({static_cast<std::uint64_t>(o.n)}), rho2.rational_value());
  }
  if (!o.phi.empty()) {
    const auto m = rational_list(o.phi);
    if (static_cast<int>(m.size()) != o.n) throw ValidationError("--phi needs n multiplicities");
    std::vector<Cyclotomic> cm;
    for (const auto& q : m) cm.push_back(Cyclotomic(o.n, q));
    const auto phi = VirtualRep::from_cyclic_multiplicities(group, cm);
    r["twisted"] = {{"value", to_json(lens_twisted_rho(lens, phi, scale))},
                    {"in_R0_plus", is_in_R0(phi, Parity::Plus)},
                    {"in_R0_minus", is_in_R0(phi, Parity::Minus)}};
  }
}

// ---------------------------------------------------------------- circle

struct CircleOptions {
  std::string subset = "finite:1,2,3";
  std::size_t terms = 100;
  double tol = 1e-12;
  double abs_tol = 1e-14;
  double t_split = 1.0;
  int max_subdivisions = 400;
  int precision_bits = 64;
  bool audit = false;
  std::string ahat;
};

Json verdict_json(const Verdict& v) {
  Json out = {{"kind", to_string(v.kind)}, {"certificate", v.certificate}};
  out["exact_value"] = v.exact ? to_json(*v.exact) : Json();
  out["value"] = v.value ? complex_json(*v.value) : Json();
  return out;
}

void run_circle(const CircleOptions& o, Context& ctx) {
  QuadratureConfig cfg;
  cfg.rel_tol = o.tol;
  cfg.abs_tol = o.abs_tol;
  cfg.t_split = o.t_split;
  cfg.max_subdivisions = o.max_subdivisions;
  cfg.precision_bits = o.precision_bits;
  cfg.validate();
  const auto family = SubsetFamily::parse(o.subset);
  const auto report = eta_partial(family, o.terms, cfg, o.audit, ctx.jobs);
  auto& r = ctx.results;
  r["subset"] = family.describe();
  r["terms_requested"] = o.terms;
  r["terms_used"] = report.terms_used;
  r["mode"] = o.audit ? "audit-quadrature" : "closed-form";
  r["verdict"] = verdict_json(report.verdict);
  Json partial = Json::array();
  for (const auto& p : report.partial_sums) partial.push_back({{"terms", p.terms}, {"value", complex_json(p.value)}});
  r["partial_sums"] = partial;
  if (report.exact_sum) r["exact_sum"] = to_json(*report.exact_sum);
  if (o.audit) {
    long double worst = 0;
    for (auto e : report.per_term_errors) worst = std::max(worst, e);
    r["max_term_error_estimate"] = float_string(worst);
  }
  if (!o.ahat.empty()) {
    const Rational ahat = parse_rational(o.ahat);
    r["ahat"] = to_string(ahat);
    r["product_verdict"] = verdict_json(product_with_ahat(report.verdict, ahat));
  }
  if (report.verdict.kind == Verdict::Kind::Unknown) ctx.warn("convergence Unknown: " + report.verdict.certificate);
}

// ---------------------------------------------------------------- growth

struct GrowthOptions {
  std::string group = "lamplighter:2";
  std::string element;
  int max_radius = 10;
  int cap = 12;
  std::size_t max_elements = 2'000'000;
};

Json estimate_json(const GrowthEstimate& e) {
  return {{"kind", to_string(e.kind)},
          {"degree", float_string(e.degree)},
          {"slope_low", float_string(e.slope_low)},
          {"slope_high", float_string(e.slope_high)},
          {"step_ratio", float_string(e.step_ratio)},
          {"r2_power", float_string(e.r2_power)},
          {"r2_exponential", float_string(e.r2_exponential)},
          {"window", {e.window_begin, e.window_end}},
          {"counts", e.counts}};
}

void run_growth(const GrowthOptions& o, Context& ctx) {
  const auto group = ZooGroup::parse(o.group);
  const auto h = o.element.empty() ? group->generators().at(0) : group->normalize(o.element);
  ConjugacyOptions options{o.cap, o.max_elements, ctx.jobs};
  const auto estimate = growth_classify(group, h, o.max_radius, options);
  auto& r = ctx.results;
  r["group"] = group->describe();
  r["element"] = h.to_string();
  r["estimate"] = estimate_json(estimate);
  if (estimate.kind == GrowthEstimate::Kind::Inconclusive) ctx.warn("growth estimate inconclusive at this radius");
  ctx.tsv = to_tsv(class_ball(group, h, o.max_radius, options));
}

// ---------------------------------------------------------------- zoo

struct ZooOptions {
  std::string group = "hnn";
  std::string script = "-";
  int cap = 12;
  std::size_t max_elements = 2'000'000;
};

std::pair<std::string, std::string> split_pair(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ValidationError("expected 'A ; B', got '" + text + "'");
  return {text.substr(0, semi), text.substr(semi + 1)};
}

std::string word_text(const HnnWord& word) {
  std::vector<std::string> letters;
  for (const auto& l : word) letters.push_back(l.is_stable ? (l.stable_sign > 0 ? "t" : "t^-1") : GroupElement(l.base).to_string());
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? " | " : "") + letters[i];
  return out;
}

HnnWord parse_raw_word(const std::string& text) {
  const auto gamma = ZooGroup::qsemidirect();
  HnnWord word;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "t" || token == "t^1") word.push_back({true, 1, {}});
    else if (token == "t^-1") word.push_back({true, -1, {}});
    else word.push_back({false, 1, gamma->parse_letter(token).as<zoo::QElement>()});
  }
  return word;
}

Json run_zoo_line(const ZooGroup& g, const ZooPtr& group, const std::string& line, const ConjugacyOptions& options,
                  Context& ctx) {
  std::istringstream in(line);
  std::string op;
  in >> op;
  std::string rest;
  std::getline(in, rest);
  static const std::set<std::string> ops = {"normalize", "inverse", "multiply", "conjugate", "order", "key",
                                            "one-test", "class-ball", "ball", "integers", "britton"};
  if (!ops.count(op)) {
    rest = line;
    op = "normalize";
  }
  Json out = {{"op", op}, {"input", rest}};
  auto radius_and_word = [&](std::string& word) {
    std::istringstream rin(rest);
    int radius = -1;
    if (!(rin >> radius)) throw ValidationError(op + " needs a radius");
    std::getline(rin, word);
    return radius;
  };
  if (op == "normalize") {
    const auto e = g.normalize(rest);
    out["result"] = e.to_string();
    out["order"] = g.element_order(e) == 0 ? Json("infinite") : Json(g.element_order(e));
  } else if (op == "inverse") {
    out["result"] = g.inverse(g.normalize(rest)).to_string();
  } else if (op == "multiply") {
    const auto [a, b] = split_pair(rest);
    out["result"] = g.multiply(g.normalize(a), g.normalize(b)).to_string();
  } else if (op == "conjugate") {
    const auto [w, h] = split_pair(rest);
    out["result"] = g.conjugate(g.normalize(w), g.normalize(h)).to_string();
  } else if (op == "order") {
    const long order = g.element_order(g.normalize(rest));
    out["result"] = order == 0 ? Json("infinite") : Json(order);
  } else if (op == "key") {
    out["result"] = conjugacy_key(g, g.normalize(rest));
  } else if (op == "one-test") {
    const auto test = conjugate_of_one_test(g.normalize(rest));
    out["result"] = test ? Json(*test) : Json("not-applicable");
  } else if (op == "class-ball") {
    std::string word;
    const int radius = radius_and_word(word);
    const auto ball = class_ball(group, g.normalize(word), radius, options);
    Json elements = Json::array();
    for (const auto& e : ball.elements) elements.push_back({{"element", e.element.to_string()}, {"distance", e.distance}});
    out["method"] = ball.method;
    out["counts"] = ball.cumulative_counts();
    out["result"] = elements;
    ctx.tsv = to_tsv(ball);
  } else if (op == "ball") {
    std::string unused;
    const int radius = radius_and_word(unused);
    if (radius > options.radius_cap) throw ValidationError("radius exceeds the cap " + std::to_string(options.radius_cap));
    const auto ball = word_ball(group, radius, options.max_elements);
    out["result"] = ball.cumulative_counts();
    ctx.tsv = to_tsv(ball);
  } else if (op == "integers") {
    std::string unused;
    const int radius = radius_and_word(unused);
    Json ints = Json::array();
    for (const auto& z : class_intersect_integers(group, radius, options)) ints.push_back(z.get_str());
    out["result"] = ints;
  } else if (op == "britton") {
    const auto word = parse_raw_word(rest);
    const auto reduced = britton_reduce(word);
    out["result"] = word_text(reduced.reduced);
    out["pinches"] = reduced.pinches;
  }
  return out;
}

void run_zoo(const ZooOptions& o, Context& ctx) {
  const auto group = ZooGroup::parse(o.group);
  ConjugacyOptions options{o.cap, o.max_elements, ctx.jobs};
  std::ifstream file;
  std::istream* in = ctx.in;
  if (o.script != "-") {
    file.open(o.script);
    if (!file) throw ValidationError("cannot read '" + o.script + "'");
    in = &file;
  }
  Json lines = Json::array();
  std::string line;
  int number = 0;
  while (std::getline(*in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line.erase(line.find_last_not_of(" \t\r") + 1);
    try {
      Json entry = run_zoo_line(*group, group, line.substr(first), options, ctx);
      entry["line"] = number;
      lines.push_back(std::move(entry));
    } catch (const ValidationError& e) {
      lines.push_back({{"line", number}, {"input", line}, {"error", e.what()}});
      ctx.diagnostics.push_back({{"level", "error"}, {"message", "line " + std::to_string(number) + ": " + e.what()}});
      ctx.exit_code = std::max<int>(ctx.exit_code, kValidation);
    }
  }
  ctx.results["group"] = group->describe();
  ctx.results["generators"] = group->generator_names();
  ctx.results["lines"] = lines;
  ctx.pretty = "  group: " + group->describe() + "\n";
  for (const auto& entry : lines) {
    ctx.pretty += "  [" + std::to_string(entry["line"].get<int>()) + "] ";
    if (entry.contains("error")) {
      ctx.pretty += "error: " + entry["error"].get<std::string>() + "\n";
      continue;
    }
    ctx.pretty += entry["op"].get<std::string>() + " " + entry["input"].get<std::string>() + " => ";
    if (entry["op"] == "class-ball") {
      ctx.pretty += std::to_string(entry["result"].size()) + " elements, counts " + compact(entry["counts"]);
    } else if (entry["op"] == "ball") {
      ctx.pretty += "counts " + compact(entry["result"]);
    } else {
      ctx.pretty += compact(entry["result"]);
    }
    if (entry.contains("order")) ctx.pretty += "  (order " + compact(entry["order"]) + ")";
    if (entry.contains("pinches")) ctx.pretty += "  (" + compact(entry["pinches"]) + " pinches)";
    ctx.pretty += "\n";
  }
}

// ---------------------------------------------------------------- ringcheck

struct RingOptions {
  std::string orders = "3,5";
  bool invert_two = false;
  std::string values;
};

void run_ringcheck(const RingOptions& o, Context& ctx) {
  std::vector<ElementOrder> orders;
  Json echo = Json::array();
  for (const auto& item : split(o.orders)) {
    if (item == "inf" || item == "infinity") {
      orders.push_back(std::nullopt);
      echo.push_back("inf");
    } else {
      const long v = to_long(item, "order");
      if (v < 1) throw ValidationError("element orders must be >= 1 or inf");
      orders.push_back(static_cast<std::uint64_t>(v));
      echo.push_back(v);
    }
  }
  const auto ring = ring_from_orders(orders, o.invert_two);
  std::uint64_t product = 1;
  for (auto p : ring.prime_support()) product *= p;
  auto& r = ctx.results;
  r["orders"] = echo;
  r["invert_two"] = o.invert_two;
  r["prime_support"] = ring.prime_support();
  r["ring"] = product == 1 ? "Z" : "Z[1/" + std::to_string(product) + "]";
  Json members = Json::array();
  for (const auto& q : rational_list(o.values)) members.push_back({{"value", to_string(q)}, {"contains", ring.contains(q)}});
  r["membership"] = members;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string criteria = "1-11";
};

std::vector<int> criteria_ids(const std::string& text) {
  std::vector<int> ids;
  for (const auto& item : split(text)) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      ids.push_back(static_cast<int>(to_long(item, "criterion")));
    } else {
      const long a = to_long(item.substr(0, dash), "criterion"), b = to_long(item.substr(dash + 1), "criterion");
      for (long i = a; i <= b; ++i) ids.push_back(static_cast<int>(i));
    }
  }
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw ValidationError("criterion " + std::to_string(id) + " out of range 1..11");
  }
  return ids;
}

std::vector<CriterionResult> run_verify(const VerifyOptions& o, Context& ctx) {
  const auto results = run_criteria(criteria_ids(o.criteria), ctx.jobs);
  ctx.results = criteria_json(results);
  for (const auto& r : results) {
    ctx.pretty += summary_line(r) + "\n";
    if (!r.passed) {
      ctx.diagnostics.push_back({{"level", "error"}, {"message", "criterion " + std::to_string(r.id) + " failed"}});
      ctx.exit_code = kComputation;
    }
  }
  return results;
}

// ---------------------------------------------------------------- output

bool is_exact_value(const Json& v) { return v.is_object() && v.contains("exact") && v["exact"].is_string(); }

bool is_complex_value(const Json& v) { return v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im"); }

std::string compact(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    if (is_exact_value(v)) return v["exact"].get<std::string>();
    if (is_complex_value(v)) return v["re"].get<std::string>() + " + " + v["im"].get<std::string>() + "*I";
    std::string out = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      out += (first ? "" : ", ") + k + "=" + compact(x);
      first = false;
    }
    return out + "}";
  }
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + compact(v[i]);
    return out + "]";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object() && !is_exact_value(x); });
}

std::vector<std::string> table_columns(const Json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [k, x] : row.items())
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
  return columns;
}

void render_pretty(std::ostream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (is_table(v)) {
    out << pad << key << ":\n";
    const auto columns = table_columns(v);
    std::vector<std::size_t> width;
    for (const auto& c : columns) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        line.push_back(row.contains(columns[i]) ? compact(row[columns[i]]) : "");
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      out << pad << "  ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << line[i];
        if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
      }
      out << "\n";
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
  } else if (v.is_object() && !is_exact_value(v) && !is_complex_value(v)) {
    out << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render_pretty(out, k, x, indent + 2);
  } else {
    out << pad << key << ": " << compact(v) << "\n";
  }
}

std::string generic_tsv(const Json& v) {
  if (is_table(v)) {
    const auto columns = table_columns(v);
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "\t" : "") + columns[i];
    out += "\n";
    for (const auto& row : v) {
      for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "\t" : "") + (row.contains(columns[i]) ? compact(row[columns[i]]) : "");
      out += "\n";
    }
    return out;
  }
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (auto s = generic_tsv(x); !s.empty()) return s;
    }
  }
  return "";
}

Json echo_inputs(const CLI::App& sub) {
  Json inputs = Json::object();
  for (const auto* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "h") continue;
    if (opt->get_expected_min() == 0) {
      inputs[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& results = opt->results();
      std::string joined;
      for (std::size_t i = 0; i < results.size(); ++i) joined += (i ? "," : "") + results[i];
      inputs[name] = joined;
    } else {
      inputs[name] = opt->get_default_str();
    }
  }
  return inputs;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buffer;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"rhocalc: exact and numerical eta/rho-invariant computations", "rhocalc"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value configuration file; command-line flags override it");

  std::string format = "pretty";
  unsigned jobs = 1;
  bool meta = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--jobs", jobs, "Worker cap for parallel sections")->check(CLI::Range(1u, 256u));
  app.add_flag("--meta", meta, "Append a metadata block with timestamps");

  CharsOptions chars;
  auto* c = app.add_subcommand("chars", "Conjugacy classes, tau-orbits, Class+-_0 bases and ranks");
  c->add_option("--group", chars.group, "cyclic:n or sym:k");
  c->add_option("--table", chars.table, "JSON group table file {elements, table}");
  c->add_option("--basis", chars.basis, "plus, minus or both");
  c->add_flag("--include-identity", chars.include_identity, "Count the identity orbit in rank_plus");

  InduceOptions induce;
  auto* i = app.add_subcommand("induce", "Induce rho data along an injective homomorphism");
  i->add_option("--sub", induce.sub, "Source group (cyclic:n or sym:k)");
  i->add_option("--sub-table", induce.sub_table, "Source group table file");
  i->add_option("--target", induce.target, "Finite target group (cyclic:n or sym:k)");
  i->add_option("--target-table", induce.target_table, "Finite target group table file");
  i->add_option("--zoo", induce.zoo, "Zoo target group (lamplighter:n, product(A,B), ...)");
  i->add_option("--image", induce.image, "Image of the generator: element label, or a word for zoo targets");
  i->add_option("--map", induce.map, "Images of all source elements, comma-separated labels")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  i->add_option("--rho", induce.rho, "Source rho values per class, comma-separated rationals")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  i->add_option("--lens", induce.lens, "Use lens rho data L(n; weights) on the cyclic source")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);

  LensOptions lens;
  auto* l = app.add_subcommand("lens", "Lens-space rho tables, nonvanishing search and span ranks");
  l->add_option("--n", lens.n, "Odd n >= 3");
  l->add_option("--weights", lens.weights, "Rotation weights, comma-separated units mod n")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  l->add_option("--defect-scale", lens.defect_scale, "Overall normalization constant");
  l->add_option("--phi", lens.phi, "Virtual representation as n multiplicities")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  l->add_flag("--search", lens.search, "Search for a lens space pairing nonzero with --f");
  l->add_flag("--rank", lens.rank, "Span rank of the canonical lens families for each --k");
  l->add_option("--parity", lens.parity, "plus or minus");
  l->add_option("--f", lens.f, "Class function values (n of them)")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  l->add_option("--k", lens.k, "Numbers of weights to search, comma-separated")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  l->add_option("--budget", lens.budget, "Candidate budget for --search (0 means 4^n)");

  CircleOptions circle;
  auto* ci = app.add_subcommand("circle", "Delocalized eta over subsets X of the Z-covering of the circle");
  ci->add_option("--subset", circle.subset, "finite:1,2,3 | ap:a,d | geo:b | primes | squares")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  ci->add_option("--terms", circle.terms, "Number of terms")->check(CLI::PositiveNumber);
  ci->add_option("--tol", circle.tol, "Relative quadrature tolerance");
  ci->add_option("--abs-tol", circle.abs_tol, "Absolute quadrature tolerance");
  ci->add_option("--t-split", circle.t_split, "Boundary between the small-t and large-t panels");
  ci->add_option("--max-subdivisions", circle.max_subdivisions, "Panel limit per quadrature");
  ci->add_option("--precision-bits", circle.precision_bits, "Working precision (53..64)");
  ci->add_flag("--audit", circle.audit, "Integrate every term numerically");
  ci->add_option("--ahat", circle.ahat, "A-hat multiplier for M x S^1");

  GrowthOptions growth;
  auto* g = app.add_subcommand("growth", "Conjugacy-class growth estimate in a zoo group");
  g->add_option("--group", growth.group, "Zoo group");
  g->add_option("--element", growth.element, "Element word (default: first generator)");
  g->add_option("--max-radius", growth.max_radius, "Largest radius");
  g->add_option("--cap", growth.cap, "Radius cap");
  g->add_option("--max-elements", growth.max_elements, "Element budget for breadth-first search");

  ZooOptions zoo;
  auto* z = app.add_subcommand("zoo", "Run element scripts (one operation per line) in a zoo group");
  z->add_option("--group", zoo.group, "Zoo group");
  z->add_option("--script", zoo.script, "Script file, - for stdin");
  z->add_option("--cap", zoo.cap, "Radius cap");
  z->add_option("--max-elements", zoo.max_elements, "Element budget for breadth-first search");

  RingOptions ring;
  auto* rc = app.add_subcommand("ringcheck", "Membership in Z[1/N] generated by element orders");
  rc->add_option("--orders", ring.orders, "Element orders, comma-separated (inf allowed)")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
  rc->add_flag("--invert-two", ring.invert_two, "Also invert 2");
  rc->add_option("--values", ring.values, "Rationals to test, comma-separated")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run the acceptance suites");
  v->add_option("--criteria", verify.criteria, "Criteria to run, e.g. 1-11 or 2,5")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Context ctx;
  ctx.jobs = jobs;
  ctx.in = &in;
  std::vector<CriterionResult> verify_results;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string name = chosen->get_name();
    if (name == "chars") run_chars(chars, ctx);
    else if (name == "induce") run_induce(induce, ctx);
    else if (name == "lens") run_lens(lens, ctx);
    else if (name == "circle") run_circle(circle, ctx);
    else if (name == "growth") run_growth(growth, ctx);
    else if (name == "zoo") run_zoo(zoo, ctx);
    else if (name == "ringcheck") run_ringcheck(ring, ctx);
    else if (name == "verify") verify_results = run_verify(verify, ctx);
  } catch (const ComputationError& e) {
    ctx.results = nullptr;
    ctx.diagnostics.push_back({{"level", "error"}, {"message", e.what()}});
    ctx.exit_code = kComputation;
  } catch (const std::invalid_argument& e) {
    ctx.results = nullptr;
    ctx.diagnostics.push_back({{"level", "error"}, {"message", e.what()}});
    ctx.exit_code = kValidation;
  } catch (const std::exception& e) {
    ctx.results = nullptr;
    ctx.diagnostics.push_back({{"level", "error"}, {"message", e.what()}});
    ctx.exit_code = kComputation;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["command"] = chosen->get_name();
  report["inputs"] = echo_inputs(*chosen);
  report["results"] = ctx.results;
  report["diagnostics"] = ctx.diagnostics;
  report["exit_code"] = ctx.exit_code;
  if (meta) {
    Json m = {{"version", kVersion}, {"timestamp", utc_timestamp()}, {"elapsed_seconds", elapsed}, {"jobs", jobs}};
    if (!verify_results.empty()) m["criteria"] = criteria_json(verify_results, true)["criteria"];
    report["meta"] = m;
  }

  for (const auto& d : ctx.diagnostics) err << "rhocalc: " << d["level"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else if (format == "tsv") {
    out << (ctx.tsv.empty() ? generic_tsv(ctx.results) : ctx.tsv);
  } else {
    out << "rhocalc " << chosen->get_name() << "\n";
    if (!ctx.pretty.empty()) out << ctx.pretty;
    else if (ctx.results.is_object())
      for (const auto& [k, x] : ctx.results.items()) render_pretty(out, k, x, 2);
    if (meta) render_pretty(out, "meta", report["meta"], 2);
  }
  return ctx.exit_code;
}

}  // namespace rhocalc::tools
