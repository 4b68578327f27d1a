#include "rhocalc_tools/serialize.hpp"

#include <cstdio>

namespace rhocalc::tools {

std::string float_string(long double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*Le", kFloatDigits - 1, x);
  return buffer;
}

Json to_json(const Rational& q) {
  Json out;
  out["exact"] = to_string(q);
  out["float"] = float_string(static_cast<long double>(q.get_d()));
  return out;
}

Json to_json(const Cyclotomic& c) {
  Json out;
  out["order"] = c.order();
  Json coefficients = Json::array();
  for (const auto& a : c.coefficients()) coefficients.push_back(to_string(a));
  out["coefficients"] = std::move(coefficients);
  out["exact"] = c.to_string();
  if (c.is_rational()) out["rational"] = to_string(c.rational_value());
  const auto z = c.embed(96);
  out["float"] = {{"re", z.real.to_string(kFloatDigits)}, {"im", z.imag.to_string(kFloatDigits)}};
  return out;
}

Json to_json(const PiMonomial& m) {
  Json out;
  out["rational_coeff"] = to_string(m.coeff);
  out["pi_power"] = m.pi_power;
  out["i_power"] = m.i_power;
  out["exact"] = m.to_string();
  out["float"] = complex_json(m.to_complex());
  return out;
}

Json complex_json(const Complex& z) { return {{"re", float_string(z.real())}, {"im", float_string(z.imag())}}; }

Json class_table(const FiniteGroup& group) {
  Json rows = Json::array();
  for (int c = 0; c < group.class_count(); ++c) {
    Json members = Json::array();
    for (int e : group.class_members(c)) members.push_back(group.label(e));
    rows.push_back({{"class", c},
                    {"representative", group.label(group.class_representative(c))},
                    {"size", group.class_size(c)},
                    {"inverse_class", group.inverse_class(c)},
                    {"members", std::move(members)}});
  }
  return rows;
}

Json class_values_json(const ClassValues& values) {
  const auto& group = *values.group();
  Json rows = Json::array();
  for (int c = 0; c < group.class_count(); ++c) {
    rows.push_back({{"class", c},
                    {"representative", group.label(group.class_representative(c))},
                    {"size", group.class_size(c)},
                    {"value", to_json(values[c])}});
  }
  return rows;
}

Json to_json(const LensSpace& lens) {
  return {{"name", lens.describe()}, {"n", lens.n()}, {"weights", lens.weights()}, {"dimension", lens.dimension()}};
}

}  // namespace rhocalc::tools
