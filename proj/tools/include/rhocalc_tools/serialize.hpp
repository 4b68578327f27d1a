#pragma once

#include <nlohmann/json.hpp>

#include "rhocalc/characters.hpp"
#include "rhocalc/circle_heat.hpp"
#include "rhocalc/cyclotomic.hpp"
#include "rhocalc/group_zoo.hpp"
#include "rhocalc/lens.hpp"
#include "rhocalc/rational.hpp"

namespace rhocalc::tools {

/// Insertion-ordered, so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

/// Significant digits of the float companions of exact values.
inline constexpr int kFloatDigits = 20;

Json to_json(const Rational& q);
/// {order, coefficients, exact, float: {re, im}}; adds "rational" when the
/// value lies in Q.
Json to_json(const Cyclotomic& c);
/// {rational_coeff, pi_power, i_power, exact, float}.
Json to_json(const PiMonomial& m);
Json complex_json(const Complex& z);
std::string float_string(long double x);

Json class_table(const FiniteGroup& group);
/// Per-class rows {class, representative, size, value}.
Json class_values_json(const ClassValues& values);
Json to_json(const LensSpace& lens);

}  // namespace rhocalc::tools
