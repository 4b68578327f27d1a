#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <vector>

namespace rhocalc::quadrature {

using Real = long double;

// 15-point Kronrod extension of the 7-point Gauss rule; nodes are
// nonnegative abscissae on [-1, 1], Gauss nodes at odd indices.
inline constexpr std::array<Real, 8> kKronrodNodes = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr std::array<Real, 8> kKronrodWeights = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr std::array<Real, 4> kGaussWeights = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <typename Value>
struct Result {
  Value value{};
  Real error = 0;
  int intervals = 0;
  long evaluations = 0;
  bool converged = false;
};

template <typename Value>
struct Segment {
  Real a;
  Real b;
  Value value;
  Real error;
  friend bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }
};

/// One Gauss-Kronrod (7, 15) panel on [a, b]; the error estimate is the
/// Kronrod-Gauss difference.
template <typename Value, typename F>
Segment<Value> gauss_kronrod_15(F&& f, Real a, Real b) {
  const Real center = (a + b) / 2;
  const Real half = (b - a) / 2;
  const Value fc = f(center);
  Value kronrod = fc * kKronrodWeights[7];
  Value gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const Real dx = half * kKronrodNodes[i];
    const Value sum = f(center - dx) + f(center + dx);
    kronrod += sum * kKronrodWeights[i];
    if (i % 2 == 1) gauss += sum * kGaussWeights[i / 2];
  }
  return {a, b, kronrod * half, static_cast<Real>(std::abs((kronrod - gauss) * half))};
}

/// Globally adaptive integration of f over [a, b]: the panel with the
/// largest error estimate is bisected until the total error is below
/// max(abs_tol, rel_tol * |value|) or max_intervals panels exist.
template <typename Value, typename F>
Result<Value> integrate(F&& f, Real a, Real b, Real abs_tol, Real rel_tol, int max_intervals) {
  std::priority_queue<Segment<Value>> heap;
  heap.push(gauss_kronrod_15<Value>(f, a, b));
  Result<Value> result;
  result.evaluations = 15;
  Value total = heap.top().value;
  Real error = heap.top().error;
  while (error > std::max(abs_tol, rel_tol * static_cast<Real>(std::abs(total))) &&
         static_cast<int>(heap.size()) < max_intervals) {
    const Segment<Value> worst = heap.top();
    heap.pop();
    const Real mid = (worst.a + worst.b) / 2;
    auto left = gauss_kronrod_15<Value>(f, worst.a, mid);
    auto right = gauss_kronrod_15<Value>(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }
  // Re-sum to shed the drift of the running updates.
  total = Value{};
  error = 0;
  result.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = total;
  result.error = error;
  result.converged = error <= std::max(abs_tol, rel_tol * static_cast<Real>(std::abs(total)));
  return result;
}

/// Integral over [a, inf) through s = a + u / (1 - u), u in [0, 1).
template <typename Value, typename F>
Result<Value> integrate_to_infinity(F&& f, Real a, Real abs_tol, Real rel_tol, int max_intervals) {
  auto mapped = [&f, a](Real u) -> Value {
    const Real one_minus = 1 - u;
    if (one_minus <= 0) return Value{};
    const Real s = a + u / one_minus;
    return f(s) * (1 / (one_minus * one_minus));
  };
  return integrate<Value>(mapped, 0, 1, abs_tol, rel_tol, max_intervals);
}

}  // namespace rhocalc::quadrature
