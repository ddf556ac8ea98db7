#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace cpforce {

enum class TailPolicy { ExponentialBound, PowerBound };

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  TailPolicy tail_policy = TailPolicy::ExponentialBound;
  // exponential-bound: e-folding length of the integrand in the integration variable
  double decay_length = 1.0;
  // power-bound: |f(x)| <= power_bound / x^2 for large x
  double power_bound = 1.0;
  double epsilon_split = 1.0;

  void validate() const;
  QuadratureSpec tightened(double factor) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

template <std::size_t N>
struct QuadratureResultN {
  std::array<double, N> value{};
  std::array<double, N> error_estimate{};
  std::size_t evaluations = 0;
  bool converged = true;

  QuadratureResultN& operator+=(const QuadratureResultN& o) {
    for (std::size_t i = 0; i < N; ++i) {
      value[i] += o.value[i];
      error_estimate[i] += o.error_estimate[i];
    }
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
};

struct SingularEndpoints {
  bool left = false;
  bool right = false;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule on [-1,1];
// index 0 is the centre, odd indices are shared with the Gauss rule.
struct KronrodRule {
  std::array<double, 11> x;
  std::array<double, 11> wk;
  std::array<double, 5> wg;
};
const KronrodRule& kronrod21();

class NeumaierSum {
public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <std::size_t N>
struct Panel {
  double a, b;
  std::array<double, N> value;
  std::array<double, N> error;
  bool splittable;
};

template <std::size_t N, class F>
Panel<N> gk21(F& f, double a, double b) {
  const auto& r = kronrod21();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, N> k{}, g{}, labs{}, asc{};
  std::array<std::array<double, N>, 21> fv;
  fv[0] = f(c);
  for (int i = 1; i < 11; ++i) {
    fv[2 * i - 1] = f(c - h * r.x[i]);
    fv[2 * i] = f(c + h * r.x[i]);
  }
  for (std::size_t n = 0; n < N; ++n) {
    double kv = fv[0][n] * r.wk[0];
    double gv = 0.0;
    double la = std::abs(fv[0][n]) * r.wk[0];
    for (int i = 1; i < 11; ++i) {
      const double s = fv[2 * i - 1][n] + fv[2 * i][n];
      kv += r.wk[i] * s;
      la += r.wk[i] * (std::abs(fv[2 * i - 1][n]) + std::abs(fv[2 * i][n]));
      if (i % 2 == 1) gv += r.wg[i / 2] * s;
    }
    const double mean = 0.5 * kv;
    double as = r.wk[0] * std::abs(fv[0][n] - mean);
    for (int i = 1; i < 11; ++i)
      as += r.wk[i] * (std::abs(fv[2 * i - 1][n] - mean) + std::abs(fv[2 * i][n] - mean));
    k[n] = kv * h;
    g[n] = gv * h;
    labs[n] = la * std::abs(h);
    asc[n] = as * std::abs(h);
  }
  Panel<N> p{a, b, k, {}, true};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t n = 0; n < N; ++n) {
    double err = std::abs(k[n] - g[n]);
    if (asc[n] != 0.0 && err != 0.0)
      err = asc[n] * std::min(1.0, std::pow(200.0 * err / asc[n], 1.5));
    err = std::max(err, 50.0 * eps * labs[n]);
    if (!std::isfinite(k[n])) err = kInfinity;
    p.error[n] = err;
  }
  return p;
}

// Globally adaptive bisection on a finite interval with initial breakpoints.
template <std::size_t N, class F>
QuadratureResultN<N> adapt(F& f, std::vector<double> pts, const QuadratureSpec& spec) {
  QuadratureResultN<N> res;
  std::vector<Panel<N>> panels;
  panels.reserve(static_cast<std::size_t>(spec.max_subdivisions) + pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    panels.push_back(gk21<N>(f, pts[i], pts[i + 1]));
    res.evaluations += 21;
  }
  auto totals = [&](std::array<double, N>& v, std::array<double, N>& e) {
    v.fill(0.0);
    e.fill(0.0);
    for (const auto& p : panels)
      for (std::size_t n = 0; n < N; ++n) {
        v[n] += p.value[n];
        e[n] += p.error[n];
      }
  };
  std::array<double, N> v{}, e{};
  int splits = 0;
  while (true) {
    totals(v, e);
    std::array<double, N> tol{};
    bool done = true;
    for (std::size_t n = 0; n < N; ++n) {
      tol[n] = std::max(spec.rel_tol * std::abs(v[n]), spec.abs_tol);
      if (!(e[n] <= tol[n])) done = false;
    }
    if (done) break;
    if (splits >= spec.max_subdivisions) {
      res.converged = false;
      break;
    }
    std::size_t worst = panels.size();
    double worst_key = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!panels[i].splittable) continue;
      double key = 0.0;
      for (std::size_t n = 0; n < N; ++n) key = std::max(key, panels[i].error[n] / tol[n]);
      if (key > worst_key) {
        worst_key = key;
        worst = i;
      }
    }
    if (worst == panels.size()) {
      res.converged = false;
      break;
    }
    const Panel<N> p = panels[worst];
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b) ||
        (p.b - p.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(p.a), std::abs(p.b))) {
      panels[worst].splittable = false;
      continue;
    }
    panels[worst] = gk21<N>(f, p.a, m);
    panels.push_back(gk21<N>(f, m, p.b));
    res.evaluations += 42;
    ++splits;
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel<N>& l, const Panel<N>& r) { return l.a < r.a; });
  for (std::size_t n = 0; n < N; ++n) {
    NeumaierSum s, es;
    for (const auto& p : panels) {
      s.add(p.value[n]);
      es.add(p.error[n]);
    }
    res.value[n] = s.value();
    res.error_estimate[n] = es.value();
    if (!std::isfinite(res.value[n])) res.converged = false;
  }
  return res;
}

template <std::size_t N, class F>
double truncation_point(F& f, double a, const QuadratureSpec& spec, std::size_t& evals) {
  const double L = spec.decay_length > 0.0 ? spec.decay_length : 1.0;
  if (spec.tail_policy == TailPolicy::PowerBound) {
    const double xt = 10.0 * spec.power_bound / spec.abs_tol;
    return std::max(xt, a + 16.0 * L);
  }
  std::array<double, N> peak{};
  double step = L;
  for (int k = 0; k < 80; ++k, step *= 2.0) {
    const double t = a + step;
    const auto fv = f(t);
    ++evals;
    bool small = true;
    for (std::size_t n = 0; n < N; ++n) {
      peak[n] = std::max(peak[n], std::abs(fv[n]));
      const double thr = 0.1 * std::max(spec.abs_tol, spec.rel_tol * peak[n] * L);
      if (!(std::abs(fv[n]) * L < thr)) small = false;
    }
    if (small && k >= 3) return t;
  }
  return a + step;
}

inline std::vector<double> tail_breakpoints(double a, double xt, const QuadratureSpec& spec) {
  const double L = spec.decay_length > 0.0 ? spec.decay_length : 1.0;
  const double ratio = spec.tail_policy == TailPolicy::PowerBound ? 4.0 : 2.0;
  std::vector<double> pts{a};
  double step = L;
  while (a + step < xt) {
    pts.push_back(a + step);
    step *= ratio;
  }
  pts.push_back(xt);
  return pts;
}

template <std::size_t N, class F>
QuadratureResultN<N> integrate_regular(F& f, double a, double b, const QuadratureSpec& spec,
                                       const std::vector<double>& breakpoints) {
  if (std::isinf(b)) {
    std::size_t evals = 0;
    const double xt = truncation_point<N>(f, a, spec, evals);
    auto pts = tail_breakpoints(a, xt, spec);
    for (double p : breakpoints)
      if (p > a && p < xt) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto r = adapt<N>(f, pts, spec);
    r.evaluations += evals;
    return r;
  }
  std::vector<double> pts{a};
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return adapt<N>(f, pts, spec);
}

} // namespace detail

// Vector-valued adaptive integral of f: double -> std::array<double,N> over [a,b],
// b may be +infinity. Singular endpoints may diverge like (distance)^(-1/2).
template <std::size_t N, class F>
QuadratureResultN<N> integrate_adaptive_n(F&& f, double a, double b, const QuadratureSpec& spec,
                                          SingularEndpoints sing = {},
                                          const std::vector<double>& breakpoints = {}) {
  using Arr = std::array<double, N>;
  if (a == b) return {};
  if (b < a) {
    auto r = integrate_adaptive_n<N>(f, b, a, spec, SingularEndpoints{sing.right, sing.left},
                                     breakpoints);
    for (auto& v : r.value) v = -v;
    return r;
  }
  auto call = [&f](double x) -> Arr { return f(x); };

  if (std::isinf(b)) {
    if (!sing.left) return detail::integrate_regular<N>(call, a, b, spec, breakpoints);
    const double L = spec.decay_length > 0.0 ? spec.decay_length : 1.0;
    const double m = a + L;
    auto head = integrate_adaptive_n<N>(f, a, m, spec, SingularEndpoints{true, false}, breakpoints);
    std::vector<double> rest;
    for (double p : breakpoints)
      if (p > m) rest.push_back(p);
    auto tail = detail::integrate_regular<N>(call, m, b, spec, rest);
    head += tail;
    return head;
  }

  if (sing.left && sing.right) {
    const double m = 0.5 * (a + b);
    auto l = integrate_adaptive_n<N>(f, a, m, spec, SingularEndpoints{true, false}, breakpoints);
    auto r = integrate_adaptive_n<N>(f, m, b, spec, SingularEndpoints{false, true}, breakpoints);
    l += r;
    return l;
  }
  if (sing.left) {
    auto g = [&f, a](double s) -> Arr {
      Arr v{};
      if (s == 0.0) return v;
      v = f(a + s * s);
      for (auto& e : v) e *= 2.0 * s;
      return v;
    };
    std::vector<double> sb;
    for (double p : breakpoints)
      if (p > a && p < b) sb.push_back(std::sqrt(p - a));
    return detail::integrate_regular<N>(g, 0.0, std::sqrt(b - a), spec, sb);
  }
  if (sing.right) {
    auto g = [&f, b](double s) -> Arr {
      Arr v{};
      if (s == 0.0) return v;
      v = f(b - s * s);
      for (auto& e : v) e *= 2.0 * s;
      return v;
    };
    std::vector<double> sb;
    for (double p : breakpoints)
      if (p > a && p < b) sb.push_back(std::sqrt(b - p));
    return detail::integrate_regular<N>(g, 0.0, std::sqrt(b - a), spec, sb);
  }
  return detail::integrate_regular<N>(call, a, b, spec, breakpoints);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec, SingularEndpoints sing = {},
                                    const std::vector<double>& breakpoints = {});

// (omega/pi) int_0^inf F(w) / (omega^2 + w^2) dw, split at w = epsilon*omega
// and mapped onto two finite intervals.
template <std::size_t N, class F>
QuadratureResultN<N> modular_split_n(F&& Fn, double omega, const QuadratureSpec& spec) {
  using Arr = std::array<double, N>;
  const double eps = spec.epsilon_split;
  auto lower = [&](double t) -> Arr {
    Arr v = Fn(omega * t);
    const double w = 1.0 / (1.0 + t * t);
    for (auto& e : v) e *= w;
    return v;
  };
  auto upper = [&](double t) -> Arr {
    Arr v{};
    if (t == 0.0) return v;
    v = Fn(omega / t);
    const double w = 1.0 / (1.0 + t * t);
    for (auto& e : v) e *= w;
    return v;
  };
  auto r = integrate_adaptive_n<N>(lower, 0.0, eps, spec);
  r += integrate_adaptive_n<N>(upper, 0.0, 1.0 / eps, spec);
  for (std::size_t n = 0; n < N; ++n) {
    r.value[n] /= std::numbers::pi;
    r.error_estimate[n] /= std::numbers::pi;
  }
  return r;
}

QuadratureResult modular_split(const std::function<double(double)>& F, double omega,
                               const QuadratureSpec& spec);

// Throws NumericError when r did not converge.
void require_converged(bool converged, double achieved, double requested, const std::string& what);

} // namespace cpforce
