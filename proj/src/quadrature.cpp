#include "cpforce/quadrature.hpp"

#include "cpforce/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cpforce {

namespace detail {

const KronrodRule& kronrod21() {
  static const KronrodRule rule = [] {
    using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
    using G = boost::math::quadrature::gauss<double, 10>;
    KronrodRule r{};
    for (int i = 0; i < 11; ++i) {
      r.x[i] = GK::abscissa()[i];
      r.wk[i] = GK::weights()[i];
    }
    for (int i = 0; i < 5; ++i) r.wg[i] = G::weights()[i];
    return r;
  }();
  return rule;
}

} // namespace detail

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions < 10) throw DomainError("max_subdivisions must be at least 10");
  if (!(epsilon_split > 0.0)) throw DomainError("epsilon_split must be positive");
  if (!(decay_length > 0.0)) throw DomainError("decay_length must be positive");
  if (!(power_bound > 0.0)) throw DomainError("power_bound must be positive");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec s = *this;
  s.rel_tol *= factor;
  s.abs_tol *= factor;
  return s;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec, SingularEndpoints sing,
                                    const std::vector<double>& breakpoints) {
  auto r = integrate_adaptive_n<1>([&f](double x) { return std::array<double, 1>{f(x)}; }, a, b,
                                   spec, sing, breakpoints);
  return {r.value[0], r.error_estimate[0], r.evaluations, r.converged};
}

QuadratureResult modular_split(const std::function<double(double)>& F, double omega,
                               const QuadratureSpec& spec) {
  auto r = modular_split_n<1>([&F](double w) { return std::array<double, 1>{F(w)}; }, omega, spec);
  return {r.value[0], r.error_estimate[0], r.evaluations, r.converged};
}

void require_converged(bool converged, double achieved, double requested, const std::string& what) {
  if (!converged) throw NumericError(what + " did not converge", achieved, requested);
}

} // namespace cpforce
