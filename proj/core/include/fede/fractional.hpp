#pragma once

#include <vector>

#include "fede/piecewise.hpp"

namespace fede {

/// coef * (x - knot)_+^exponent
struct ProfileTerm {
  double coef;
  double knot;
  double exponent;
};

/// Left Riemann-Liouville fractional integral applied to the truncated power
/// (xi - shift)_+^k, evaluated at x:
///   Gamma(k+1)/Gamma(k+1+beta) * (x - shift)_+^{k+beta}.
double frac_integral_monomial(double beta, int k, double shift, double x);

/// Exact closed form of g = 0D_x^{-beta} f for a compactly supported piecewise
/// polynomial f. Near the support g is the truncated-power sum; far to the
/// right it switches to a moment expansion, which keeps the evaluation stable
/// where the truncated powers cancel catastrophically.
class FracProfile {
public:
  FracProfile(double beta, const PiecewisePolynomial& f);

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  double beta() const { return beta_; }
  const std::vector<ProfileTerm>& terms() const { return terms_; }
  double series_threshold() const { return series_from_; }

  double eval_terms(double x) const;   // raw truncated-power sum
  double eval_series(double x) const;  // moment expansion, x > series_threshold()

private:
  double beta_ = 0.0;
  std::vector<ProfileTerm> terms_;
  // moment expansion about the support midpoint
  double center_ = 0.0;
  double series_from_ = 0.0;
  std::vector<double> weights_;  // g(x) ~ sum_m weights_[m] (x-center)^{beta-1-m}
};

FracProfile frac_integral_piecewise(double beta, const PiecewisePolynomial& f);

/// Exact integral of g * p over the support of p. Cells beyond the profile's
/// stable-series threshold are integrated with Gauss-Legendre on the analytic
/// series form; everything else is closed-form truncated-power integration.
double integrate_profile(const FracProfile& g, const PiecewisePolynomial& p);

/// Reference Gauss-Legendre rule on [0,1] (nodes, weights).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_01(int points);

}  // namespace fede
