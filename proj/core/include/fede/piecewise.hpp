#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fede {

/// Compactly supported piecewise polynomial on a strictly increasing knot
/// grid. On interval [breakpoints[i], breakpoints[i+1]) the function equals
/// the local monomial polynomial coeffs[i] evaluated in t = x - breakpoints[i].
/// Outside [breakpoints.front(), breakpoints.back()] the function is zero.
class PiecewisePolynomial {
public:
  PiecewisePolynomial() = default;
  PiecewisePolynomial(std::vector<double> breakpoints,
                      std::vector<std::vector<double>> coeffs);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;

  /// Classical per-interval derivative (jump information is discarded;
  /// see dirac_jumps for the distributional part).
  PiecewisePolynomial derivative() const;
  PiecewisePolynomial derivative(int k) const;

  /// Antiderivative F with F(support_left) = 0, continuous across knots.
  PiecewisePolynomial antiderivative() const;

  /// g(x) = amplitude * f(lambda * x - shift), lambda > 0.
  PiecewisePolynomial scale_shift(double amplitude, double lambda,
                                  double shift) const;

  /// g(x) = f(c - x).
  PiecewisePolynomial reflect(double c) const;

  double integral() const;
  double support_left() const { return breakpoints_.empty() ? 0.0 : breakpoints_.front(); }
  double support_right() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }
  int degree() const;
  std::size_t interval_count() const { return coeffs_.size(); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<double>>& coefficients() const { return coeffs_; }

private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> coeffs_;
};

/// Sum of weighted, individually transformed copies on a merged grid.
PiecewisePolynomial pp_combine(const std::vector<std::pair<double, PiecewisePolynomial>>& terms);

/// Exact integral of the product of two piecewise polynomials.
double pp_inner_product(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

/// Jumps [x, f(x+) - f(x-)] at every knot, support endpoints included.
/// Applied to a piecewise constant this is the distributional derivative.
std::vector<std::pair<double, double>> dirac_jumps(const PiecewisePolynomial& f);

/// Representation f(x) = sum c_{i,k} (x - kappa_i)_+^k valid on all of R.
struct TruncatedPowerTerm {
  double coef;
  double knot;
  int power;
};
std::vector<TruncatedPowerTerm> truncated_powers(const PiecewisePolynomial& f);

// Dense monomial helpers shared by the basis and assembly code.
double poly_eval(const std::vector<double>& p, double t);
std::vector<double> poly_derivative(const std::vector<double>& p);
std::vector<double> poly_product(const std::vector<double>& a, const std::vector<double>& b);
/// q with q(u) = p(s + u).
std::vector<double> poly_shift(const std::vector<double>& p, double s);

}  // namespace fede
