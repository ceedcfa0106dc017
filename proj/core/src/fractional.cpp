#include "fede/fractional.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fede {

double frac_integral_monomial(double beta, int k, double shift, double x) {
  if (!(beta > 0.0)) throw std::domain_error("frac_integral_monomial: beta must be positive");
  if (k < 0) throw std::invalid_argument("frac_integral_monomial: power must be non-negative");
  if (x <= shift) return 0.0;
  return std::tgamma(k + 1.0) / std::tgamma(k + 1.0 + beta) * std::pow(x - shift, k + beta);
}

FracProfile::FracProfile(double beta, const PiecewisePolynomial& f) : beta_(beta) {
  if (!(beta > 0.0)) throw std::domain_error("FracProfile: beta must be positive");
  for (const auto& t : truncated_powers(f)) {
    double g = std::tgamma(t.power + 1.0) / std::tgamma(t.power + 1.0 + beta);
    terms_.push_back({t.coef * g, t.knot, t.power + beta});
  }

  double a = f.support_left();
  double b = f.support_right();
  center_ = 0.5 * (a + b);
  series_from_ = b + 0.75 * (b - a);

  // moments M_m = int (xi - center)^m f(xi) dxi
  constexpr int kMoments = 80;
  std::vector<double> moments(kMoments, 0.0);
  const auto& bp = f.breakpoints();
  const auto& cf = f.coefficients();
  for (std::size_t i = 0; i < cf.size(); ++i) {
    std::vector<double> pc = poly_shift(cf[i], center_ - bp[i]);  // poly in u = xi - center
    double lo = bp[i] - center_, hi = bp[i + 1] - center_;
    for (int m = 0; m < kMoments; ++m) {
      double s = 0.0;
      for (std::size_t k = 0; k < pc.size(); ++k) {
        double e = static_cast<double>(m + k + 1);
        s += pc[k] * (std::pow(hi, e) - std::pow(lo, e)) / e;
      }
      moments[m] += s;
    }
  }
  // (x-xi)^{beta-1} = (x-c)^{beta-1} sum_m b_m ((xi-c)/(x-c))^m with
  // b_m = prod_{i=1..m} (i - beta)/i, all non-negative for beta < 1.
  weights_.resize(kMoments);
  double bm = 1.0;
  double inv_gamma = 1.0 / std::tgamma(beta);
  for (int m = 0; m < kMoments; ++m) {
    if (m > 0) bm *= (static_cast<double>(m) - beta) / static_cast<double>(m);
    weights_[m] = inv_gamma * bm * moments[m];
  }
}

double FracProfile::eval_terms(double x) const {
  double s = 0.0;
  for (const auto& t : terms_)
    if (x > t.knot) s += t.coef * std::pow(x - t.knot, t.exponent);
  return s;
}

double FracProfile::eval_series(double x) const {
  double z = x - center_;
  double s = 0.0;
  double p = std::pow(z, beta_ - 1.0);
  for (std::size_t m = 0; m < weights_.size(); ++m) {
    double term = weights_[m] * p;
    s += term;
    p /= z;
    if (std::abs(term) < 1e-300) break;
  }
  return s;
}

double FracProfile::eval(double x) const {
  // terms are emitted in ascending knot order, so front() is the support edge
  if (terms_.empty() || x <= terms_.front().knot) return 0.0;
  return (x >= series_from_) ? eval_series(x) : eval_terms(x);
}

FracProfile frac_integral_piecewise(double beta, const PiecewisePolynomial& f) {
  return FracProfile(beta, f);
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_01(int points) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;

  // Newton iteration on Legendre polynomials over [-1,1], mapped to [0,1].
  std::vector<double> x(points), w(points);
  int n = points;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0 = 0.0, p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    double wi = 2.0 / ((1.0 - t * t) * dp * dp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  for (int i = 0; i < n; ++i) {
    x[i] = 0.5 * (x[i] + 1.0);
    w[i] *= 0.5;
  }
  return cache.emplace(points, std::make_pair(std::move(x), std::move(w))).first->second;
}

double integrate_profile(const FracProfile& g, const PiecewisePolynomial& p) {
  const auto& bp = p.breakpoints();
  const auto& cf = p.coefficients();
  double total = 0.0;
  const auto& [gx, gw] = gauss_legendre_01(24);

  for (std::size_t i = 0; i < cf.size(); ++i) {
    double l = bp[i], r = bp[i + 1];
    if (l >= g.series_threshold()) {
      // analytic tail: Gauss-Legendre on the series form
      double cell = 0.0;
      for (std::size_t q = 0; q < gx.size(); ++q) {
        double x = l + (r - l) * gx[q];
        cell += gw[q] * g.eval_series(x) * poly_eval(cf[i], x - l);
      }
      total += (r - l) * cell;
      continue;
    }
    for (const auto& t : g.terms()) {
      double lo = std::max(l, t.knot);
      if (lo >= r) continue;
      std::vector<double> pk = poly_shift(cf[i], t.knot - l);  // poly in (x - knot)
      double zl = lo - t.knot, zr = r - t.knot;
      double s = 0.0;
      for (std::size_t k = 0; k < pk.size(); ++k) {
        double e = t.exponent + static_cast<double>(k) + 1.0;
        double upper = std::pow(zr, e);
        double lower = (zl > 0.0) ? std::pow(zl, e) : 0.0;
        s += pk[k] * (upper - lower) / e;
      }
      total += t.coef * s;
    }
  }
  return total;
}

}  // namespace fede
