#include "fede/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fede {

namespace {
constexpr double kKnotEps = 1e-12;
}

double poly_eval(const std::vector<double>& p, double t) {
  double v = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& p) {
  if (p.size() <= 1) return {0.0};
  std::vector<double> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

std::vector<double> poly_product(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<double> poly_shift(const std::vector<double>& p, double s) {
  // Taylor shift, out[k] = p^{(k)}(s) / k!
  std::vector<double> out(p.size(), 0.0);
  std::vector<double> d = p;
  double fact = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = poly_eval(d, s) / fact;
    d = poly_derivative(d);
    fact *= static_cast<double>(k + 1);
  }
  return out;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<std::vector<double>> coeffs)
    : breakpoints_(std::move(breakpoints)), coeffs_(std::move(coeffs)) {
  if (breakpoints_.size() < 2 || coeffs_.size() + 1 != breakpoints_.size())
    throw std::invalid_argument("PiecewisePolynomial: breakpoint/coefficient count mismatch");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw std::invalid_argument("PiecewisePolynomial: breakpoints must be strictly increasing");
}

double PiecewisePolynomial::eval(double x) const {
  if (breakpoints_.empty() || x < breakpoints_.front() || x > breakpoints_.back()) return 0.0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t i = (it == breakpoints_.begin()) ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (i >= coeffs_.size()) i = coeffs_.size() - 1;  // closed right endpoint
  return poly_eval(coeffs_[i], x - breakpoints_[i]);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<std::vector<double>> d;
  d.reserve(coeffs_.size());
  for (const auto& p : coeffs_) d.push_back(poly_derivative(p));
  return PiecewisePolynomial(breakpoints_, std::move(d));
}

PiecewisePolynomial PiecewisePolynomial::derivative(int k) const {
  PiecewisePolynomial out = *this;
  for (int i = 0; i < k; ++i) out = out.derivative();
  return out;
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
  std::vector<std::vector<double>> a;
  a.reserve(coeffs_.size());
  double carry = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& p = coeffs_[i];
    std::vector<double> q(p.size() + 1, 0.0);
    q[0] = carry;
    for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / static_cast<double>(k + 1);
    a.push_back(q);
    carry = poly_eval(q, breakpoints_[i + 1] - breakpoints_[i]);
  }
  return PiecewisePolynomial(breakpoints_, std::move(a));
}

PiecewisePolynomial PiecewisePolynomial::scale_shift(double amplitude, double lambda,
                                                     double shift) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("scale_shift: lambda must be positive");
  std::vector<double> bp(breakpoints_.size());
  for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = (breakpoints_[i] + shift) / lambda;
  std::vector<std::vector<double>> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i].resize(coeffs_[i].size());
    double scale = amplitude;
    for (std::size_t k = 0; k < coeffs_[i].size(); ++k) {
      c[i][k] = coeffs_[i][k] * scale;
      scale *= lambda;
    }
  }
  return PiecewisePolynomial(std::move(bp), std::move(c));
}

PiecewisePolynomial PiecewisePolynomial::reflect(double c) const {
  std::size_t m = coeffs_.size();
  std::vector<double> bp(breakpoints_.size());
  for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = c - breakpoints_[bp.size() - 1 - i];
  std::vector<std::vector<double>> cf(m);
  for (std::size_t i = 0; i < m; ++i) {
    // new interval i corresponds to old interval m-1-i; with w its width,
    // p_new(t) = p_old(w - t).
    std::size_t j = m - 1 - i;
    double w = breakpoints_[j + 1] - breakpoints_[j];
    std::vector<double> q = poly_shift(coeffs_[j], w);  // q(u) = p(w + u)
    for (std::size_t k = 1; k < q.size(); k += 2) q[k] = -q[k];
    cf[i] = std::move(q);
  }
  return PiecewisePolynomial(std::move(bp), std::move(cf));
}

double PiecewisePolynomial::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double w = breakpoints_[i + 1] - breakpoints_[i];
    double tw = w;
    for (std::size_t k = 0; k < coeffs_[i].size(); ++k) {
      total += coeffs_[i][k] * tw / static_cast<double>(k + 1);
      tw *= w;
    }
  }
  return total;
}

int PiecewisePolynomial::degree() const {
  int d = 0;
  for (const auto& p : coeffs_)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0.0) d = std::max<int>(d, static_cast<int>(k));
  return d;
}

namespace {

std::vector<double> merged_grid(const std::vector<std::pair<double, PiecewisePolynomial>>& terms) {
  std::vector<double> knots;
  for (const auto& [w, pp] : terms) {
    (void)w;
    knots.insert(knots.end(), pp.breakpoints().begin(), pp.breakpoints().end());
  }
  std::sort(knots.begin(), knots.end());
  std::vector<double> out;
  for (double k : knots)
    if (out.empty() || k - out.back() > kKnotEps) out.push_back(k);
  return out;
}

}  // namespace

PiecewisePolynomial pp_combine(const std::vector<std::pair<double, PiecewisePolynomial>>& terms) {
  if (terms.empty()) throw std::invalid_argument("pp_combine: no terms");
  std::vector<double> grid = merged_grid(terms);
  std::vector<std::vector<double>> coeffs(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    std::vector<double> acc{0.0};
    double mid = 0.5 * (grid[i] + grid[i + 1]);
    for (const auto& [w, pp] : terms) {
      const auto& bp = pp.breakpoints();
      if (mid < bp.front() || mid > bp.back()) continue;
      auto it = std::upper_bound(bp.begin(), bp.end(), mid);
      std::size_t j = static_cast<std::size_t>(it - bp.begin()) - 1;
      std::vector<double> local = poly_shift(pp.coefficients()[j], grid[i] - bp[j]);
      if (local.size() > acc.size()) acc.resize(local.size(), 0.0);
      for (std::size_t k = 0; k < local.size(); ++k) acc[k] += w * local[k];
    }
    coeffs[i] = std::move(acc);
  }
  return PiecewisePolynomial(std::move(grid), std::move(coeffs));
}

double pp_inner_product(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  double lo = std::max(a.support_left(), b.support_left());
  double hi = std::min(a.support_right(), b.support_right());
  if (!(lo < hi)) return 0.0;
  std::vector<double> knots;
  for (double k : a.breakpoints())
    if (k > lo - kKnotEps && k < hi + kKnotEps) knots.push_back(k);
  for (double k : b.breakpoints())
    if (k > lo - kKnotEps && k < hi + kKnotEps) knots.push_back(k);
  knots.push_back(lo);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());
  std::vector<double> grid;
  for (double k : knots)
    if (grid.empty() || k - grid.back() > kKnotEps) grid.push_back(k);

  auto local_poly = [](const PiecewisePolynomial& f, double left, double mid) {
    const auto& bp = f.breakpoints();
    auto it = std::upper_bound(bp.begin(), bp.end(), mid);
    std::size_t j = static_cast<std::size_t>(it - bp.begin()) - 1;
    return poly_shift(f.coefficients()[j], left - bp[j]);
  };

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double w = grid[i + 1] - grid[i];
    double mid = 0.5 * (grid[i] + grid[i + 1]);
    std::vector<double> prod = poly_product(local_poly(a, grid[i], mid), local_poly(b, grid[i], mid));
    double tw = w;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      total += prod[k] * tw / static_cast<double>(k + 1);
      tw *= w;
    }
  }
  return total;
}

std::vector<std::pair<double, double>> dirac_jumps(const PiecewisePolynomial& f) {
  const auto& bp = f.breakpoints();
  const auto& cf = f.coefficients();
  std::vector<std::pair<double, double>> jumps;
  jumps.reserve(bp.size());
  for (std::size_t i = 0; i < bp.size(); ++i) {
    double left = (i == 0) ? 0.0 : poly_eval(cf[i - 1], bp[i] - bp[i - 1]);
    double right = (i < cf.size()) ? poly_eval(cf[i], 0.0) : 0.0;
    jumps.emplace_back(bp[i], right - left);
  }
  return jumps;
}

std::vector<TruncatedPowerTerm> truncated_powers(const PiecewisePolynomial& f) {
  const auto& bp = f.breakpoints();
  const auto& cf = f.coefficients();
  std::size_t maxdeg = 0;
  for (const auto& p : cf) maxdeg = std::max(maxdeg, p.size());
  std::vector<TruncatedPowerTerm> terms;
  std::vector<double> fact(maxdeg, 1.0);
  for (std::size_t k = 1; k < maxdeg; ++k) fact[k] = fact[k - 1] * static_cast<double>(k);

  for (std::size_t i = 0; i < bp.size(); ++i) {
    for (std::size_t k = 0; k < maxdeg; ++k) {
      // k-th derivative / k! from the right minus from the left at bp[i]
      auto kth = [&](const std::vector<double>& p, double t) {
        std::vector<double> d = p;
        for (std::size_t s = 0; s < k; ++s) d = poly_derivative(d);
        return poly_eval(d, t);
      };
      double right = (i < cf.size()) ? kth(cf[i], 0.0) : 0.0;
      double left = (i == 0) ? 0.0 : kth(cf[i - 1], bp[i] - bp[i - 1]);
      double c = (right - left) / fact[k];
      if (c != 0.0) terms.push_back({c, bp[i], static_cast<int>(k)});
    }
  }
  return terms;
}

}  // namespace fede
