#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fede/bspline.hpp"

using namespace fede;

TEST_CASE("cardinal B-spline point values") {
  CHECK(eval_bspline(2, 1.0) == doctest::Approx(1.0));
  CHECK(eval_bspline(3, 1.5) == doctest::Approx(0.75));
  CHECK(eval_bspline(2, -0.5) == 0.0);
  CHECK(eval_bspline(2, 2.5) == 0.0);
  CHECK_THROWS_AS(eval_bspline(0, 0.5), std::invalid_argument);
}

TEST_CASE("piecewise form matches the recursion") {
  for (int m = 1; m <= 5; ++m) {
    PiecewisePolynomial pp = bspline_pp(m);
    for (int i = 0; i <= 500; ++i) {
      double x = m * i / 500.0;
      CHECK(pp.eval(x) == doctest::Approx(eval_bspline(m, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("partition of unity") {
  for (int m = 1; m <= 4; ++m) {
    for (int i = 1; i < 40; ++i) {
      // off the integers, where the closed-interval convention of M_1
      // would double-count
      double x = 1.0 + 5.0 * (i + 0.5) / 40.0;
      double sum = 0.0;
      for (int j = -6; j <= 10; ++j) sum += eval_bspline(m, x - j);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("support and symmetry M_m(m-x) = M_m(x)") {
  for (int m = 2; m <= 4; ++m)
    for (int i = 0; i <= 200; ++i) {
      double x = m * i / 200.0;
      CHECK(eval_bspline(m, m - x) == doctest::Approx(eval_bspline(m, x)).epsilon(1e-13));
    }
}

TEST_CASE("refinement identity on a dense grid") {
  for (int r : {2, 3}) {
    const auto& mask = coefficient_table(r).refinement;
    for (int i = 0; i <= 1000; ++i) {
      double x = r * i / 1000.0;
      double rhs = 0.0;
      for (std::size_t k = 0; k < mask.size(); ++k)
        rhs += mask[k] * eval_bspline(r, 2.0 * x - static_cast<double>(k));
      CHECK(eval_bspline(r, x) == doctest::Approx(rhs).epsilon(1e-13));
    }
  }
}

TEST_CASE("coefficient table pins the paper constructions") {
  const auto& t2 = coefficient_table(2);
  CHECK(t2.refinement == std::vector<double>{0.5, 1.0, 0.5});
  CHECK(t2.interior_wavelet ==
        std::vector<double>{1.0 / 24, -0.25, 5.0 / 12, -0.25, 1.0 / 24});
  CHECK(t2.boundary_wavelet == std::vector<double>{3.0 / 8, -0.25, 1.0 / 24});
  const auto& t3 = coefficient_table(3);
  CHECK(t3.refinement == std::vector<double>{0.25, 0.75, 0.75, 0.25});
  CHECK(t3.interior_wavelet == std::vector<double>{1.0 / 12, -5.0 / 12, 5.0 / 12, -1.0 / 12});
  CHECK(t3.boundary_wavelet == std::vector<double>{5.0 / 12, -1.0 / 12});
}

TEST_CASE("derivatives") {
  CHECK(bspline_derivative(2, 1).eval(0.5) == doctest::Approx(1.0));
  CHECK(bspline_derivative(3, 1).eval(1.5) == doctest::Approx(0.0));
  PiecewisePolynomial m3dd = bspline_derivative(3, 2);
  CHECK(m3dd.eval(0.3) == doctest::Approx(1.0));
  CHECK(m3dd.eval(0.9) == doctest::Approx(1.0));
  CHECK(m3dd.eval(1.5) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(bspline_derivative(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(bspline_derivative(2, 5), std::invalid_argument);
}

TEST_CASE("dirac jumps of the hat derivative") {
  auto jumps = dirac_jumps(bspline_derivative(2, 1));
  REQUIRE(jumps.size() == 3);
  CHECK(jumps[0].second == doctest::Approx(1.0));
  CHECK(jumps[1].second == doctest::Approx(-2.0));
  CHECK(jumps[2].second == doctest::Approx(1.0));
}

TEST_CASE("scaled basis functions") {
  WaveletBasisSpec spec = make_basis_spec(2, 0.75);
  CHECK(spec.n0 == 2);
  CHECK(spec.t == 2);
  PiecewisePolynomial phi = scaled_basis_function(spec, 3, 0);
  CHECK(phi.support_left() == doctest::Approx(0.0));
  CHECK(phi.support_right() == doctest::Approx(0.25));
  PiecewisePolynomial phi3 = scaled_basis_function(spec, 3, 3);
  CHECK(phi3.eval(0.5) == doctest::Approx(std::pow(2.0, 1.5)));

  WaveletBasisSpec spec3 = make_basis_spec(3, 1.0);
  CHECK(spec3.n0 == 2);
  // the last admissible index is j = 2^n - r; its support ends at
  // (2^n - r + r) 2^{-n} = 1
  PiecewisePolynomial last = scaled_basis_function(spec3, 3, (1 << 3) - 3);
  CHECK(last.support_right() == doctest::Approx(1.0));

  CHECK_THROWS_AS(scaled_basis_function(spec, 3, 7), std::out_of_range);
  CHECK_THROWS_AS(scaled_basis_function(spec3, 3, 6), std::out_of_range);
  CHECK_THROWS_AS(scaled_basis_function(spec, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_basis_spec(4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(make_basis_spec(2, 1.6), std::invalid_argument);
}

TEST_CASE("wavelet expansion coefficients match the construction") {
  WaveletBasisSpec spec2 = make_basis_spec(2, 0.75);
  FineExpansion e = wavelet_expansion(spec2, 2, 2);
  CHECK(e.first_column == 0);
  REQUIRE(e.coeffs.size() == 5);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(e.coeffs[0] == doctest::Approx(s / 24.0));
  CHECK(e.coeffs[2] == doctest::Approx(s * 5.0 / 12.0));

  WaveletBasisSpec spec3 = make_basis_spec(3, 1.0);
  FineExpansion b = wavelet_expansion(spec3, 2, 1);
  CHECK(b.first_column == 0);
  REQUIRE(b.coeffs.size() == 2);
  CHECK(b.coeffs[0] == doctest::Approx(s * 5.0 / 12.0));
  CHECK(b.coeffs[1] == doctest::Approx(-s / 12.0));
}

TEST_CASE("every wavelet matches its fine-scale expansion pointwise") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int r : {2, 3}) {
    WaveletBasisSpec spec = make_basis_spec(r, r == 2 ? 0.75 : 1.2);
    for (int n : {2, 3, 4}) {
      for (int j = 1; j <= (1 << n); ++j) {
        PiecewisePolynomial psi = wavelet_function(spec, n, j);
        FineExpansion e = wavelet_expansion(spec, n, j);
        for (int trial = 0; trial < (1000 / (1 << n)); ++trial) {
          double x = uni(rng);
          double direct = psi.eval(x);
          double expanded = 0.0;
          for (std::size_t l = 0; l < e.coeffs.size(); ++l) {
            int col = e.first_column + static_cast<int>(l);
            expanded += e.coeffs[l] * scaled_basis_function(spec, n + 1, col).eval(x);
          }
          CHECK(direct == doctest::Approx(expanded).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("interior wavelets of the r=3 family have zero mean") {
  WaveletBasisSpec spec = make_basis_spec(3, 1.0);
  for (int j = 2; j <= 7; ++j) {
    PiecewisePolynomial psi = wavelet_function(spec, 3, j);
    CHECK(psi.integral() == doctest::Approx(0.0).epsilon(1e-13));
  }
  double masksum = 0.0;
  for (double c : coefficient_table(3).interior_wavelet) masksum += c;
  CHECK(masksum == doctest::Approx(0.0));
}

TEST_CASE("wavelet index errors") {
  WaveletBasisSpec spec = make_basis_spec(2, 0.75);
  CHECK_THROWS_AS(wavelet_function(spec, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(wavelet_function(spec, 3, 9), std::out_of_range);
}
