#include "fede/fft.hpp"

#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace fede {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

// Twiddle factors for half transform length, cached per size.
const std::vector<std::complex<double>>& twiddle_table(std::size_t n) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::vector<std::complex<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(n, std::move(w)).first->second;
}

void transform(std::vector<std::complex<double>>& a, bool invert) {
  std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddle_table(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> tw = w[k * step];
        if (invert) tw = std::conj(tw);
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (invert) {
    double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

}  // namespace

void fft_forward(std::vector<std::complex<double>>& a) { transform(a, false); }
void fft_inverse(std::vector<std::complex<double>>& a) { transform(a, true); }

}  // namespace fede
