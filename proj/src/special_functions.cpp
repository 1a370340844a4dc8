#include "taumax/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "taumax/errors.hpp"

namespace taumax {
namespace {

// B_2, B_4, ..., B_20
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,           -1.0 / 30.0,  1.0 / 42.0,        -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0,     7.0 / 6.0,    -3617.0 / 510.0,   43867.0 / 798.0,  -174611.0 / 330.0,
};

constexpr double kLgammaShift = 12.0;

constexpr int kMaxFactorial = kMaxPolygammaOrder + 2 * static_cast<int>(kBernoulli.size());

constexpr std::array<double, kMaxFactorial + 1> make_factorials() {
  std::array<double, kMaxFactorial + 1> f{};
  f[0] = 1.0;
  for (int i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorial = make_factorials();

double stirling_lgamma(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double term = inv;  // x^-(2k-1)
  double series = 0.0;
  for (std::size_t i = 0; i < kBernoulli.size(); ++i) {
    const double k2 = 2.0 * static_cast<double>(i + 1);
    series += kBernoulli[i] / (k2 * (k2 - 1.0)) * term;
    term *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

double asymptotic_polygamma(int k, double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  if (k == 0) {
    double s = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
      s -= kBernoulli[j] / (2.0 * static_cast<double>(j + 1)) * p;
      p *= inv2;
    }
    return s;
  }
  const double inv_k = std::pow(inv, k);
  double s = kFactorial[k - 1] * inv_k + 0.5 * kFactorial[k] * inv_k * inv;
  double p = inv_k * inv2;  // x^-(2j+k)
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    const int two_j = 2 * static_cast<int>(j + 1);
    s += kBernoulli[j] * kFactorial[two_j + k - 1] / kFactorial[two_j] * p;
    p *= inv2;
  }
  return (k % 2 == 1) ? s : -s;
}

}  // namespace

double lgamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("lgamma: x must be finite and > 0");
  if (x >= kLgammaShift) return stirling_lgamma(x);
  const int m = static_cast<int>(std::ceil(kLgammaShift - x));
  double prod = 1.0;
  for (int j = 0; j < m; ++j) prod *= x + j;
  return stirling_lgamma(x + m) - std::log(prod);
}

double polygamma(int k, double x) {
  if (k < 0 || k > kMaxPolygammaOrder) {
    throw UsageError("polygamma: order " + std::to_string(k) + " outside [0, " +
                     std::to_string(kMaxPolygammaOrder) + "]");
  }
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("polygamma: x must be finite and > 0");

  // The asymptotic series is accurate to binary64 once x exceeds this.
  const double threshold = 16.0 + k;
  if (x >= threshold) return asymptotic_polygamma(k, x);

  const int m = static_cast<int>(std::ceil(threshold - x));
  double shift = 0.0;
  for (int j = m - 1; j >= 0; --j) shift += std::pow(x + j, -(k + 1));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^k
  return asymptotic_polygamma(k, x + m) - sign * kFactorial[k] * shift;
}

}  // namespace taumax
