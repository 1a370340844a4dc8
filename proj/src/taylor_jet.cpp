#include "taumax/taylor_jet.hpp"

#include <cmath>
#include <string>

namespace taumax {
namespace {

void require_compatible(const TaylorJet& a, const TaylorJet& b) {
  if (a.center() != b.center()) throw JetError("jet centers differ");
  if (a.order() != b.order()) throw JetError("jet orders differ");
}

}  // namespace

TaylorJet::TaylorJet(double center, std::vector<double> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw JetError("jet needs at least one coefficient");
  if (!std::isfinite(center_)) throw JetError("jet center must be finite");
  for (const double c : coeffs_) {
    if (!std::isfinite(c)) throw JetError("jet coefficient is not finite");
  }
}

TaylorJet TaylorJet::constant(double center, double value, int order) {
  if (order < 0) throw JetError("negative jet order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = value;
  return {center, std::move(c)};
}

TaylorJet TaylorJet::variable(double center, int order) {
  if (order < 0) throw JetError("negative jet order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = center;
  if (order >= 1) c[1] = 1.0;
  return {center, std::move(c)};
}

double TaylorJet::derivative(int k) const {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * (*this)[k];
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TaylorJet& TaylorJet::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
TaylorJet operator-(TaylorJet a) { return a *= -1.0; }
TaylorJet operator*(TaylorJet a, double s) { return a *= s; }
TaylorJet operator*(double s, TaylorJet a) { return a *= s; }

TaylorJet operator+(TaylorJet a, double s) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += s;
  return {a.center(), std::move(c)};
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  const int n = a.order();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    c[k] = s;
  }
  return {a.center(), std::move(c)};
}

TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  if (b[0] == 0.0) throw JetError("division by a jet with zero constant term");
  const int n = a.order();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = a[k];
    for (int j = 1; j <= k; ++j) s -= b[j] * c[k - j];
    c[k] = s / b[0];
  }
  return {a.center(), std::move(c)};
}

TaylorJet exp(const TaylorJet& a) {
  const int n = a.order();
  std::vector<double> e(static_cast<std::size_t>(n) + 1, 0.0);
  e[0] = std::exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return {a.center(), std::move(e)};
}

TaylorJet log(const TaylorJet& a) {
  if (!(a[0] > 0.0)) throw JetError("log of a jet with non-positive constant term");
  const int n = a.order();
  std::vector<double> l(static_cast<std::size_t>(n) + 1, 0.0);
  l[0] = std::log(a[0]);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
    l[k] = (a[k] - s / k) / a[0];
  }
  return {a.center(), std::move(l)};
}

TaylorJet pow_const(const TaylorJet& a, double r) {
  const bool integral = std::trunc(r) == r;
  if (a[0] == 0.0 || (!integral && a[0] < 0.0)) {
    throw JetError("pow_const: constant term " + std::to_string(a[0]) + " is singular");
  }
  const int n = a.order();
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p[0] = std::pow(a[0], r);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += (r * j - (k - j)) * a[j] * p[k - j];
    p[k] = s / (k * a[0]);
  }
  return {a.center(), std::move(p)};
}

TaylorJet divide_by_offset(const TaylorJet& a) {
  if (a[0] != 0.0) throw JetError("divide_by_offset: constant term must be exactly zero");
  if (a.order() < 1) throw JetError("divide_by_offset: order must be >= 1");
  std::vector<double> c(a.coeffs().begin() + 1, a.coeffs().end());
  return {a.center(), std::move(c)};
}

}  // namespace taumax
