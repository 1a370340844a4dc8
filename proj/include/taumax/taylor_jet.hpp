#pragma once

#include <span>
#include <vector>

#include "taumax/errors.hpp"

namespace taumax {

/// Thrown for mismatched operands or a constant term that makes an operation singular.
class JetError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Truncated Taylor expansion c_0 + c_1 h + ... + c_K h^K of a function about `center`.
/// The derivative of order k at the center is k! c_k.
class TaylorJet {
 public:
  /// Throws JetError if coeffs is empty or any coefficient is non-finite.
  TaylorJet(double center, std::vector<double> coeffs);

  static TaylorJet constant(double center, double value, int order);
  /// The identity function about `center`: center + h.
  static TaylorJet variable(double center, int order);

  double center() const noexcept { return center_; }
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  double derivative(int k) const;

  TaylorJet& operator+=(const TaylorJet& rhs);
  TaylorJet& operator-=(const TaylorJet& rhs);
  TaylorJet& operator*=(double s);

 private:
  double center_;
  std::vector<double> coeffs_;
};

TaylorJet operator+(TaylorJet a, const TaylorJet& b);
TaylorJet operator-(TaylorJet a, const TaylorJet& b);
TaylorJet operator-(TaylorJet a);
TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
TaylorJet operator*(TaylorJet a, double s);
TaylorJet operator*(double s, TaylorJet a);
TaylorJet operator+(TaylorJet a, double s);
/// Requires b[0] != 0.
TaylorJet operator/(const TaylorJet& a, const TaylorJet& b);

TaylorJet exp(const TaylorJet& a);
/// Requires a[0] > 0.
TaylorJet log(const TaylorJet& a);
/// a^r; requires a[0] > 0, or a[0] != 0 when r is an integer.
TaylorJet pow_const(const TaylorJet& a, double r);

/// a(h) / h for a jet with a[0] == 0 exactly (removable singularity at the
/// center). The result has one order less than `a`.
TaylorJet divide_by_offset(const TaylorJet& a);

}  // namespace taumax
