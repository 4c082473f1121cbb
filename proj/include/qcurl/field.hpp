#pragma once

#include <array>

#include "qcurl/common.hpp"
#include "qcurl/polynomial.hpp"

namespace qcurl {

/// (i, j) = d_j of component i.
using Mat3 = std::array<Vec3, 3>;

/// Vector field with analytic partial derivatives (total order <= 3) of
/// itself and of its curl, in physical coordinates.
class SmoothField {
 public:
  virtual ~SmoothField() = default;

  virtual Vec3 value(const Vec3& x) const = 0;
  virtual Vec3 derivative(const MultiIndex& alpha, const Vec3& x) const = 0;
  virtual Vec3 curl(const Vec3& x) const = 0;
  virtual Vec3 curl_derivative(const MultiIndex& alpha, const Vec3& x) const = 0;
};

/// Polynomial field given in physical coordinates; derivatives are exact.
class PolynomialField final : public SmoothField {
 public:
  explicit PolynomialField(PolyField field);

  const PolyField& field() const { return field_; }

  Vec3 value(const Vec3& x) const override { return field_.evaluate(x); }
  Vec3 derivative(const MultiIndex& alpha, const Vec3& x) const override;
  Vec3 curl(const Vec3& x) const override { return curl_.evaluate(x); }
  Vec3 curl_derivative(const MultiIndex& alpha, const Vec3& x) const override;

 private:
  PolyField field_;
  PolyField curl_;
};

}  // namespace qcurl
