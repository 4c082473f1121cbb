#include "qcurl/field.hpp"

namespace qcurl {

namespace {

Vec3 derivative_of(const PolyField& f, const MultiIndex& alpha, const Vec3& x) {
  return {f[0].derivative(alpha).evaluate(x), f[1].derivative(alpha).evaluate(x), f[2].derivative(alpha).evaluate(x)};
}

}  // namespace

PolynomialField::PolynomialField(PolyField field) : field_(std::move(field)), curl_(field_.curl()) {}

Vec3 PolynomialField::derivative(const MultiIndex& alpha, const Vec3& x) const {
  return derivative_of(field_, alpha, x);
}

Vec3 PolynomialField::curl_derivative(const MultiIndex& alpha, const Vec3& x) const {
  return derivative_of(curl_, alpha, x);
}

}  // namespace qcurl
