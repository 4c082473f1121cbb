#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qcurl/common.hpp"

namespace qcurl {

/// Per-axis exponent cap. Products of the largest spaces here stay at or below 6.
inline constexpr int kMaxAxisDegree = 8;

/// Axis-aligned region [lo, hi]. Axes with lo == hi are collapsed, so the
/// same type describes cells (3D), faces (2D), edges (1D) and points.
struct AxisBox {
  Vec3 lo{};
  Vec3 hi{};

  int dimension() const;
  double measure() const;
};

/// Scalar polynomial in three variables stored as a dense coefficient tensor
/// over monomials x^a y^b z^c, 0 <= a < extent[0] etc.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(double c);
  static Polynomial monomial(const MultiIndex& exponents, double coefficient = 1.0);
  /// The coordinate function x_axis.
  static Polynomial coordinate(int axis);

  const MultiIndex& extent() const { return extent_; }
  bool empty() const { return coeffs_.empty(); }
  double coefficient(const MultiIndex& e) const;
  void add_term(const MultiIndex& e, double c);

  Polynomial derivative(int axis) const;
  Polynomial derivative(const MultiIndex& alpha) const;
  double evaluate(const Vec3& x) const;
  /// Exact integral over an axis box (collapsed axes are evaluated).
  double integrate(const AxisBox& box) const;

  double max_abs_coefficient() const;
  bool has_mixed_monomials(double tol = 0.0) const;

  /// Calls fn(exponents, coefficient) for every nonzero coefficient.
  void for_each_term(const std::function<void(const MultiIndex&, double)>& fn) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return -1.0 * *this; }

 private:
  void grow(const MultiIndex& extent);
  int flat(const MultiIndex& e) const { return e[0] + extent_[0] * (e[1] + extent_[1] * e[2]); }

  MultiIndex extent_{0, 0, 0};
  std::vector<double> coeffs_;
};

/// Three-component polynomial vector field.
class PolyField {
 public:
  PolyField() = default;
  PolyField(Polynomial x, Polynomial y, Polynomial z) : comp_{std::move(x), std::move(y), std::move(z)} {}

  /// Field that is `p` in component `axis` and zero elsewhere.
  static PolyField along(int axis, Polynomial p);
  static PolyField gradient(const Polynomial& p);

  Polynomial& operator[](int i) { return comp_[i]; }
  const Polynomial& operator[](int i) const { return comp_[i]; }

  PolyField derivative(int axis) const;
  PolyField curl() const;
  Polynomial divergence() const;
  /// Row i of the result is the gradient of component i.
  std::array<PolyField, 3> jacobian() const;
  /// (x - center) x this.
  PolyField cross_from_left(const Vec3& center) const;

  Vec3 evaluate(const Vec3& x) const;
  double max_abs_coefficient() const;

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  PolyField& operator*=(double s);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(double s, PolyField a) { return a *= s; }

 private:
  std::array<Polynomial, 3> comp_;
};

Polynomial dot(const PolyField& a, const PolyField& b);
/// Exact integral of a . b over the box.
double integrate_dot(const PolyField& a, const PolyField& b, const AxisBox& box);
/// Exact integral of grad(a) : grad(b) over the box.
double integrate_grad_dot(const PolyField& a, const PolyField& b, const AxisBox& box);

double integrate_exact(const Polynomial& p, const AxisBox& box);

}  // namespace qcurl
