#include "qcurl/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace qcurl {

int AxisBox::dimension() const {
  int d = 0;
  for (int a = 0; a < 3; ++a) d += hi[a] > lo[a];
  return d;
}

double AxisBox::measure() const {
  double m = 1.0;
  for (int a = 0; a < 3; ++a) {
    if (hi[a] > lo[a]) m *= hi[a] - lo[a];
  }
  return m;
}

Polynomial Polynomial::constant(double c) { return monomial({0, 0, 0}, c); }

Polynomial Polynomial::monomial(const MultiIndex& exponents, double coefficient) {
  Polynomial p;
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::coordinate(int axis) {
  MultiIndex e{0, 0, 0};
  e[axis] = 1;
  return monomial(e);
}

double Polynomial::coefficient(const MultiIndex& e) const {
  for (int a = 0; a < 3; ++a) {
    if (e[a] < 0 || e[a] >= extent_[a]) return 0.0;
  }
  return coeffs_[flat(e)];
}

void Polynomial::grow(const MultiIndex& ext) {
  MultiIndex target = extent_;
  for (int a = 0; a < 3; ++a) target[a] = std::max(target[a], ext[a]);
  if (target == extent_) return;
  for (int a = 0; a < 3; ++a) {
    if (target[a] > kMaxAxisDegree + 1) throw InvalidArgument("polynomial degree exceeds kMaxAxisDegree");
  }
  std::vector<double> next(static_cast<std::size_t>(target[0]) * target[1] * target[2], 0.0);
  for (int k = 0; k < extent_[2]; ++k) {
    for (int j = 0; j < extent_[1]; ++j) {
      for (int i = 0; i < extent_[0]; ++i) {
        next[i + target[0] * (j + target[1] * k)] = coeffs_[flat({i, j, k})];
      }
    }
  }
  extent_ = target;
  coeffs_ = std::move(next);
}

void Polynomial::add_term(const MultiIndex& e, double c) {
  for (int a = 0; a < 3; ++a) {
    if (e[a] < 0) throw InvalidArgument("negative monomial exponent");
  }
  grow({e[0] + 1, e[1] + 1, e[2] + 1});
  coeffs_[flat(e)] += c;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial d;
  for_each_term([&](const MultiIndex& e, double c) {
    if (e[axis] > 0) d.add_term(shifted(e, axis, -1), c * e[axis]);
  });
  return d;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
  Polynomial d = *this;
  for (int a = 0; a < 3; ++a) {
    for (int r = 0; r < alpha[a]; ++r) d = d.derivative(a);
  }
  return d;
}

double Polynomial::evaluate(const Vec3& x) const {
  if (coeffs_.empty()) return 0.0;
  std::array<std::array<double, kMaxAxisDegree + 1>, 3> pw{};
  for (int a = 0; a < 3; ++a) {
    pw[a][0] = 1.0;
    for (int e = 1; e < extent_[a]; ++e) pw[a][e] = pw[a][e - 1] * x[a];
  }
  double sum = 0.0;
  int idx = 0;
  for (int k = 0; k < extent_[2]; ++k) {
    for (int j = 0; j < extent_[1]; ++j) {
      const double yz = pw[1][j] * pw[2][k];
      double row = 0.0;
      for (int i = 0; i < extent_[0]; ++i, ++idx) row += coeffs_[idx] * pw[0][i];
      sum += row * yz;
    }
  }
  return sum;
}

double Polynomial::integrate(const AxisBox& box) const {
  if (coeffs_.empty()) return 0.0;
  std::array<std::array<double, kMaxAxisDegree + 1>, 3> mom{};
  for (int a = 0; a < 3; ++a) {
    const double lo = box.lo[a];
    const double hi = box.hi[a];
    for (int e = 0; e < extent_[a]; ++e) {
      mom[a][e] = hi > lo ? (std::pow(hi, e + 1) - std::pow(lo, e + 1)) / (e + 1) : std::pow(lo, e);
    }
  }
  double sum = 0.0;
  int idx = 0;
  for (int k = 0; k < extent_[2]; ++k) {
    for (int j = 0; j < extent_[1]; ++j) {
      double row = 0.0;
      for (int i = 0; i < extent_[0]; ++i, ++idx) row += coeffs_[idx] * mom[0][i];
      sum += row * mom[1][j] * mom[2][k];
    }
  }
  return sum;
}

double Polynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Polynomial::has_mixed_monomials(double tol) const {
  bool mixed = false;
  for_each_term([&](const MultiIndex& e, double c) {
    const int nonzero_axes = (e[0] > 0) + (e[1] > 0) + (e[2] > 0);
    if (nonzero_axes > 1 && std::abs(c) > tol) mixed = true;
  });
  return mixed;
}

void Polynomial::for_each_term(const std::function<void(const MultiIndex&, double)>& fn) const {
  int idx = 0;
  for (int k = 0; k < extent_[2]; ++k) {
    for (int j = 0; j < extent_[1]; ++j) {
      for (int i = 0; i < extent_[0]; ++i, ++idx) {
        if (coeffs_[idx] != 0.0) fn({i, j, k}, coeffs_[idx]);
      }
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  grow(other.extent_);
  other.for_each_term([&](const MultiIndex& e, double c) { coeffs_[flat(e)] += c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  grow(other.extent_);
  other.for_each_term([&](const MultiIndex& e, double c) { coeffs_[flat(e)] -= c; });
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.empty() || b.empty()) return out;
  out.grow({a.extent_[0] + b.extent_[0] - 1, a.extent_[1] + b.extent_[1] - 1, a.extent_[2] + b.extent_[2] - 1});
  a.for_each_term([&](const MultiIndex& ea, double ca) {
    b.for_each_term([&](const MultiIndex& eb, double cb) {
      out.coeffs_[out.flat({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]})] += ca * cb;
    });
  });
  return out;
}

PolyField PolyField::along(int axis, Polynomial p) {
  PolyField f;
  f[axis] = std::move(p);
  return f;
}

PolyField PolyField::gradient(const Polynomial& p) {
  return PolyField(p.derivative(0), p.derivative(1), p.derivative(2));
}

PolyField PolyField::derivative(int axis) const {
  return PolyField(comp_[0].derivative(axis), comp_[1].derivative(axis), comp_[2].derivative(axis));
}

PolyField PolyField::curl() const {
  return PolyField(comp_[2].derivative(1) - comp_[1].derivative(2), comp_[0].derivative(2) - comp_[2].derivative(0),
                   comp_[1].derivative(0) - comp_[0].derivative(1));
}

Polynomial PolyField::divergence() const {
  return comp_[0].derivative(0) + comp_[1].derivative(1) + comp_[2].derivative(2);
}

std::array<PolyField, 3> PolyField::jacobian() const {
  return {PolyField::gradient(comp_[0]), PolyField::gradient(comp_[1]), PolyField::gradient(comp_[2])};
}

PolyField PolyField::cross_from_left(const Vec3& center) const {
  std::array<Polynomial, 3> r;
  for (int a = 0; a < 3; ++a) r[a] = Polynomial::coordinate(a) - Polynomial::constant(center[a]);
  return PolyField(r[1] * comp_[2] - r[2] * comp_[1], r[2] * comp_[0] - r[0] * comp_[2],
                   r[0] * comp_[1] - r[1] * comp_[0]);
}

Vec3 PolyField::evaluate(const Vec3& x) const {
  return {comp_[0].evaluate(x), comp_[1].evaluate(x), comp_[2].evaluate(x)};
}

double PolyField::max_abs_coefficient() const {
  return std::max({comp_[0].max_abs_coefficient(), comp_[1].max_abs_coefficient(), comp_[2].max_abs_coefficient()});
}

PolyField& PolyField::operator+=(const PolyField& o) {
  for (int a = 0; a < 3; ++a) comp_[a] += o.comp_[a];
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  for (int a = 0; a < 3; ++a) comp_[a] -= o.comp_[a];
  return *this;
}

PolyField& PolyField::operator*=(double s) {
  for (auto& c : comp_) c *= s;
  return *this;
}

Polynomial dot(const PolyField& a, const PolyField& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double integrate_dot(const PolyField& a, const PolyField& b, const AxisBox& box) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s += (a[c] * b[c]).integrate(box);
  return s;
}

double integrate_grad_dot(const PolyField& a, const PolyField& b, const AxisBox& box) {
  double s = 0.0;
  for (int d = 0; d < 3; ++d) s += integrate_dot(a.derivative(d), b.derivative(d), box);
  return s;
}

double integrate_exact(const Polynomial& p, const AxisBox& box) { return p.integrate(box); }

}  // namespace qcurl
