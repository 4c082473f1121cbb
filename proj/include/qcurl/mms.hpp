#pragma once

#include <array>
#include <map>
#include <vector>

#include "qcurl/common.hpp"
#include "qcurl/field.hpp"

namespace qcurl {

/// sum_m a_m sin(m pi t) + b_m cos(m pi t), closed under differentiation.
class TrigSeries1D {
 public:
  struct Term {
    double amplitude;
    int multiple;
    bool cosine;
  };

  TrigSeries1D() = default;
  explicit TrigSeries1D(std::vector<Term> terms) : terms_(std::move(terms)) {}

  /// sin^3(pi t) = (3 sin(pi t) - sin(3 pi t)) / 4
  static TrigSeries1D sin_cubed();

  const std::vector<Term>& terms() const { return terms_; }
  TrigSeries1D derivative() const;
  double evaluate(double t) const;

 private:
  std::vector<Term> terms_;
};

/// d^r/dt^r of sin^3(pi t) along each axis at one point, r <= kMaxOrder.
struct PotentialJet {
  static constexpr int kMaxOrder = 8;
  std::array<std::array<double, kMaxOrder + 1>, 3> d{};

  double partial(const MultiIndex& alpha) const { return d[0][alpha[0]] * d[1][alpha[1]] * d[2][alpha[2]]; }
};

/// Linear combination of partial derivatives of the potential
/// phi = sin^3(pi x) sin^3(pi y) sin^3(pi z).
class PotentialForm {
 public:
  PotentialForm() = default;
  static PotentialForm partial(const MultiIndex& alpha, double coefficient = 1.0);

  PotentialForm derivative(int axis) const;
  PotentialForm derivative(const MultiIndex& alpha) const;
  int max_order() const;
  double evaluate(const PotentialJet& jet) const;

  PotentialForm& operator+=(const PotentialForm& o);
  PotentialForm& operator*=(double s);
  friend PotentialForm operator+(PotentialForm a, const PotentialForm& b) { return a += b; }
  friend PotentialForm operator-(PotentialForm a, PotentialForm b) { return a += (b *= -1.0); }

 private:
  std::map<MultiIndex, double> terms_;
};

using VectorForm = std::array<PotentialForm, 3>;

VectorForm curl(const VectorForm& v);
VectorForm laplacian(const VectorForm& v);
VectorForm derivative(const VectorForm& v, const MultiIndex& alpha);

enum class ExactField { Velocity, CurlVelocity, LaplaceCurlVelocity, Source };

/// Manufactured solution u = curl(0, 0, phi) with f = -curl(Laplace(curl u)).
class ExactFields final : public SmoothField {
 public:
  ExactFields();

  struct Sample {
    Vec3 u;
    Vec3 curl;
    Mat3 grad_curl;
  };

  static PotentialJet jet(const Vec3& x);

  double potential(const Vec3& x) const;
  Vec3 u(const Vec3& x) const { return value(x); }
  Vec3 curl_u(const Vec3& x) const { return curl(x); }
  Mat3 grad_curl_u(const Vec3& x) const;
  Vec3 laplace_curl_u(const Vec3& x) const;
  Vec3 f(const Vec3& x) const;
  /// u, curl u and grad curl u sharing one trigonometric jet.
  Sample sample(const Vec3& x) const;

  /// Throws UnsupportedOrder when |alpha| > 3.
  Vec3 eval_derivative(ExactField field, const MultiIndex& alpha, const Vec3& x) const;

  Vec3 value(const Vec3& x) const override;
  Vec3 derivative(const MultiIndex& alpha, const Vec3& x) const override;
  Vec3 curl(const Vec3& x) const override;
  Vec3 curl_derivative(const MultiIndex& alpha, const Vec3& x) const override;

  const VectorForm& form(ExactField field) const;

 private:
  VectorForm u_;
  VectorForm curl_u_;
  std::array<VectorForm, 3> grad_curl_u_;  // [j] = d_j curl u
  VectorForm laplace_curl_u_;
  VectorForm f_;
  std::map<MultiIndex, VectorForm> u_partials_;     // all |alpha| <= 3
  std::map<MultiIndex, VectorForm> curl_partials_;  // all |alpha| <= 3
};

const ExactFields& manufactured_solution();

}  // namespace qcurl
