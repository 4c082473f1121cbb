#include "qcurl/quadrature.hpp"

#include <cmath>
#include <string>

namespace qcurl {

GaussRule::GaussRule(int q) {
  if (q < 1) throw InvalidArgument("Gauss order must be >= 1, got " + std::to_string(q));
  points_.resize(q);
  weights_.resize(q);
  // Newton iteration on P_q over [-1, 1], mapped to [0, 1] afterwards.
  for (int i = 0; i < q; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    points_[q - 1 - i] = 0.5 * (x + 1.0);
    weights_[q - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

std::vector<QuadPoint> tensor_rule(const GaussRule& rule, const AxisBox& box) {
  const auto& pts = rule.points();
  const auto& wts = rule.weights();
  std::array<std::vector<double>, 3> xs;
  std::array<std::vector<double>, 3> ws;
  for (int a = 0; a < 3; ++a) {
    const double len = box.hi[a] - box.lo[a];
    if (len > 0.0) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        xs[a].push_back(box.lo[a] + len * pts[i]);
        ws[a].push_back(len * wts[i]);
      }
    } else {
      xs[a].push_back(box.lo[a]);
      ws[a].push_back(1.0);
    }
  }
  std::vector<QuadPoint> out;
  out.reserve(xs[0].size() * xs[1].size() * xs[2].size());
  for (std::size_t k = 0; k < xs[2].size(); ++k) {
    for (std::size_t j = 0; j < xs[1].size(); ++j) {
      for (std::size_t i = 0; i < xs[0].size(); ++i) {
        out.push_back({{xs[0][i], xs[1][j], xs[2][k]}, ws[0][i] * ws[1][j] * ws[2][k]});
      }
    }
  }
  return out;
}

double integrate_gauss(const std::function<double(const Vec3&)>& f, const AxisBox& box, const GaussRule& rule) {
  double s = 0.0;
  for (const auto& qp : tensor_rule(rule, box)) s += qp.w * f(qp.x);
  return s;
}

double integrate_gauss(const std::function<double(const Vec3&)>& f, const AxisBox& box, int q) {
  return integrate_gauss(f, box, GaussRule(q));
}

}  // namespace qcurl
