#pragma once

#include <functional>
#include <vector>

#include "qcurl/common.hpp"
#include "qcurl/polynomial.hpp"

namespace qcurl {

/// Gauss-Legendre rule with q points on [0, 1]; exact for degree <= 2q - 1.
class GaussRule {
 public:
  explicit GaussRule(int q);

  int order() const { return static_cast<int>(points_.size()); }
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
};

struct QuadPoint {
  Vec3 x;
  double w;
};

/// Tensor-product rule on an axis box; collapsed axes contribute a single point.
std::vector<QuadPoint> tensor_rule(const GaussRule& rule, const AxisBox& box);

double integrate_gauss(const std::function<double(const Vec3&)>& f, const AxisBox& box, int q);
double integrate_gauss(const std::function<double(const Vec3&)>& f, const AxisBox& box, const GaussRule& rule);

}  // namespace qcurl
