#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qcurl {

using Vec3 = std::array<double, 3>;
using MultiIndex = std::array<int, 3>;

inline constexpr double kPi = 3.14159265358979323846;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 unit(int axis) {
  Vec3 e{0.0, 0.0, 0.0};
  e[axis] = 1.0;
  return e;
}

inline MultiIndex unit_index(int axis) {
  MultiIndex e{0, 0, 0};
  e[axis] = 1;
  return e;
}

inline MultiIndex shifted(MultiIndex alpha, int axis, int by = 1) {
  alpha[axis] += by;
  return alpha;
}

inline int order(const MultiIndex& alpha) { return alpha[0] + alpha[1] + alpha[2]; }

/// The two coordinate axes orthogonal to `axis`, in ascending order.
inline std::array<int, 2> other_axes(int axis) {
  switch (axis) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Macro postprocessing requested on a mesh whose size is not a multiple of 3.
class NonDivisibleMesh : public Error {
 public:
  explicit NonDivisibleMesh(int n)
      : Error("mesh size n=" + std::to_string(n) + " is not divisible by 3; macroelements undefined") {}
};

class DegenerateSpan : public Error {
 public:
  using Error::Error;
};

class SingularVandermonde : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class MaxIterations : public Error {
 public:
  MaxIterations(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace qcurl
