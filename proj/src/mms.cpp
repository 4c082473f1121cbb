#include "qcurl/mms.hpp"

#include <cmath>
#include <string>

namespace qcurl {

namespace {

const std::array<TrigSeries1D, PotentialJet::kMaxOrder + 1>& sin_cubed_derivatives() {
  static const auto table = [] {
    std::array<TrigSeries1D, PotentialJet::kMaxOrder + 1> t;
    t[0] = TrigSeries1D::sin_cubed();
    for (int r = 1; r <= PotentialJet::kMaxOrder; ++r) t[r] = t[r - 1].derivative();
    return t;
  }();
  return table;
}

void check_order(const MultiIndex& alpha) {
  if (order(alpha) > 3) {
    throw UnsupportedOrder("derivatives of total order " + std::to_string(order(alpha)) + " > 3 are not supported");
  }
}

Vec3 eval(const VectorForm& v, const PotentialJet& jet) {
  return {v[0].evaluate(jet), v[1].evaluate(jet), v[2].evaluate(jet)};
}

}  // namespace

TrigSeries1D TrigSeries1D::sin_cubed() { return TrigSeries1D({{0.75, 1, false}, {-0.25, 3, false}}); }

TrigSeries1D TrigSeries1D::derivative() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const double k = t.multiple * kPi;
    // (sin)' = k cos, (cos)' = -k sin
    out.push_back({t.cosine ? -k * t.amplitude : k * t.amplitude, t.multiple, !t.cosine});
  }
  return TrigSeries1D(std::move(out));
}

double TrigSeries1D::evaluate(double t) const {
  double s = 0.0;
  for (const auto& term : terms_) {
    const double arg = term.multiple * kPi * t;
    s += term.amplitude * (term.cosine ? std::cos(arg) : std::sin(arg));
  }
  return s;
}

PotentialForm PotentialForm::partial(const MultiIndex& alpha, double coefficient) {
  PotentialForm f;
  f.terms_[alpha] = coefficient;
  return f;
}

PotentialForm PotentialForm::derivative(int axis) const {
  PotentialForm out;
  for (const auto& [alpha, c] : terms_) out.terms_[shifted(alpha, axis)] += c;
  return out;
}

PotentialForm PotentialForm::derivative(const MultiIndex& alpha) const {
  PotentialForm out;
  for (const auto& [beta, c] : terms_) {
    out.terms_[{beta[0] + alpha[0], beta[1] + alpha[1], beta[2] + alpha[2]}] += c;
  }
  return out;
}

int PotentialForm::max_order() const {
  int m = 0;
  for (const auto& [alpha, c] : terms_) m = std::max(m, order(alpha));
  return m;
}

double PotentialForm::evaluate(const PotentialJet& jet) const {
  double s = 0.0;
  for (const auto& [alpha, c] : terms_) {
    for (int a = 0; a < 3; ++a) {
      if (alpha[a] > PotentialJet::kMaxOrder) throw UnsupportedOrder("potential derivative beyond jet order");
    }
    s += c * jet.partial(alpha);
  }
  return s;
}

PotentialForm& PotentialForm::operator+=(const PotentialForm& o) {
  for (const auto& [alpha, c] : o.terms_) {
    const double v = (terms_[alpha] += c);
    if (v == 0.0) terms_.erase(alpha);
  }
  return *this;
}

PotentialForm& PotentialForm::operator*=(double s) {
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

VectorForm curl(const VectorForm& v) {
  return {v[2].derivative(1) - v[1].derivative(2), v[0].derivative(2) - v[2].derivative(0),
          v[1].derivative(0) - v[0].derivative(1)};
}

VectorForm laplacian(const VectorForm& v) {
  VectorForm out;
  for (int c = 0; c < 3; ++c) {
    for (int a = 0; a < 3; ++a) out[c] += v[c].derivative(shifted({0, 0, 0}, a, 2));
  }
  return out;
}

VectorForm derivative(const VectorForm& v, const MultiIndex& alpha) {
  return {v[0].derivative(alpha), v[1].derivative(alpha), v[2].derivative(alpha)};
}

ExactFields::ExactFields() {
  const VectorForm potential{PotentialForm{}, PotentialForm{}, PotentialForm::partial({0, 0, 0})};
  u_ = qcurl::curl(potential);
  curl_u_ = qcurl::curl(u_);
  for (int j = 0; j < 3; ++j) grad_curl_u_[j] = qcurl::derivative(curl_u_, unit_index(j));
  laplace_curl_u_ = laplacian(curl_u_);
  f_ = qcurl::curl(laplace_curl_u_);
  for (auto& c : f_) c *= -1.0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      for (int c = 0; a + b + c <= 3; ++c) {
        u_partials_[{a, b, c}] = qcurl::derivative(u_, {a, b, c});
        curl_partials_[{a, b, c}] = qcurl::derivative(curl_u_, {a, b, c});
      }
    }
  }
}

PotentialJet ExactFields::jet(const Vec3& x) {
  const auto& table = sin_cubed_derivatives();
  PotentialJet j;
  for (int a = 0; a < 3; ++a) {
    const double s1 = std::sin(kPi * x[a]);
    const double c1 = std::cos(kPi * x[a]);
    const double s3 = std::sin(3.0 * kPi * x[a]);
    const double c3 = std::cos(3.0 * kPi * x[a]);
    for (int r = 0; r <= PotentialJet::kMaxOrder; ++r) {
      double s = 0.0;
      for (const auto& t : table[r].terms()) {
        const double trig = t.multiple == 1 ? (t.cosine ? c1 : s1) : (t.cosine ? c3 : s3);
        s += t.amplitude * trig;
      }
      j.d[a][r] = s;
    }
  }
  return j;
}

double ExactFields::potential(const Vec3& x) const { return jet(x).partial({0, 0, 0}); }

Mat3 ExactFields::grad_curl_u(const Vec3& x) const { return sample(x).grad_curl; }

Vec3 ExactFields::laplace_curl_u(const Vec3& x) const { return eval(laplace_curl_u_, jet(x)); }

Vec3 ExactFields::f(const Vec3& x) const { return eval(f_, jet(x)); }

ExactFields::Sample ExactFields::sample(const Vec3& x) const {
  const PotentialJet j = jet(x);
  Sample s;
  s.u = eval(u_, j);
  s.curl = eval(curl_u_, j);
  for (int d = 0; d < 3; ++d) {
    const Vec3 col = eval(grad_curl_u_[d], j);
    for (int i = 0; i < 3; ++i) s.grad_curl[i][d] = col[i];
  }
  return s;
}

const VectorForm& ExactFields::form(ExactField field) const {
  switch (field) {
    case ExactField::Velocity: return u_;
    case ExactField::CurlVelocity: return curl_u_;
    case ExactField::LaplaceCurlVelocity: return laplace_curl_u_;
    case ExactField::Source: return f_;
  }
  return u_;
}

Vec3 ExactFields::eval_derivative(ExactField field, const MultiIndex& alpha, const Vec3& x) const {
  check_order(alpha);
  return eval(qcurl::derivative(form(field), alpha), jet(x));
}

Vec3 ExactFields::value(const Vec3& x) const { return eval(u_, jet(x)); }

Vec3 ExactFields::derivative(const MultiIndex& alpha, const Vec3& x) const {
  check_order(alpha);
  return eval(u_partials_.at(alpha), jet(x));
}

Vec3 ExactFields::curl(const Vec3& x) const { return eval(curl_u_, jet(x)); }

Vec3 ExactFields::curl_derivative(const MultiIndex& alpha, const Vec3& x) const {
  check_order(alpha);
  return eval(curl_partials_.at(alpha), jet(x));
}

const ExactFields& manufactured_solution() {
  static const ExactFields fields;
  return fields;
}

}  // namespace qcurl
