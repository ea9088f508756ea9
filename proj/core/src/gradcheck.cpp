#include "lml/gradcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace lml {

namespace {

double eval_loss(const LossBuilder& fn, ParameterSet& point) {
  Graph g;
  Node* loss = fn(g, point);
  if (loss == nullptr || loss->value.size() != 1) {
    throw std::invalid_argument("finite_difference_check: fn must produce a scalar");
  }
  return loss->value.at(0);
}

}  // namespace

double finite_difference_check(const LossBuilder& fn, ParameterSet& point, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite_difference_check: step must be positive");

  Graph g;
  Node* loss = fn(g, point);
  g.backward(loss);
  std::vector<std::vector<double>> analytic;
  analytic.reserve(point.size());
  for (const auto& e : point.entries()) analytic.push_back(e.grad.v);

  double max_err = 0.0;
  for (size_t p = 0; p < point.entries().size(); ++p) {
    Tensor& value = point.entries()[p].value;
    for (size_t i = 0; i < value.v.size(); ++i) {
      double saved = value.v[i];
      value.v[i] = saved + step;
      double up = eval_loss(fn, point);
      value.v[i] = saved - step;
      double down = eval_loss(fn, point);
      value.v[i] = saved;
      double numeric = (up - down) / (2.0 * step);
      double a = analytic[p][i];
      double err = std::fabs(a - numeric) / std::max(1e-8, std::fabs(a) + std::fabs(numeric));
      max_err = std::max(max_err, err);
    }
  }
  return max_err;
}

}  // namespace lml
