#include "lml/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lml {

long long shape_product(const std::vector<int>& shape) {
  if (shape.empty()) throw std::invalid_argument("Tensor shape must not be empty");
  long long n = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("Tensor dims must be positive, got " + std::to_string(d));
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<int> shape_in, std::vector<double> values)
    : shape(std::move(shape_in)), v(std::move(values)) {
  if (shape_product(shape) != static_cast<long long>(v.size())) {
    throw std::invalid_argument("Tensor shape " + shape_str() + " does not match " +
                                std::to_string(v.size()) + " values");
  }
}

Tensor Tensor::zeros(const std::vector<int>& shape) {
  return Tensor(shape, std::vector<double>(static_cast<size_t>(shape_product(shape)), 0.0));
}

Tensor Tensor::vec(std::vector<double> values) {
  int n = static_cast<int>(values.size());
  return Tensor({n}, std::move(values));
}

void Tensor::fill(double x) { std::fill(v.begin(), v.end(), x); }

bool Tensor::all_finite() const {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << ")";
  return os.str();
}

}  // namespace lml
