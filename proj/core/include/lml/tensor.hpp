#pragma once

#include <string>
#include <vector>

namespace lml {

// Dense row-major array of doubles. Everything in this project is rank 1
// or rank 2; shape is kept general anyway.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  Tensor(std::vector<int> shape_in, std::vector<double> values);

  static Tensor zeros(const std::vector<int>& shape);
  static Tensor scalar(double x) { return Tensor({1}, {x}); }
  static Tensor vec(std::vector<double> values);

  int size() const { return static_cast<int>(v.size()); }
  int rows() const { return shape.empty() ? 0 : shape[0]; }
  int cols() const { return shape.size() < 2 ? 1 : shape[1]; }

  double& at(int i) { return v[static_cast<size_t>(i)]; }
  double at(int i) const { return v[static_cast<size_t>(i)]; }
  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols() + c]; }
  double at(int r, int c) const { return v[static_cast<size_t>(r) * cols() + c]; }

  void fill(double x);
  bool same_shape(const Tensor& other) const { return shape == other.shape; }
  bool all_finite() const;

  std::string shape_str() const;
};

// Product of dims; rejects empty shapes and non-positive dims.
long long shape_product(const std::vector<int>& shape);

}  // namespace lml
