#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lml/tensor.hpp"

namespace lml {

// ---------------------------------------------------------------------------
// Numeric kernels
// ---------------------------------------------------------------------------

// Temperature softmax, max-subtraction stabilized: out_c = exp(z_c/T) / sum_k exp(z_k/T).
// Rejects T <= 0, non-finite input, and vectors shorter than 2.
void softmax_with_temperature(std::span<const double> z, double temperature, std::span<double> out);
std::vector<double> softmax_with_temperature(const std::vector<double>& z, double temperature);

// log(softmax_with_temperature(z, T)) computed without forming probabilities.
void log_softmax_with_temperature(std::span<const double> z, double temperature, std::span<double> out);
std::vector<double> log_softmax_with_temperature(const std::vector<double>& z, double temperature);

// Column sums of an instances-by-classes matrix. Rejects an empty matrix.
std::vector<double> sum_over_instances(const std::vector<std::vector<double>>& rows);

// -sum_c target_c * log_probs_c for an exactly one-hot target.
double cross_entropy(const std::vector<double>& one_hot_target, const std::vector<double>& log_probs);

// Index of the largest component; lowest index wins exact ties.
int argmax_lowest(std::span<const double> v);
int argmax_lowest_int(std::span<const int> v);

// True iff every component is exactly 0.0 or 1.0 and exactly one is 1.0.
bool is_one_hot(std::span<const double> v);
int one_hot_index(std::span<const double> v);  // validates, returns the hot index

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

// Named parameter tensors with insertion-order iteration and a gradient
// slot of the same shape per tensor. Iteration order is deterministic
// given the construction sequence.
class ParameterSet {
 public:
  struct Entry {
    std::string name;
    Tensor value;
    Tensor grad;
  };

  Tensor& add(const std::string& name, Tensor value);
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Tensor& value(const std::string& name);
  const Tensor& value(const std::string& name) const;
  Tensor& grad(const std::string& name);
  const Tensor& grad(const std::string& name) const;

  std::vector<Entry>& entries() { return entries_; }
  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  size_t scalar_count() const;
  void zero_grads();

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// ---------------------------------------------------------------------------
// Fully connected backbone
// ---------------------------------------------------------------------------

enum class Nonlinearity { kRelu, kTanh };

const char* nonlinearity_name(Nonlinearity n);

struct MlpArchitecture {
  int input_dim = 0;
  std::vector<int> hidden = {64, 64};
  int output_dim = 0;
  Nonlinearity nonlinearity = Nonlinearity::kRelu;

  // {input_dim, hidden..., output_dim}
  std::vector<int> widths() const;
  int num_layers() const { return static_cast<int>(hidden.size()) + 1; }
  void validate() const;
  bool operator==(const MlpArchitecture&) const = default;
};

// Layer k gets weights "wk" of shape {out,in} (uniform in [-a,a] with
// a = sqrt(6/(fan_in+fan_out))) and biases "bk" initialized to zero.
void init_mlp_params(ParameterSet& params, const MlpArchitecture& arch, uint64_t seed);

// Straight affine/nonlinearity chain; the nonlinearity is applied between
// layers, never after the last one. Pure function of (params, x).
std::vector<double> forward_mlp(const ParameterSet& params, const MlpArchitecture& arch,
                                const std::vector<double>& x);

}  // namespace lml
