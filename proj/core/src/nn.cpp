#include "lml/nn.hpp"

#include <cmath>
#include <stdexcept>

#include "lml/rng.hpp"

namespace lml {

namespace {

void check_softmax_input(std::span<const double> z, double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("softmax temperature must be positive, got " +
                                std::to_string(temperature));
  }
  if (z.size() < 2) throw std::invalid_argument("softmax input needs at least 2 components");
  for (double x : z) {
    if (!std::isfinite(x)) throw std::invalid_argument("softmax input must be finite");
  }
}

}  // namespace

void softmax_with_temperature(std::span<const double> z, double temperature, std::span<double> out) {
  check_softmax_input(z, temperature);
  double m = z[0];
  for (double x : z) m = std::max(m, x);
  double sum = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    out[i] = std::exp((z[i] - m) / temperature);
    sum += out[i];
  }
  for (size_t i = 0; i < z.size(); ++i) out[i] /= sum;
}

std::vector<double> softmax_with_temperature(const std::vector<double>& z, double temperature) {
  std::vector<double> out(z.size());
  softmax_with_temperature(std::span<const double>(z), temperature, std::span<double>(out));
  return out;
}

void log_softmax_with_temperature(std::span<const double> z, double temperature, std::span<double> out) {
  check_softmax_input(z, temperature);
  double m = z[0];
  for (double x : z) m = std::max(m, x);
  double sum = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    out[i] = (z[i] - m) / temperature;
    sum += std::exp(out[i]);
  }
  double lse = std::log(sum);
  for (size_t i = 0; i < z.size(); ++i) out[i] -= lse;
}

std::vector<double> log_softmax_with_temperature(const std::vector<double>& z, double temperature) {
  std::vector<double> out(z.size());
  log_softmax_with_temperature(std::span<const double>(z), temperature, std::span<double>(out));
  return out;
}

std::vector<double> sum_over_instances(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("sum_over_instances: a bag must be non-empty");
  std::vector<double> out(rows[0].size(), 0.0);
  for (const auto& row : rows) {
    if (row.size() != out.size()) {
      throw std::invalid_argument("sum_over_instances: ragged rows");
    }
    for (size_t c = 0; c < row.size(); ++c) out[c] += row[c];
  }
  return out;
}

double cross_entropy(const std::vector<double>& one_hot_target, const std::vector<double>& log_probs) {
  if (one_hot_target.size() != log_probs.size()) {
    throw std::invalid_argument("cross_entropy: length mismatch");
  }
  int idx = one_hot_index(one_hot_target);
  return -log_probs[static_cast<size_t>(idx)];
}

int argmax_lowest(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("argmax of empty vector");
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return static_cast<int>(best);
}

int argmax_lowest_int(std::span<const int> v) {
  if (v.empty()) throw std::invalid_argument("argmax of empty vector");
  size_t best = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return static_cast<int>(best);
}

bool is_one_hot(std::span<const double> v) {
  int ones = 0;
  for (double x : v) {
    if (x == 1.0) {
      ++ones;
    } else if (x != 0.0) {
      return false;
    }
  }
  return ones == 1;
}

int one_hot_index(std::span<const double> v) {
  if (!is_one_hot(v)) throw std::invalid_argument("target is not exactly one-hot");
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1.0) return static_cast<int>(i);
  }
  return -1;  // unreachable
}

Tensor& ParameterSet::add(const std::string& name, Tensor value) {
  if (index_.count(name)) throw std::invalid_argument("duplicate parameter name: " + name);
  index_[name] = entries_.size();
  Tensor grad = Tensor::zeros(value.shape);
  entries_.push_back(Entry{name, std::move(value), std::move(grad)});
  return entries_.back().value;
}

Tensor& ParameterSet::value(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown parameter: " + name);
  return entries_[it->second].value;
}

const Tensor& ParameterSet::value(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown parameter: " + name);
  return entries_[it->second].value;
}

Tensor& ParameterSet::grad(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown parameter: " + name);
  return entries_[it->second].grad;
}

const Tensor& ParameterSet::grad(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown parameter: " + name);
  return entries_[it->second].grad;
}

size_t ParameterSet::scalar_count() const {
  size_t n = 0;
  for (const auto& e : entries_) n += e.value.v.size();
  return n;
}

void ParameterSet::zero_grads() {
  for (auto& e : entries_) e.grad.fill(0.0);
}

const char* nonlinearity_name(Nonlinearity n) {
  switch (n) {
    case Nonlinearity::kRelu: return "relu";
    case Nonlinearity::kTanh: return "tanh";
  }
  return "?";
}

std::vector<int> MlpArchitecture::widths() const {
  std::vector<int> w;
  w.push_back(input_dim);
  w.insert(w.end(), hidden.begin(), hidden.end());
  w.push_back(output_dim);
  return w;
}

void MlpArchitecture::validate() const {
  if (input_dim < 1) throw std::invalid_argument("MLP input_dim must be >= 1");
  if (output_dim < 2) throw std::invalid_argument("MLP output_dim must be >= 2");
  for (int h : hidden) {
    if (h < 1) throw std::invalid_argument("MLP hidden widths must be >= 1");
  }
}

void init_mlp_params(ParameterSet& params, const MlpArchitecture& arch, uint64_t seed) {
  arch.validate();
  Rng rng(seed);
  auto w = arch.widths();
  for (size_t layer = 0; layer + 1 < w.size(); ++layer) {
    int fan_in = w[layer];
    int fan_out = w[layer + 1];
    double a = std::sqrt(6.0 / (fan_in + fan_out));
    Tensor weights = Tensor::zeros({fan_out, fan_in});
    for (double& x : weights.v) x = rng.uniform(-a, a);
    params.add("w" + std::to_string(layer), std::move(weights));
    params.add("b" + std::to_string(layer), Tensor::zeros({fan_out}));
  }
}

std::vector<double> forward_mlp(const ParameterSet& params, const MlpArchitecture& arch,
                                const std::vector<double>& x) {
  arch.validate();
  if (static_cast<int>(x.size()) != arch.input_dim) {
    throw std::invalid_argument("forward_mlp: expected input of length " +
                                std::to_string(arch.input_dim) + ", got " +
                                std::to_string(x.size()));
  }
  std::vector<double> act = x;
  auto w = arch.widths();
  for (size_t layer = 0; layer + 1 < w.size(); ++layer) {
    const Tensor& weights = params.value("w" + std::to_string(layer));
    const Tensor& bias = params.value("b" + std::to_string(layer));
    if (weights.rows() != w[layer + 1] || weights.cols() != w[layer]) {
      throw std::invalid_argument("forward_mlp: weight w" + std::to_string(layer) + " has shape " +
                                  weights.shape_str() + ", expected (" +
                                  std::to_string(w[layer + 1]) + "," + std::to_string(w[layer]) + ")");
    }
    std::vector<double> next(static_cast<size_t>(weights.rows()));
    for (int r = 0; r < weights.rows(); ++r) {
      const double* wr = &weights.v[static_cast<size_t>(r) * weights.cols()];
      double acc = bias.at(r);
      for (int c = 0; c < weights.cols(); ++c) acc += wr[c] * act[static_cast<size_t>(c)];
      next[static_cast<size_t>(r)] = acc;
    }
    bool last = (layer + 2 == w.size());
    if (!last) {
      for (double& a : next) {
        a = arch.nonlinearity == Nonlinearity::kRelu ? (a > 0.0 ? a : 0.0) : std::tanh(a);
      }
    }
    act = std::move(next);
  }
  return act;
}

}  // namespace lml
