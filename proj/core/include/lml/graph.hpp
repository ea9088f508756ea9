#pragma once

#include <deque>
#include <unordered_map>
#include <vector>

#include "lml/nn.hpp"
#include "lml/tensor.hpp"

namespace lml {

enum class OpKind {
  kInput,
  kParameter,
  kAffine,       // W x + b
  kRelu,
  kTanh,
  kSoftmaxT,     // scalar_arg = temperature
  kLogSoftmaxT,  // scalar_arg = temperature
  kAddN,
  kScale,        // scalar_arg = factor
  kLogFloor,     // scalar_arg = probability floor
  kCrossEntropy, // target holds the one-hot vector
  kSquare,
  kSumAll,
};

struct Node {
  OpKind op;
  std::vector<Node*> parents;
  Tensor value;
  Tensor grad;               // same shape as value; (re)initialized by backward()
  double scalar_arg = 0.0;
  Tensor target;             // kCrossEntropy only
  Tensor* bound_value = nullptr;  // kParameter only
  Tensor* bound_grad = nullptr;
};

// Records a computation for reverse-mode differentiation. Creation order
// is a valid topological order (parents are required to exist first), so
// backward() visits each node exactly once in reverse creation order.
// Graphs are single-threaded; independent graphs may run in parallel.
class Graph {
 public:
  Node* input(Tensor t);
  // Binds a ParameterSet entry. The same entry always maps to the same
  // node within one graph, so its gradient is written exactly once.
  Node* parameter(ParameterSet& params, const std::string& name);

  Node* affine(Node* weights, Node* x, Node* bias);
  Node* relu(Node* x);
  Node* tanh_(Node* x);
  Node* softmax_t(Node* z, double temperature);
  Node* log_softmax_t(Node* z, double temperature);
  Node* add_n(const std::vector<Node*>& xs);
  Node* scale(Node* x, double factor);
  Node* log_floor(Node* probs, double floor);
  Node* cross_entropy(Tensor one_hot_target, Node* log_probs);
  Node* square(Node* x);
  Node* sum_all(Node* x);

  // dloss/dp for every bound parameter, written into its ParameterSet
  // gradient slot. Slots are zeroed first unless accumulate is set.
  // Rejects a non-scalar loss.
  void backward(Node* loss, bool accumulate = false);

  void reset();
  size_t node_count() const { return nodes_.size(); }

 private:
  Node* make(OpKind op, std::vector<Node*> parents, Tensor value);
  std::deque<Node> nodes_;  // stable addresses
  std::unordered_map<const Tensor*, Node*> param_nodes_;
};

}  // namespace lml
