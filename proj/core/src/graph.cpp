#include "lml/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace lml {

Node* Graph::make(OpKind op, std::vector<Node*> parents, Tensor value) {
  nodes_.push_back(Node{op, std::move(parents), std::move(value), Tensor{}, 0.0, Tensor{}, nullptr, nullptr});
  return &nodes_.back();
}

Node* Graph::input(Tensor t) { return make(OpKind::kInput, {}, std::move(t)); }

Node* Graph::parameter(ParameterSet& params, const std::string& name) {
  Tensor& value = params.value(name);
  auto it = param_nodes_.find(&value);
  if (it != param_nodes_.end()) return it->second;
  Node* n = make(OpKind::kParameter, {}, value);
  n->bound_value = &value;
  n->bound_grad = &params.grad(name);
  param_nodes_[&value] = n;
  return n;
}

Node* Graph::affine(Node* weights, Node* x, Node* bias) {
  const Tensor& W = weights->value;
  if (W.shape.size() != 2) throw std::invalid_argument("affine: weights must be rank 2");
  int out_dim = W.rows(), in_dim = W.cols();
  if (x->value.size() != in_dim) {
    throw std::invalid_argument("affine: weights " + W.shape_str() + " vs input " +
                                x->value.shape_str());
  }
  if (bias->value.size() != out_dim) {
    throw std::invalid_argument("affine: weights " + W.shape_str() + " vs bias " +
                                bias->value.shape_str());
  }
  Tensor y = Tensor::zeros({out_dim});
  for (int r = 0; r < out_dim; ++r) {
    const double* wr = &W.v[static_cast<size_t>(r) * in_dim];
    double acc = bias->value.at(r);
    for (int c = 0; c < in_dim; ++c) acc += wr[c] * x->value.at(c);
    y.at(r) = acc;
  }
  return make(OpKind::kAffine, {weights, x, bias}, std::move(y));
}

Node* Graph::relu(Node* x) {
  Tensor y = x->value;
  for (double& a : y.v) a = a > 0.0 ? a : 0.0;
  return make(OpKind::kRelu, {x}, std::move(y));
}

Node* Graph::tanh_(Node* x) {
  Tensor y = x->value;
  for (double& a : y.v) a = std::tanh(a);
  return make(OpKind::kTanh, {x}, std::move(y));
}

Node* Graph::softmax_t(Node* z, double temperature) {
  Tensor y = Tensor::zeros(z->value.shape);
  softmax_with_temperature(std::span<const double>(z->value.v), temperature,
                           std::span<double>(y.v));
  Node* n = make(OpKind::kSoftmaxT, {z}, std::move(y));
  n->scalar_arg = temperature;
  return n;
}

Node* Graph::log_softmax_t(Node* z, double temperature) {
  Tensor y = Tensor::zeros(z->value.shape);
  log_softmax_with_temperature(std::span<const double>(z->value.v), temperature,
                               std::span<double>(y.v));
  Node* n = make(OpKind::kLogSoftmaxT, {z}, std::move(y));
  n->scalar_arg = temperature;
  return n;
}

Node* Graph::add_n(const std::vector<Node*>& xs) {
  if (xs.empty()) throw std::invalid_argument("add_n: needs at least one input");
  Tensor y = xs[0]->value;
  for (size_t i = 1; i < xs.size(); ++i) {
    if (!xs[i]->value.same_shape(y)) throw std::invalid_argument("add_n: shape mismatch");
    for (int k = 0; k < y.size(); ++k) y.at(k) += xs[i]->value.at(k);
  }
  return make(OpKind::kAddN, xs, std::move(y));
}

Node* Graph::scale(Node* x, double factor) {
  Tensor y = x->value;
  for (double& a : y.v) a *= factor;
  Node* n = make(OpKind::kScale, {x}, std::move(y));
  n->scalar_arg = factor;
  return n;
}

Node* Graph::log_floor(Node* probs, double floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("log_floor: floor must be positive");
  Tensor y = probs->value;
  for (double& a : y.v) a = std::log(a > floor ? a : floor);
  Node* n = make(OpKind::kLogFloor, {probs}, std::move(y));
  n->scalar_arg = floor;
  return n;
}

Node* Graph::cross_entropy(Tensor one_hot_target, Node* log_probs) {
  if (one_hot_target.size() != log_probs->value.size()) {
    throw std::invalid_argument("cross_entropy: length mismatch");
  }
  int idx = one_hot_index(std::span<const double>(one_hot_target.v));
  Node* n = make(OpKind::kCrossEntropy, {log_probs},
                 Tensor::scalar(-log_probs->value.at(idx)));
  n->target = std::move(one_hot_target);
  return n;
}

Node* Graph::square(Node* x) {
  Tensor y = x->value;
  for (double& a : y.v) a *= a;
  return make(OpKind::kSquare, {x}, std::move(y));
}

Node* Graph::sum_all(Node* x) {
  double s = 0.0;
  for (double a : x->value.v) s += a;
  return make(OpKind::kSumAll, {x}, Tensor::scalar(s));
}

namespace {

void backward_one(Node& n) {
  const Tensor& g = n.grad;
  switch (n.op) {
    case OpKind::kInput:
    case OpKind::kParameter:
      break;
    case OpKind::kAffine: {
      Node* weights = n.parents[0];
      Node* x = n.parents[1];
      Node* bias = n.parents[2];
      int out_dim = weights->value.rows(), in_dim = weights->value.cols();
      for (int r = 0; r < out_dim; ++r) {
        double gr = g.at(r);
        double* gw = &weights->grad.v[static_cast<size_t>(r) * in_dim];
        const double* wr = &weights->value.v[static_cast<size_t>(r) * in_dim];
        double* gx = x->grad.v.data();
        const double* xv = x->value.v.data();
        for (int c = 0; c < in_dim; ++c) {
          gw[c] += gr * xv[c];
          gx[c] += gr * wr[c];
        }
        bias->grad.at(r) += gr;
      }
      break;
    }
    case OpKind::kRelu: {
      Node* x = n.parents[0];
      for (int i = 0; i < g.size(); ++i) {
        if (x->value.at(i) > 0.0) x->grad.at(i) += g.at(i);
      }
      break;
    }
    case OpKind::kTanh: {
      Node* x = n.parents[0];
      for (int i = 0; i < g.size(); ++i) {
        double y = n.value.at(i);
        x->grad.at(i) += (1.0 - y * y) * g.at(i);
      }
      break;
    }
    case OpKind::kSoftmaxT: {
      Node* z = n.parents[0];
      double inv_t = 1.0 / n.scalar_arg;
      double dot = 0.0;
      for (int i = 0; i < g.size(); ++i) dot += g.at(i) * n.value.at(i);
      for (int i = 0; i < g.size(); ++i) {
        z->grad.at(i) += inv_t * n.value.at(i) * (g.at(i) - dot);
      }
      break;
    }
    case OpKind::kLogSoftmaxT: {
      Node* z = n.parents[0];
      double inv_t = 1.0 / n.scalar_arg;
      double gsum = 0.0;
      for (int i = 0; i < g.size(); ++i) gsum += g.at(i);
      for (int i = 0; i < g.size(); ++i) {
        double p = std::exp(n.value.at(i));
        z->grad.at(i) += inv_t * (g.at(i) - p * gsum);
      }
      break;
    }
    case OpKind::kAddN: {
      for (Node* p : n.parents) {
        for (int i = 0; i < g.size(); ++i) p->grad.at(i) += g.at(i);
      }
      break;
    }
    case OpKind::kScale: {
      Node* x = n.parents[0];
      for (int i = 0; i < g.size(); ++i) x->grad.at(i) += n.scalar_arg * g.at(i);
      break;
    }
    case OpKind::kLogFloor: {
      Node* p = n.parents[0];
      for (int i = 0; i < g.size(); ++i) {
        double pv = p->value.at(i);
        if (pv >= n.scalar_arg) p->grad.at(i) += g.at(i) / pv;
      }
      break;
    }
    case OpKind::kCrossEntropy: {
      Node* logp = n.parents[0];
      int idx = one_hot_index(std::span<const double>(n.target.v));
      logp->grad.at(idx) -= g.at(0);
      break;
    }
    case OpKind::kSquare: {
      Node* x = n.parents[0];
      for (int i = 0; i < g.size(); ++i) x->grad.at(i) += 2.0 * x->value.at(i) * g.at(i);
      break;
    }
    case OpKind::kSumAll: {
      Node* x = n.parents[0];
      for (int i = 0; i < x->grad.size(); ++i) x->grad.at(i) += g.at(0);
      break;
    }
  }
}

}  // namespace

void Graph::backward(Node* loss, bool accumulate) {
  if (loss == nullptr || loss->value.size() != 1) {
    throw std::invalid_argument("backward: loss must be a scalar node");
  }
  for (Node& n : nodes_) {
    if (n.grad.same_shape(n.value)) {
      n.grad.fill(0.0);
    } else {
      n.grad = Tensor::zeros(n.value.shape);
    }
  }
  if (!accumulate) {
    for (auto& [value, node] : param_nodes_) node->bound_grad->fill(0.0);
  }
  loss->grad.at(0) = 1.0;
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) backward_one(*it);
  for (auto& [value, node] : param_nodes_) {
    Tensor& slot = *node->bound_grad;
    for (int i = 0; i < slot.size(); ++i) slot.at(i) += node->grad.at(i);
  }
}

void Graph::reset() {
  nodes_.clear();
  param_nodes_.clear();
}

}  // namespace lml
