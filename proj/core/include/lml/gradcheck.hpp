#pragma once

#include <functional>

#include "lml/graph.hpp"
#include "lml/nn.hpp"

namespace lml {

// Builds the loss for the current parameter values. Must be pure in
// (graph, params): it is re-evaluated many times at perturbed points.
using LossBuilder = std::function<Node*(Graph&, ParameterSet&)>;

// Central-difference check of the analytic gradients of fn at `point`.
// Returns max over parameter components of
//   |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
double finite_difference_check(const LossBuilder& fn, ParameterSet& point, double step);

}  // namespace lml
