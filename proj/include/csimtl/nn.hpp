#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csimtl/layers.hpp"
#include "csimtl/params.hpp"
#include "csimtl/tensor.hpp"

namespace csimtl {

// All engine tensors carry an explicit leading batch dimension.

// Mean over all elements of the squared difference.
double loss_mse(const Tensor& pred, const Tensor& target);

// Inference-mode evaluation (batch-norm uses running statistics). Pure.
Tensor forward(const LayerStack& stack, const ParamSet& params, const Tensor& input);

struct BackwardResult {
    double loss = 0.0;
    // Gradient entries exactly for the trainable, unfrozen parameters; names
    // and dims match the corresponding ParamSet entries.
    ParamSet grads;
    // Batch-norm running-statistic updates produced by the training-mode
    // forward pass, to be applied after the optimizer step.
    std::vector<std::pair<std::string, Tensor>> stat_updates;
};

// Training-mode forward + MSE loss + reverse-mode gradients. Pure: the input
// ParamSet is not modified.
BackwardResult backward(const LayerStack& stack, const ParamSet& params, const Tensor& input,
                        const Tensor& target);

void apply_stat_updates(ParamSet& params, const std::vector<std::pair<std::string, Tensor>>& updates);

// Training-mode loss only (the objective backward() differentiates).
double training_loss(const LayerStack& stack, const ParamSet& params, const Tensor& input,
                     const Tensor& target);

// Central-difference gradient check against backward(). The difference
// quotient is evaluated in double precision. Returns
// max over parameters of |analytic - fd| / max(|fd|, 1e-6); 0 when the stack
// has no optimizable parameters.
double check_gradients(const LayerStack& stack, const ParamSet& params, const Tensor& input,
                       const Tensor& target, double step = 1e-3);

}  // namespace csimtl
