#pragma once

#include "svlab/autodiff.hpp"

#include <string>

namespace svlab {

struct AdamConfig {
  Scalar beta1 = 0.9;
  Scalar beta2 = 0.999;
  Scalar epsilon = 1e-8;
};

// Per-parameter Adam moments. Buffers are allocated to the parameter shape
// on the first step; step_count advances by exactly one per update.
struct AdamState {
  Matrix first_moment;
  Matrix second_moment;
  long step_count = 0;
  AdamConfig cfg;
};

// Bias-corrected in-place Adam update: param -= lr * m_hat / (sqrt(v_hat) + eps).
// Throws std::runtime_error naming `param_name` on non-finite gradient entries.
void adam_step(Matrix& param, const Matrix& grad, AdamState& state, Scalar lr,
               const std::string& param_name);

// The Adam-processed gradient m_hat / (sqrt(v_hat) + eps) for the step that
// `adam_step` would take; used where the update direction itself is traced.
Matrix adam_processed_gradient(const Matrix& grad, AdamState& state,
                               const std::string& param_name);

}  // namespace svlab
