#pragma once

#include "svlab/interventions.hpp"
#include "svlab/model.hpp"
#include "svlab/objectives.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace svlab {

// Default factor sets used by the factor-sampling baseline and inference-time
// factor selection.
const std::vector<Scalar>& default_factor_sample_set();  // {2,4,...,20}
const std::vector<Scalar>& default_factor_search_grid(); // sample set + {25,30,40,50}

struct TrainConfig {
  Objective objective = Objective::Lang;
  Scalar eta_v = 0.04;                 // direction learning rate (absolute)
  std::optional<Scalar> eta_alpha;     // set => joint training
  Scalar lambda_init = 1.0;            // direction initialization size
  Scalar beta_init = 2.0;              // factor initialization size
  int steps = 200;
  int batch_size = 4;
  uint64_t seed = 0;
  std::optional<std::vector<Scalar>> factor_sample_set;  // set => factor sampling
  std::optional<Scalar> fixed_factor;                    // set => fixed factor

  enum class Mode { Joint, FactorSampling, FixedFactor };
  Mode mode() const;
  void validate() const;
  std::string summary() const;
};

// Learning-rate anchoring: rate(n) = c * (n / n_ref)^exponent.
Scalar scaled_rate(Scalar c, Scalar exponent, int n, int n_ref = 128);

// Per-step parameter snapshots for the scaling lab. Index 0 is the
// initialization; entry t is the state after step t.
struct JointTrainTrace {
  std::vector<Scalar> alpha;
  std::vector<Vector> v;
  std::vector<Scalar> grad_v_coordinate_size;  // Adam-processed, per step
  std::vector<Scalar> grad_alpha_abs;          // Adam-processed, per step
};

// Joint training of steering factor and direction (both Adam-processed,
// constant rates, no warmup). Returns the trained steering vector; the
// frozen model is never modified.
SteeringVector joint_train(const TransformerLM& model, const std::vector<ConceptExample>& data,
                           const TrainConfig& config, const InterventionSpec& spec,
                           JointTrainTrace* trace = nullptr);

// Direction-only training with a steering factor drawn uniformly from the
// sample set each step. The returned vector carries no factor; inference
// requires factor selection.
SteeringVector factor_sampling_train(const TransformerLM& model,
                                     const std::vector<ConceptExample>& data,
                                     const TrainConfig& config, const InterventionSpec& spec);

// Optimization-free direction: mean(positive) - mean(negative).
Vector diffmean(const std::vector<Vector>& positive_reps,
                const std::vector<Vector>& negative_reps);

// Residual-stream representation at `layer`, mean-pooled over the full
// chat-formatted sequence (prompt + response).
Vector mean_representation(const TransformerLM& model, int layer,
                           const std::string& instruction, const std::string& response);

}  // namespace svlab
