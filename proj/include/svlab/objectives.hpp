#pragma once

#include "svlab/autodiff.hpp"
#include "svlab/interventions.hpp"
#include "svlab/model.hpp"

#include <optional>
#include <string>

namespace svlab {

struct ConceptExample {
  std::string concept_id;
  std::string instruction;
  std::optional<std::string> response_neutral;  // y, preference objectives only
  std::string response_steered;                 // y^c
};

enum class Objective { Lang, SimPO, RePS };

std::string to_string(Objective o);
Objective objective_from_string(const std::string& s);

// Trainable steering parameters as tape leaves (alpha 1x1, v_row 1xN).
struct SteeringVars {
  Var alpha;
  Var v_row;
};

// Reference log-prob gaps, computed once per example on the frozen,
// un-intervened model and cached by the trainer.
// beta_plus  = max(log p(y|x) - log p(y^c|x), 1)
// beta_minus = max(log p(y^c|x) - log p(y|x), 1)
struct ReferenceGaps {
  Scalar beta_plus = 1.0;
  Scalar beta_minus = 1.0;
};
ReferenceGaps reference_gaps(const TransformerLM& model, const ConceptExample& ex);

// Token-summed response-only negative log-likelihood of the steered
// response under the intervention. Differentiable in alpha and v.
Var lang_loss(Tape& tape, const TransformerLM& model, const SteeringVars& sv,
              const InterventionSpec& spec, const ConceptExample& ex);

// -log sigmoid(Delta+), the concept-steering preference term with the
// addition intervention active on both responses; length-normalized.
Var simpo_positive(Tape& tape, const TransformerLM& model, const SteeringVars& sv,
                   const InterventionSpec& spec, const ConceptExample& ex,
                   const ReferenceGaps& gaps);

// -[log sigmoid(Delta+) + log sigmoid(Delta-)]; the suppression term uses
// the orthogonalizing intervention, so alpha only receives gradient from
// the positive term.
Var reps_loss(Tape& tape, const TransformerLM& model, const SteeringVars& sv,
              const InterventionSpec& spec, const ConceptExample& ex,
              const ReferenceGaps& gaps);

// Shared helper: log p_Phi(response | prompt) as a 1x1 tape node, with the
// given intervention form applied per the spec's location policy.
Var intervened_logprob(Tape& tape, const TransformerLM& model, const SteeringVars& sv,
                       InterventionForm form, const InterventionSpec& spec,
                       const std::string& instruction, const std::string& response);

// Same losses with the low-rank intervention in place of a steering vector.
Var lang_loss_loreft(Tape& tape, const TransformerLM& model, const LoReFTVars& vars,
                     const InterventionSpec& spec, const ConceptExample& ex);

}  // namespace svlab
