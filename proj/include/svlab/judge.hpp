#pragma once

#include "svlab/interventions.hpp"
#include "svlab/model.hpp"
#include "svlab/tasks.hpp"

#include <map>
#include <string>
#include <vector>

namespace svlab {

// Judged component scores, each in [0,2]; overall is the harmonic mean and
// collapses to 0 when any component is 0.
struct ScoreTriple {
  Scalar concept_score = 0.0;
  Scalar instruct = 0.0;
  Scalar fluency = 0.0;
  Scalar overall = 0.0;
};

ScoreTriple make_score_triple(Scalar concept_score, Scalar instruct, Scalar fluency);

// Programmatic stand-in judge. Deterministic pure function of
// (response, instruction, task, base model): concept counts distinct marker
// tokens, instruct counts echoed instruction words, fluency compares the
// response's base-model perplexity against the base model's own-sample
// perplexity for the same instruction.
class Judge {
 public:
  Judge(const TransformerLM& base, const ConceptTask& task, uint64_t seed);

  ScoreTriple score(const std::string& instruction, const std::string& response) const;

  const ConceptTask& task() const { return task_; }
  const TransformerLM& base_model() const { return base_; }

 private:
  Scalar reference_ppl(const std::string& instruction) const;

  const TransformerLM& base_;
  const ConceptTask& task_;
  uint64_t seed_;
  mutable std::map<std::string, Scalar> ref_ppl_cache_;
};

struct EvalOptions {
  int max_tokens = 128;
  Scalar temperature = 1.0;
  uint64_t seed = 0;
};

struct EvalReport {
  std::string concept_id;
  std::string method;
  std::vector<std::string> instructions;
  std::vector<ScoreTriple> per_instruction;
  ScoreTriple mean;
  ScoreTriple stddev;
};

// Sampled steered generation for one instruction; empty string when
// generation yields no bytes.
std::string generate_response(const TransformerLM& model, const std::string& instruction,
                              const std::vector<StreamHook>& hooks, const EvalOptions& opts,
                              uint64_t decode_seed);

// Mean judged scores over the task's held-out instructions with the given
// steering vector active (alpha must be present or overridden).
EvalReport evaluate_sv(const TransformerLM& model, const SteeringVector& sv,
                       const InterventionSpec& spec, const ConceptTask& task, const Judge& judge,
                       const EvalOptions& opts, std::optional<Scalar> alpha_override = {});

// Same protocol with no intervention (the unsteered baseline).
EvalReport evaluate_unsteered(const TransformerLM& model, const ConceptTask& task,
                              const Judge& judge, const EvalOptions& opts);

// Pure argmax with the smallest-factor tie rule over injected mean scores.
Scalar select_factor_from_scores(const std::vector<Scalar>& grid,
                                 const std::vector<Scalar>& mean_scores);

struct FactorSelection {
  Scalar best_factor = 0.0;
  std::vector<Scalar> grid;
  std::vector<Scalar> mean_overall;  // per grid entry
};

// Inference-time factor selection: for each grid factor, sample one response
// per dev instruction, judge it, and average overall scores. A generation
// failure scores 0 for that (factor, instruction) pair.
FactorSelection select_factor(const TransformerLM& model, const SteeringVector& sv,
                              const InterventionSpec& spec, const std::vector<Scalar>& grid,
                              const std::vector<std::string>& dev_instructions,
                              const Judge& judge, const EvalOptions& opts);

Scalar cosine_similarity(const SteeringVector& a, const SteeringVector& b);

void write_eval_report_json(const EvalReport& report, uint64_t seed, const std::string& path);
void append_summary_csv(const EvalReport& report, const std::string& path);

}  // namespace svlab
