#pragma once

#include "svlab/interventions.hpp"
#include "svlab/model.hpp"
#include "svlab/training.hpp"

#include <map>
#include <string>
#include <vector>

namespace svlab {

// Typical per-entry magnitude ||x||_2 / sqrt(n); the finite-width estimator
// of a coordinate-size exponent's base quantity.
Scalar coordinate_size(const Vector& x);

struct GammaFit {
  Scalar slope = 0.0;      // estimated exponent
  Scalar intercept = 0.0;  // log-space
  Scalar r2 = 0.0;
  std::vector<int> widths;
};

// Least squares of log(size) on log(width); needs >= 3 widths, all sizes > 0.
GammaFit fit_gamma(const std::vector<std::pair<int, Scalar>>& sizes);

// ---------------------------------------------------------------------------
// Monte-Carlo checks of the coordinate-size algebra.
// ---------------------------------------------------------------------------

struct LemmaResult {
  std::string id;
  std::string statement;
  Scalar predicted = 0.0;
  Scalar measured = 0.0;
  Scalar r2 = 0.0;
  bool pass = false;
};

std::vector<LemmaResult> lemma_suite(uint64_t seed, const std::vector<int>& widths, int trials,
                                     Scalar tolerance = 0.10);

// ---------------------------------------------------------------------------
// Feature tracing for joint training runs.
// ---------------------------------------------------------------------------

// Per-step coordinate sizes of the steering feature z_t and the additive
// components of its update, at one width.
struct FeatureTraceRow {
  int step = 0;  // 1-based update index
  Scalar size_z = 0.0;
  Scalar size_d1 = 0.0;  // factor-update component
  Scalar size_d2 = 0.0;  // direction-update component
  Scalar size_d3 = 0.0;  // composite component
  Scalar size_d4 = 0.0;  // clamp projection component (zero for Add)
  Scalar size_dz = 0.0;  // full feature update
  Scalar alpha_abs = 0.0;
  Scalar v_norm = 0.0;
  Scalar clamped_component = 0.0;  // |u . Phi_clamp(h)| (clamp only)
  Scalar grad_v_size = 0.0;        // Adam-processed direction gradient size
};

struct SVFeatureTrace {
  int width = 0;
  InterventionForm form = InterventionForm::Add;
  std::vector<FeatureTraceRow> rows;
};

// Derive the trace from raw parameter snapshots. `h_probe` is the frozen
// model's residual-stream row at the intervened layer (clamp features and
// d4 depend on it; pass an empty vector for Add). Verifies the component
// decomposition against the recomputed feature update to 1e-9.
SVFeatureTrace derive_feature_trace(const JointTrainTrace& raw, InterventionForm form,
                                    const Vector& h_probe, int width);

void write_trace_csv(const std::vector<SVFeatureTrace>& traces, const std::string& path);

// ---------------------------------------------------------------------------
// Stability / efficiency sweep.
// ---------------------------------------------------------------------------

// One parameterization: eta_v ~ n^{a_v}, eta_alpha ~ n^{a_alpha},
// coordinate size of v0 ~ n^{b_v}, alpha0 ~ n^{b_alpha}.
struct Parameterization {
  std::string name;
  Scalar a_v = -0.5;
  Scalar a_alpha = 0.5;
  Scalar b_v = -0.5;
  Scalar b_alpha = 0.5;
};

Parameterization recommended_parameterization();
// eta_alpha held constant while alpha0 still grows with width.
Parameterization misparameterized_constant_rate();
// Both alpha0 and eta_alpha held constant.
Parameterization misparameterized_constant_alpha();

struct ComponentSlopes {
  Scalar z = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0, dz = 0.0;
};

// Predicted exponents from the coordinate-size algebra (gradients assumed
// width-independent after Adam processing).
ComponentSlopes predicted_slopes(const Parameterization& p, InterventionForm form);

struct SweepConfig {
  std::vector<int> widths = {32, 64, 128, 256};
  int steps = 20;
  int trials = 5;         // independent training runs per width, medianed
  int layer = 2;
  InterventionForm form = InterventionForm::Add;
  Objective objective = Objective::Lang;
  Scalar c_v = 0.04;      // direction rate at the reference width
  Scalar c_alpha = 0.4;   // factor rate at the reference width
  Scalar lambda = 2.0;    // direction initialization size
  Scalar beta = 2.0;      // factor initialization size
  int n_ref = 128;
  int batch_size = 2;
  uint64_t seed = 7;
};

enum class StabilityClass { Stable, Unstable };

struct SweepPointResult {
  Parameterization point;
  std::vector<SVFeatureTrace> traces;  // trials x widths
  ComponentSlopes measured;
  ComponentSlopes predicted;
  Scalar r2_z = 0.0;
  Scalar grad_size_slope = 0.0;  // measured exponent of the Adam-processed grad
  bool diverged = false;
  bool stable = false;
  bool efficient = false;
};

// Runs joint training at every width with feature tracing and classifies the
// parameterization. Models are keyed by width and must be frozen; the same
// dataset is used at every width. STABLE: |slope(z)| <= 0.15. EFFICIENT:
// additionally every component slope within 0.15.
SweepPointResult run_sweep_point(const std::map<int, const TransformerLM*>& models,
                                 const std::vector<ConceptExample>& data,
                                 const Parameterization& point, const SweepConfig& cfg);

void write_fits_csv(const std::vector<SweepPointResult>& results, const std::string& path);
void write_classification_json(const std::vector<SweepPointResult>& results,
                               const std::string& path);

// Clamp-specific report: verifies the clamp identity (the component along u
// equals |alpha_t| * ||v_t||) at every traced step and fits the width slope
// of the d4 component.
struct ClampDelta4Report {
  Scalar max_identity_error = 0.0;
  GammaFit d4_fit;
  Scalar predicted = 0.0;  // 2*gamma[d_u] + 1 with gamma[d_u] = -1/2
};

ClampDelta4Report clamp_delta4_check(const std::vector<SVFeatureTrace>& traces);

// Exponent identities of the recommended point (the solution's equalities
// and inequalities, checked as exact arithmetic on the configured values).
bool satisfies_rate_identities(const Parameterization& p);

}  // namespace svlab
