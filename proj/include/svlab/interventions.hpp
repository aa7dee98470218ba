#pragma once

#include "svlab/autodiff.hpp"
#include "svlab/model.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svlab {

enum class InterventionForm { Add, Clamp, Null, LoReFT };
enum class LocationMode { FullSequence, PromptOnly, FullPrompt };

std::string to_string(InterventionForm f);
std::string to_string(LocationMode m);
InterventionForm intervention_form_from_string(const std::string& s);
LocationMode location_mode_from_string(const std::string& s);

struct InterventionSpec {
  InterventionForm form = InterventionForm::Add;
  LocationMode location = LocationMode::FullSequence;
  int prefix = 0;  // p, PromptOnly only
  int suffix = 0;  // s, PromptOnly only
  int layer = 0;
  int loreft_rank = 1;

  void validate() const;
  // Parse "2f+2l", "full-prompt", "full-sequence".
  static InterventionSpec parse_location(const std::string& text, InterventionForm form,
                                         int layer);
  std::string location_string() const;
};

struct ResolvedLocations {
  std::vector<int> prompt_positions;  // sorted, 1-based, deduplicated
  bool every_decoded_position = false;
};

// Position set over a prompt of length m. PromptOnly yields the union of the
// first p and last s prompt positions; p or s beyond m saturates.
ResolvedLocations resolve_locations(int prompt_len, const InterventionSpec& spec);

// Trainable low-rank intervention parameters; `u` must keep orthonormal
// columns (re-orthonormalize after optimizer steps).
struct LoReFTParams {
  Matrix u;  // n x r, orthonormal columns
  Matrix w;  // n x r
  Vector b;  // r

  static LoReFTParams init(int n, int r, uint64_t seed);
  void check_orthonormal(Scalar tol = 1e-6) const;
  void re_orthonormalize();
};

struct SteeringVector {
  Vector direction;              // v, n entries
  std::optional<Scalar> alpha;   // unset for factor-sampling-trained SVs
  int layer = 0;
  int width = 0;
  std::string concept_id;
  std::string objective;
  std::string train_config_hash;
  uint64_t seed = 0;

  Vector unit() const;  // v / ||v||, throws on zero direction
};

// ---------------------------------------------------------------------------
// Intervention functional forms as pure functions of a representation row.
// ---------------------------------------------------------------------------

Vector add_inv(const Vector& h, Scalar alpha, const Vector& v);
Vector clamp_inv(const Vector& h, Scalar alpha, const Vector& v);
Vector null_inv(const Vector& h, const Vector& v);
Vector loreft_inv(const Vector& h, const LoReFTParams& params);

// ---------------------------------------------------------------------------
// Hook builders.
// ---------------------------------------------------------------------------

// Inference-path hooks for a complete steering vector (alpha required except
// for Null). `prompt_len` is m; decode application follows the location mode.
std::vector<StreamHook> make_stream_hooks(const SteeringVector& sv,
                                          const InterventionSpec& spec, int prompt_len,
                                          std::optional<Scalar> alpha_override = {});

// Training-path hook: applies the form to the designated rows with tape
// variables so gradients reach alpha / v / LoReFT parameters.
// `alpha` is a 1x1 Var; `v_row` is 1xN. For Null, alpha is ignored.
TapeHook steering_tape_hook(Var alpha, Var v_row, InterventionForm form, int layer,
                            std::vector<int> rows0based);

struct LoReFTVars {
  Var u;  // n x r
  Var w;  // n x r
  Var b;  // 1 x r
};
TapeHook loreft_tape_hook(const LoReFTVars& vars, int layer, std::vector<int> rows0based);

// ---------------------------------------------------------------------------
// SV checkpoint file (JSON), bit-exact for alpha and direction.
// ---------------------------------------------------------------------------

void save_sv(const SteeringVector& sv, const InterventionSpec& spec, const std::string& path);
struct LoadedSV {
  SteeringVector sv;
  InterventionSpec spec;
};
LoadedSV load_sv(const std::string& path);

}  // namespace svlab
