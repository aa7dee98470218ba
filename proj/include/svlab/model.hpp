#pragma once

#include "svlab/autodiff.hpp"
#include "svlab/tokenizer.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace svlab {

struct ModelConfig {
  int width = 128;       // n
  int depth = 4;         // L
  int heads = 4;         // H, must divide width
  int mlp_multiplier = 4;
  int vocab_size = kVocabSize;
  int max_context = 256;
  uint64_t seed = 0;

  void validate() const;
};

// Multiply-add level FLOP ledger for the fast inference path. Categories
// mirror the closed-form cost split: per-token projections/MLP vs
// context-length-dependent attention work. Embedding/norm/logit work goes
// to `other` and is excluded from formula comparisons.
struct FlopCounter {
  long long attn_proj = 0;  // q/k/v/o projections
  long long attn_kv = 0;    // score and value reductions against the context
  long long softmax = 0;
  long long mlp = 0;
  long long other = 0;
  long long core_total() const { return attn_proj + attn_kv + softmax + mlp; }
};

// Per-layer key/value buffers, one row per appended position.
struct KVCache {
  std::vector<Matrix> keys;    // depth x (len x width)
  std::vector<Matrix> values;  // depth x (len x width)
  int length = 0;
};

// Callback applied to the output residual stream of block `layer` in the
// fast (value-only) path; receives the designated rows in place.
struct StreamHook {
  int layer = 0;
  // Prefill: 0-based absolute positions to edit. Decode: ignored.
  std::vector<int> prefill_positions;
  // Apply to every newly decoded position as well (full-sequence mode).
  bool decode_positions = false;
  std::function<void(Eigen::Ref<Matrix> rows)> apply;
};

// Tape-path counterpart: edits selected rows of the block output so that
// gradients flow through the edit into its parameters.
struct TapeHook {
  int layer = 0;
  std::vector<int> positions;  // 0-based rows of the forward sequence
  std::function<Var(Tape&, Var rows)> apply;
};

struct PrefillResult {
  Vector last_logits;  // vocab-sized logits at the final prompt position
  KVCache cache;
};

enum class SamplerKind { Greedy, Temperature };

struct Sampler {
  SamplerKind kind = SamplerKind::Greedy;
  Scalar temperature = 1.0;
  uint64_t seed = 0;
};

struct DecodeResult {
  std::vector<int> tokens;
  bool truncated = false;  // hit max_context before `steps` tokens
  bool hit_eos = false;
  Vector final_logits;     // logits for the next token after the last step
};

struct PretrainReport {
  Scalar initial_loss = 0.0;
  Scalar final_loss = 0.0;
  int steps = 0;
  // ||h||_2 / sqrt(n) at the default intervention layer, averaged over a
  // probe batch after training.
  Scalar residual_coordinate_size = 0.0;
};

// Minimal pre-norm decoder-only transformer with RMS normalization, learned
// absolute positions and a byte vocabulary. Parameters are plain matrices;
// the tape path rebuilds leaves per step, the fast path reads them directly.
class TransformerLM {
 public:
  struct LayerParams {
    Matrix wq, wk, wv, wo;    // width x width
    Matrix w_up;              // width x (mlp*width)
    Matrix w_down;            // (mlp*width) x width
    Matrix g_attn, g_mlp;     // 1 x width RMS gains
  };

  struct Params {
    Matrix tok_emb;  // vocab x width
    Matrix pos_emb;  // max_context x width
    std::vector<LayerParams> layers;
    Matrix g_final;  // 1 x width
    Matrix w_out;    // width x vocab
  };

  static TransformerLM init(const ModelConfig& cfg);
  // Assemble a model from explicit parameters (checkpoint tooling, tests).
  static TransformerLM from_params(const ModelConfig& cfg, Params params);

  const ModelConfig& config() const { return cfg_; }
  const Params& params() const { return params_; }
  bool frozen() const { return frozen_; }
  void freeze() { frozen_ = true; }

  // --- differentiable path -------------------------------------------------
  // Leaf handles for the model weights when they are trainable.
  struct ParamVars {
    Var tok_emb, pos_emb, g_final, w_out;
    struct Layer {
      Var wq, wk, wv, wo, w_up, w_down, g_attn, g_mlp;
    };
    std::vector<Layer> layers;
  };

  // Weight leaves on a tape, shared by any number of forwards on that tape.
  ParamVars make_param_leaves(Tape& tape, bool trainable) const;

  // Full forward over `tokens` using the given weight leaves, returning
  // T x vocab logits. Hooks edit the output residual stream of their block
  // for their rows. The model itself is never written, so concurrent
  // forwards on a shared model are safe.
  Var forward_with(Tape& tape, const ParamVars& pv, const std::vector<int>& tokens,
                   const std::vector<TapeHook>& hooks = {}) const;

  // Convenience: frozen-weight forward (weights as constants).
  Var forward(Tape& tape, const std::vector<int>& tokens,
              const std::vector<TapeHook>& hooks = {}) const;

  // --- fast inference path -------------------------------------------------
  // Cache-free forward returning logits at every position.
  Matrix forward_logits(const std::vector<int>& tokens,
                        const std::vector<StreamHook>& hooks = {},
                        FlopCounter* flops = nullptr) const;

  PrefillResult prefill(const std::vector<int>& prompt,
                        const std::vector<StreamHook>& hooks = {},
                        FlopCounter* flops = nullptr) const;

  DecodeResult decode(KVCache& cache, Vector last_logits, int steps,
                      const std::vector<StreamHook>& hooks, const Sampler& sampler,
                      FlopCounter* flops = nullptr) const;

  // Mean negative log-likelihood per response token of `response` given the
  // chat prompt, on the un-intervened model.
  Scalar response_nll(const std::vector<int>& prompt,
                      const std::vector<int>& response) const;

  // --- training ------------------------------------------------------------
  struct PretrainOptions {
    int steps = 300;
    int batch_size = 8;
    int window = 48;  // training window length
    Scalar lr = 1e-3;
    uint64_t seed = 1;
  };

  // Next-token pretraining over fixed windows of the concatenated corpus.
  // Freezes the model afterwards (0 steps freezes the initialized model).
  PretrainReport pretrain(const std::vector<std::vector<int>>& corpus,
                          const PretrainOptions& opts);

  // FNV-1a over raw parameter bytes; used to assert frozen weights stay put.
  uint64_t param_fingerprint() const;

  // --- persistence ----------------------------------------------------------
  void save(const std::string& path) const;
  static TransformerLM load(const std::string& path);

 private:
  TransformerLM() = default;
  void check_hook_layers(int layer) const;

  ModelConfig cfg_;
  Params params_;
  bool frozen_ = false;
};

}  // namespace svlab
