#pragma once

#include "svlab/objectives.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace svlab {

// Synthetic concept task over the byte vocabulary. A concept is "weave these
// marker characters into the response"; instructions ask the model to echo a
// few short lowercase words, which gives a crisp programmatic instruct score.
// Every instruction starts with a one-character style slot (the neutral '.'
// filler outside pretraining). In the pretraining corpus each concept's cue
// character occupies that slot and triggers weaving, so the frozen model
// carries a steerable mechanism at a fixed prompt position.
struct ConceptTask {
  std::string concept_id;
  std::vector<std::string> markers;  // single-character marker tokens
  std::string cue;                   // cue character (pretraining corpus only)
  uint64_t seed = 0;
  std::vector<ConceptExample> train;      // both neutral and steered responses
  std::vector<std::string> held_out;      // evaluation instructions
};

struct TaskOptions {
  int concept_index = 0;
  int n_train = 72;
  int n_held_out = 10;
  int words_per_instruction = 3;
  int word_length = 3;
  int n_markers = 1;
};

// Markers/cues are drawn from pools disjoint from the instruction alphabet;
// requesting more concepts than the pools separate is rejected.
ConceptTask generate_task(uint64_t seed, const TaskOptions& opts);

inline constexpr char kStyleFiller = '.';

// The instruction's content words (the style slot and other non-alphabetic
// tokens carry no echo weight).
std::vector<std::string> instruction_key_words(const std::string& instruction);

// Neutral echo response and the marker-woven variant for one instruction.
std::string neutral_response(const std::string& instruction);
std::string woven_response(const std::string& instruction,
                           const std::vector<std::string>& markers);

struct CorpusOptions {
  int n_examples = 4000;
  double cue_fraction = 0.5;       // examples that carry a cue and woven response
  double uncued_weave_rate = 0.07; // cue-less examples with a woven response
  double sprinkle_rate = 0.01;     // neutral examples that get one stray marker
  uint64_t seed = 0;
};

// Byte-level LM pretraining corpus: chat-formatted echo examples, a cue'd,
// marker-woven slice per concept, and a thin sprinkle of stray markers so
// marker bytes are rare-but-not-impossible under the base model.
std::vector<std::vector<int>> build_pretrain_corpus(const std::vector<ConceptTask>& tasks,
                                                    const CorpusOptions& opts);

// JSONL dataset files: {"concept","instruction","response_neutral"?,"response_steered"}.
void save_examples_jsonl(const std::vector<ConceptExample>& examples, const std::string& path);
std::vector<ConceptExample> load_examples_jsonl(const std::string& path);

void save_task(const ConceptTask& task, const std::string& path);
ConceptTask load_task(const std::string& path);

}  // namespace svlab
