#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace svlab {

// Byte-level vocabulary: 256 raw bytes plus BOS/EOS/SEP specials.
inline constexpr int kTokBos = 256;
inline constexpr int kTokEos = 257;
inline constexpr int kTokSep = 258;
inline constexpr int kVocabSize = 259;

inline std::vector<int> encode_bytes(std::string_view text) {
  std::vector<int> out;
  out.reserve(text.size());
  for (unsigned char c : text) out.push_back(static_cast<int>(c));
  return out;
}

inline std::string decode_bytes(const std::vector<int>& tokens) {
  std::string out;
  out.reserve(tokens.size());
  for (int t : tokens) {
    if (t >= 0 && t < 256) out.push_back(static_cast<char>(t));
  }
  return out;
}

// Chat-formatted prompt: BOS, instruction bytes, SEP. The prompt length m
// (everything through SEP) is what location policies count positions over.
inline std::vector<int> chat_prompt(std::string_view instruction) {
  std::vector<int> out;
  out.reserve(instruction.size() + 2);
  out.push_back(kTokBos);
  for (unsigned char c : instruction) out.push_back(static_cast<int>(c));
  out.push_back(kTokSep);
  return out;
}

}  // namespace svlab
