#pragma once

// Translation chunking: fixed word windows, or greedy packing of whole word
// groups.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lwg/grouping.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct ChunkPlan {
  enum class Mode { kFixed, kGrouped };

  // Units are word groups (single words in FIXED mode).
  std::vector<std::vector<std::string>> units;
  // Exclusive end unit index of each chunk; the last equals units.size().
  std::vector<std::size_t> boundaries;
  Mode mode = Mode::kFixed;
  int width = 4;

  std::size_t chunk_count() const { return boundaries.size(); }

  std::vector<std::string> chunk_words(std::size_t c) const {
    std::vector<std::string> words;
    const std::size_t begin = c == 0 ? 0 : boundaries[c - 1];
    for (std::size_t u = begin; u < boundaries[c]; ++u) {
      words.insert(words.end(), units[u].begin(), units[u].end());
    }
    return words;
  }

  // Natural text per chunk: words joined by spaces, no group delimiters.
  std::vector<std::string> chunk_texts() const {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < chunk_count(); ++c) out.push_back(text::join(chunk_words(c), " "));
    return out;
  }
};

inline constexpr int kDefaultChunkWidth = 4;

inline ChunkPlan chunk_fixed(std::span<const std::string> words, int width) {
  if (width < 1) throw std::invalid_argument("chunk width must be >= 1");
  if (words.empty()) throw std::invalid_argument("cannot chunk an empty sentence");
  ChunkPlan plan;
  plan.mode = ChunkPlan::Mode::kFixed;
  plan.width = width;
  for (const auto& w : words) plan.units.push_back({w});
  const auto w = static_cast<std::size_t>(width);
  for (std::size_t end = w; end < words.size(); end += w) plan.boundaries.push_back(end);
  plan.boundaries.push_back(words.size());
  return plan;
}

// Whole groups are appended while the chunk holds fewer than `target_width`
// words; a group is never split, so an oversized group forms its own chunk.
inline ChunkPlan chunk_grouped(std::vector<std::vector<std::string>> groups, int target_width) {
  if (target_width < 1) throw std::invalid_argument("chunk width must be >= 1");
  if (groups.empty()) throw std::invalid_argument("cannot chunk an empty sentence");
  ChunkPlan plan;
  plan.mode = ChunkPlan::Mode::kGrouped;
  plan.width = target_width;
  std::size_t words_in_chunk = 0;
  for (std::size_t u = 0; u < groups.size(); ++u) {
    if (groups[u].empty()) throw std::invalid_argument("empty group");
    if (words_in_chunk >= static_cast<std::size_t>(target_width)) {
      plan.boundaries.push_back(u);
      words_in_chunk = 0;
    }
    words_in_chunk += groups[u].size();
  }
  plan.boundaries.push_back(groups.size());
  plan.units = std::move(groups);
  return plan;
}

inline ChunkPlan chunk_grouped(const GroupedSentence& g, int target_width) {
  std::vector<std::vector<std::string>> groups;
  for (std::size_t k = 0; k < g.groups.size(); ++k) groups.push_back(g.group_words(k));
  return chunk_grouped(std::move(groups), target_width);
}

}  // namespace lwg
