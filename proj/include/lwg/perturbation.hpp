#pragma once

// Seeded sentence shuffling: whole-sentence, fixed windows, and the
// length-filtered subset, over words or over preserved word groups.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lwg/corpus_io.hpp"
#include "lwg/error.hpp"
#include "lwg/grouping.hpp"
#include "lwg/random.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct ShuffleSetting {
  enum class Kind { kFull, kWindow, kLengthFiltered };

  Kind kind = Kind::kFull;
  int param = 0;  // window size or max word count

  static ShuffleSetting full() { return {Kind::kFull, 0}; }
  static ShuffleSetting window(int w) {
    if (w < 1) throw std::invalid_argument("window size must be >= 1");
    return {Kind::kWindow, w};
  }
  static ShuffleSetting length_filtered(int max_words) {
    if (max_words < 1) throw std::invalid_argument("max_words must be >= 1");
    return {Kind::kLengthFiltered, max_words};
  }

  // full, w5, w10, filtered20, ...
  std::string name() const {
    switch (kind) {
      case Kind::kFull: return "full";
      case Kind::kWindow: return "w" + std::to_string(param);
      case Kind::kLengthFiltered: return "filtered" + std::to_string(param);
    }
    return {};
  }

  static ShuffleSetting parse(std::string_view name) {
    auto number = [&](std::size_t prefix) {
      int v = 0;
      if (!detail::parse_int(name.substr(prefix), v) || v < 1) {
        throw InputError("bad shuffle setting '" + std::string(name) + "'");
      }
      return v;
    };
    if (name == "full") return full();
    if (name.starts_with("filtered")) return length_filtered(number(8));
    if (name.starts_with("w")) return window(number(1));
    throw InputError("bad shuffle setting '" + std::string(name) +
                     "' (expected full, wN or filteredN)");
  }

  friend bool operator==(const ShuffleSetting&, const ShuffleSetting&) = default;
};

struct ShuffleSpec {
  ShuffleSetting setting;
  bool preserve_groups = false;
  std::uint64_t seed = 0;
};

struct ShuffledSentence {
  std::vector<std::string> original;
  std::vector<std::string> permuted;
  ShuffleSpec spec;
  // permuted[k] == original[permutation[k]]
  std::vector<std::size_t> permutation;
};

// Words, or one delimiter-joined unit per group so a shuffle cannot split a
// group.
inline std::vector<std::string> units_of(const GroupedSentence& g, bool preserve_groups) {
  if (!preserve_groups) return g.tokens;
  std::vector<std::string> units;
  units.reserve(g.groups.size());
  for (std::size_t k = 0; k < g.groups.size(); ++k) {
    units.push_back(text::join(g.group_words(k), g.delimiter));
  }
  return units;
}

inline std::vector<std::string> units_of(const RawSentence& s) { return s.words; }

// The permutation a spec applies to `n` units. Length filtering is a corpus
// level selection; on a single sentence it shuffles like FULL. Windows count
// units and are anchored at the start; the last one may be short.
inline std::vector<std::size_t> shuffle_permutation(std::size_t n, const ShuffleSpec& spec) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Xoshiro256 rng(spec.seed);
  if (spec.setting.kind == ShuffleSetting::Kind::kWindow) {
    const auto w = static_cast<std::size_t>(spec.setting.param);
    for (std::size_t begin = 0; begin < n; begin += w) {
      const std::size_t len = std::min(w, n - begin);
      fisher_yates(std::span(perm).subspan(begin, len), rng);
    }
  } else {
    fisher_yates(perm, rng);
  }
  return perm;
}

template <class T>
std::vector<T> apply_permutation(std::span<const T> items,
                                 std::span<const std::size_t> perm) {
  std::vector<T> out;
  out.reserve(perm.size());
  for (std::size_t src : perm) out.push_back(items[src]);
  return out;
}

inline ShuffledSentence shuffle(std::vector<std::string> units, const ShuffleSpec& spec) {
  ShuffledSentence s;
  s.spec = spec;
  s.permutation = shuffle_permutation(units.size(), spec);
  s.permuted = apply_permutation<std::string>(units, s.permutation);
  s.original = std::move(units);
  return s;
}

// Indices of sentences whose ungrouped word count is strictly below
// `max_words`.
inline std::vector<std::size_t> filter_corpus(std::span<const RawSentence> sentences,
                                              int max_words) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].words.size() < static_cast<std::size_t>(max_words)) kept.push_back(i);
  }
  return kept;
}

inline std::vector<std::size_t> filter_corpus(const ParallelCorpus& corpus,
                                              std::string_view pivot, int max_words) {
  const std::size_t col = corpus.language_index(pivot);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (text::split_whitespace(corpus.rows[i][col]).size() <
        static_cast<std::size_t>(max_words)) {
      kept.push_back(i);
    }
  }
  return kept;
}

}  // namespace lwg
