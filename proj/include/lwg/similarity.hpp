#pragma once

// Shuffle-then-embed experiment: mean cosine similarity between shuffled
// pivot-language sentences and (a) the unshuffled pivot sentence, (b) each
// parallel sentence, with and without word groups preserved.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lwg/corpus_io.hpp"
#include "lwg/embedding.hpp"
#include "lwg/error.hpp"
#include "lwg/grouping.hpp"
#include "lwg/parallel.hpp"
#include "lwg/perturbation.hpp"
#include "lwg/random.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct SimilarityCell {
  std::size_t setting = 0;  // index into SimilarityTable::settings
  bool grouped = false;
  std::size_t language = 0;  // index into SimilarityTable::languages
  double mean = 0.0;
  std::size_t n_sentences = 0;
  std::size_t n_seeds = 0;
};

struct SimilarityTable {
  std::vector<ShuffleSetting> settings;
  std::vector<std::string> languages;
  std::size_t pivot = 0;  // the pivot column holds self-similarity
  std::vector<SimilarityCell> cells;
  bool partial = false;

  const SimilarityCell* find(std::size_t setting, bool grouped, std::size_t language) const {
    for (const auto& c : cells) {
      if (c.setting == setting && c.grouped == grouped && c.language == language) return &c;
    }
    return nullptr;
  }
};

// Thrown when the provider fails mid-run; carries the cells finished so far.
class ExperimentAborted : public ProviderError {
 public:
  ExperimentAborted(const std::string& message, SimilarityTable partial)
      : ProviderError(message), partial_(std::move(partial)) {}
  const SimilarityTable& partial() const noexcept { return partial_; }

 private:
  SimilarityTable partial_;
};

struct SimilarityOptions {
  std::string pivot = "hin";
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  unsigned jobs = 0;
};

namespace detail {

// The shuffled sentence as plain words: group delimiters never reach the
// embedder.
inline std::string shuffled_text(const std::vector<std::vector<std::string>>& units,
                                 const ShuffleSpec& spec) {
  const auto perm = shuffle_permutation(units.size(), spec);
  std::string out;
  for (std::size_t src : perm) {
    for (const auto& w : units[src]) {
      if (!out.empty()) out.push_back(' ');
      out += w;
    }
  }
  return out;
}

}  // namespace detail

// `grouped[i]` is the grouping of the pivot sentence in row i. Rows are
// identified by their 1-based position for seed derivation.
inline SimilarityTable similarity_experiment(const ParallelCorpus& corpus,
                                             std::span<const GroupedSentence> grouped,
                                             std::span<const ShuffleSetting> settings,
                                             EmbeddingProvider& provider,
                                             const SimilarityOptions& opts) {
  const std::size_t pivot = corpus.language_index(opts.pivot);
  if (grouped.size() != corpus.size()) {
    throw InputError("grouped pivot sentences (" + std::to_string(grouped.size()) +
                     ") do not match corpus rows (" + std::to_string(corpus.size()) + ")");
  }
  if (opts.seeds.empty()) throw InputError("at least one seed is required");

  SimilarityTable table;
  table.settings.assign(settings.begin(), settings.end());
  table.languages = corpus.languages;
  table.pivot = pivot;

  const std::size_t n_rows = corpus.size();
  const std::size_t n_langs = corpus.languages.size();

  std::vector<std::vector<std::vector<std::string>>> word_units(n_rows), group_units(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (auto& w : text::split_whitespace(corpus.rows[r][pivot])) word_units[r].push_back({w});
    for (std::size_t g = 0; g < grouped[r].groups.size(); ++g) {
      group_units[r].push_back(grouped[r].group_words(g));
    }
  }

  try {
    // Reference embeddings: every sentence of every language, once.
    std::vector<std::string> ref_texts;
    ref_texts.reserve(n_rows * n_langs);
    for (std::size_t r = 0; r < n_rows; ++r) {
      for (std::size_t l = 0; l < n_langs; ++l) ref_texts.push_back(corpus.rows[r][l]);
    }
    const auto refs = provider.embed_batch(ref_texts);

    for (std::size_t s = 0; s < settings.size(); ++s) {
      const ShuffleSetting& setting = settings[s];
      std::vector<std::size_t> rows;
      if (setting.kind == ShuffleSetting::Kind::kLengthFiltered) {
        rows = filter_corpus(corpus, opts.pivot, setting.param);
      } else {
        rows.resize(n_rows);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
      }
      const ShuffleSetting applied =
          setting.kind == ShuffleSetting::Kind::kLengthFiltered ? ShuffleSetting::full() : setting;

      for (bool use_groups : {false, true}) {
        const std::size_t n_samples = rows.size() * opts.seeds.size();
        std::vector<std::string> texts(n_samples);
        parallel_for(n_samples, opts.jobs, [&](std::size_t k) {
          const std::size_t r = rows[k / opts.seeds.size()];
          const std::uint64_t seed = opts.seeds[k % opts.seeds.size()];
          const ShuffleSpec spec{applied, use_groups,
                                 derive_seed(seed, std::to_string(r + 1))};
          texts[k] = detail::shuffled_text(use_groups ? group_units[r] : word_units[r], spec);
        });
        const auto embedded = provider.embed_batch(texts);

        std::vector<double> sums(n_langs, 0.0);
        for (std::size_t k = 0; k < n_samples; ++k) {
          const std::size_t r = rows[k / opts.seeds.size()];
          for (std::size_t l = 0; l < n_langs; ++l) {
            sums[l] += cosine(embedded[k], refs[r * n_langs + l]);
          }
        }
        for (std::size_t l = 0; l < n_langs; ++l) {
          table.cells.push_back({s, use_groups, l,
                                 n_samples ? sums[l] / static_cast<double>(n_samples) : 0.0,
                                 rows.size(), opts.seeds.size()});
        }
      }
    }
  } catch (const ProviderError& e) {
    table.partial = true;
    throw ExperimentAborted(e.what(), std::move(table));
  }
  return table;
}

// Table layout: setting, grouped flag, one column per language (the pivot
// column labelled as self-similarity), then sample counts.
inline void write_similarity_tsv(const SimilarityTable& t, std::ostream& out) {
  if (t.partial) out << "# partial: run aborted by embedding provider failure\n";
  out << "setting\tgrouped";
  for (std::size_t l = 0; l < t.languages.size(); ++l) {
    out << '\t' << t.languages[l] << (l == t.pivot ? "(self)" : "");
  }
  out << "\tn_sentences\tn_seeds\n";
  char buf[32];
  for (std::size_t s = 0; s < t.settings.size(); ++s) {
    for (bool g : {false, true}) {
      const SimilarityCell* first = t.find(s, g, 0);
      if (!first) continue;
      out << t.settings[s].name() << '\t' << (g ? "grouped" : "ungrouped");
      for (std::size_t l = 0; l < t.languages.size(); ++l) {
        std::snprintf(buf, sizeof buf, "%.6f", t.find(s, g, l)->mean);
        out << '\t' << buf;
      }
      out << '\t' << first->n_sentences << '\t' << first->n_seeds << '\n';
    }
  }
}

}  // namespace lwg
