#pragma once

// chrF / chrF++ compatible with the standard scorer's default behaviour
// (signature nrefs:1|case:mixed|eff:yes|nc:6|nw:2|space:no).

#include <algorithm>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lwg/text.hpp"

namespace lwg {

struct ChrfConfig {
  int char_order = 6;
  int word_order = 2;
  double beta = 2.0;
  bool effective_order = true;
  bool lowercase = false;

  void check() const {
    if (char_order < 1) throw std::invalid_argument("char_order must be >= 1");
    if (word_order < 0) throw std::invalid_argument("word_order must be >= 0");
    if (!(beta > 0)) throw std::invalid_argument("beta must be > 0");
  }

  std::string signature() const {
    char b[32];
    std::snprintf(b, sizeof b, "%g", beta);
    return std::string("nrefs:1|case:") + (lowercase ? "lc" : "mixed") +
           "|eff:" + (effective_order ? "yes" : "no") + "|nc:" + std::to_string(char_order) +
           "|nw:" + std::to_string(word_order) + "|space:no" +
           (beta == 2.0 ? std::string() : std::string("|beta:") + b);
  }
};

// [hyp, ref, match] n-gram counts per order: character orders first, then
// word orders.
struct ChrfStats {
  std::vector<long long> counts;

  ChrfStats& operator+=(const ChrfStats& o) {
    if (counts.empty()) counts.assign(o.counts.size(), 0);
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
};

namespace detail {

// ASCII punctuation, split off the end (else the start) of multi-char words.
inline bool is_chrf_punct(char32_t c) {
  return c < 0x80 && std::string_view("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")
                             .find(static_cast<char>(c)) != std::string_view::npos;
}

inline std::vector<std::u32string> chrf_words(std::string_view sent) {
  std::vector<std::u32string> out;
  for (const auto& w8 : text::split_whitespace(sent)) {
    std::u32string w = text::decode(w8);
    if (w.size() == 1) {
      out.push_back(w);
    } else if (is_chrf_punct(w.back())) {
      out.push_back(w.substr(0, w.size() - 1));
      out.push_back(w.substr(w.size() - 1));
    } else if (is_chrf_punct(w.front())) {
      out.push_back(w.substr(0, 1));
      out.push_back(w.substr(1));
    } else {
      out.push_back(std::move(w));
    }
  }
  return out;
}

using NgramCounts = std::unordered_map<std::u32string, long long>;

inline std::vector<NgramCounts> chrf_ngrams(std::string_view sent, const ChrfConfig& cfg) {
  std::vector<NgramCounts> orders;
  std::u32string chars;
  for (const auto& w : text::split_whitespace(sent)) chars += text::decode(w);
  for (int n = 1; n <= cfg.char_order; ++n) {
    NgramCounts c;
    for (std::size_t i = 0; i + n <= chars.size(); ++i) ++c[chars.substr(i, n)];
    orders.push_back(std::move(c));
  }
  if (cfg.word_order > 0) {
    const auto words = chrf_words(sent);
    for (int n = 1; n <= cfg.word_order; ++n) {
      NgramCounts c;
      for (std::size_t i = 0; i + n <= words.size(); ++i) {
        std::u32string key = words[i];
        for (int k = 1; k < n; ++k) {
          key.push_back(U' ');
          key += words[i + k];
        }
        ++c[key];
      }
      orders.push_back(std::move(c));
    }
  }
  return orders;
}

inline std::string lowercase_basic(std::string_view s) {
  // case:lc support covers ASCII and Latin-1 letters only.
  std::u32string u = text::decode(s);
  for (auto& c : u) {
    if ((c >= U'A' && c <= U'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7)) c += 32;
  }
  return text::encode(u);
}

}  // namespace detail

inline ChrfStats chrf_statistics(std::string_view hypothesis, std::string_view reference,
                                 const ChrfConfig& cfg) {
  cfg.check();
  std::string hyp_buf, ref_buf;
  if (cfg.lowercase) {
    hyp_buf = detail::lowercase_basic(hypothesis);
    ref_buf = detail::lowercase_basic(reference);
    hypothesis = hyp_buf;
    reference = ref_buf;
  }
  const auto hyp = detail::chrf_ngrams(hypothesis, cfg);
  const auto ref = detail::chrf_ngrams(reference, cfg);
  ChrfStats stats;
  for (std::size_t o = 0; o < hyp.size(); ++o) {
    long long n_hyp = 0, n_ref = 0, n_match = 0;
    for (const auto& [g, c] : hyp[o]) {
      n_hyp += c;
      if (auto it = ref[o].find(g); it != ref[o].end()) n_match += std::min(c, it->second);
    }
    for (const auto& [g, c] : ref[o]) n_ref += c;
    stats.counts.insert(stats.counts.end(), {n_hyp, n_ref, n_match});
  }
  return stats;
}

// With effective order, precision and recall are averaged over the orders
// where both sides have n-grams and combined into one F-beta. Without it,
// per-order F scores (eps-smoothed) are averaged over all orders.
inline double chrf_score(const ChrfStats& stats, const ChrfConfig& cfg) {
  constexpr double kEps = 1e-16;
  const double factor = cfg.beta * cfg.beta;
  const std::size_t orders = stats.counts.size() / 3;
  double f_sum = 0.0, avg_prec = 0.0, avg_rec = 0.0;
  int effective = 0;
  for (std::size_t i = 0; i < orders; ++i) {
    const auto n_hyp = stats.counts[3 * i];
    const auto n_ref = stats.counts[3 * i + 1];
    const auto n_match = stats.counts[3 * i + 2];
    const double prec = n_hyp > 0 ? static_cast<double>(n_match) / n_hyp : kEps;
    const double rec = n_ref > 0 ? static_cast<double>(n_match) / n_ref : kEps;
    const double denom = factor * prec + rec;
    f_sum += denom > 0 ? (1 + factor) * prec * rec / denom : kEps;
    if (n_hyp > 0 && n_ref > 0) {
      avg_prec += prec;
      avg_rec += rec;
      ++effective;
    }
  }
  if (!cfg.effective_order) return orders ? 100.0 * f_sum / orders : 0.0;
  if (effective == 0) return 0.0;
  avg_prec /= effective;
  avg_rec /= effective;
  if (avg_prec + avg_rec == 0.0) return 0.0;
  return 100.0 * (1 + factor) * avg_prec * avg_rec / (factor * avg_prec + avg_rec);
}

// Sentence-level chrF++ in [0, 100]. The reference must be non-empty.
inline double chrfpp(std::string_view hypothesis, std::string_view reference,
                     const ChrfConfig& cfg = {}) {
  if (text::split_whitespace(reference).empty()) {
    throw std::domain_error("chrF++: empty reference");
  }
  return chrf_score(chrf_statistics(hypothesis, reference, cfg), cfg);
}

// Corpus-level score from summed statistics.
inline double corpus_chrfpp(std::span<const std::string> hypotheses,
                            std::span<const std::string> references,
                            const ChrfConfig& cfg = {}) {
  if (hypotheses.size() != references.size()) {
    throw std::invalid_argument("chrF++: hypothesis/reference count mismatch");
  }
  ChrfStats total;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    if (text::split_whitespace(references[i]).empty()) {
      throw std::domain_error("chrF++: empty reference at line " + std::to_string(i + 1));
    }
    total += chrf_statistics(hypotheses[i], references[i], cfg);
  }
  return chrf_score(total, cfg);
}

}  // namespace lwg
