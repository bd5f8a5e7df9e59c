#pragma once

// Rule engine: fuses dependency-linked neighbours into contiguous word
// groups and renders/counts the result.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lwg/corpus_io.hpp"
#include "lwg/error.hpp"
#include "lwg/rules.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct GroupedSentence {
  std::string id;
  std::vector<std::string> tokens;
  // Each group is an ascending, contiguous run of 1-based token indices.
  std::vector<std::vector<int>> groups;
  // Relations whose merges formed each group; empty for singletons.
  std::vector<std::vector<std::string>> provenance;
  std::string delimiter = "_";

  std::vector<std::string> group_words(std::size_t g) const {
    std::vector<std::string> words;
    for (int i : groups[g]) words.push_back(tokens[i - 1]);
    return words;
  }

  friend bool operator==(const GroupedSentence&, const GroupedSentence&) = default;
};

// Throws InputError unless `g.groups` is an ordered partition of 1..n into
// contiguous runs and provenance lines up with groups.
inline void validate(const GroupedSentence& g) {
  const int n = static_cast<int>(g.tokens.size());
  int expect = 1;
  for (const auto& group : g.groups) {
    if (group.empty()) throw InputError("sentence " + g.id + ": empty group");
    for (int idx : group) {
      if (idx != expect) {
        throw InputError("sentence " + g.id +
                         ": groups are not a contiguous ordered partition");
      }
      ++expect;
    }
  }
  if (expect != n + 1) {
    throw InputError("sentence " + g.id + ": groups do not cover all tokens");
  }
  if (g.provenance.size() != g.groups.size()) {
    throw InputError("sentence " + g.id + ": provenance/group count mismatch");
  }
  if (g.delimiter.empty() || text::contains_space(g.delimiter)) {
    throw InputError("sentence " + g.id + ": delimiter must be non-empty, no whitespace");
  }
}

// Pass-through grouping: every word its own group.
inline GroupedSentence identity_grouping(std::string id,
                                         std::vector<std::string> words,
                                         std::string delimiter = "_") {
  GroupedSentence g;
  g.id = std::move(id);
  g.tokens = std::move(words);
  g.delimiter = std::move(delimiter);
  for (int i = 1; i <= static_cast<int>(g.tokens.size()); ++i) {
    g.groups.push_back({i});
    g.provenance.emplace_back();
  }
  return g;
}

inline GroupedSentence identity_grouping(const RawSentence& s) {
  return identity_grouping(s.id, s.words);
}

namespace detail {

struct Span {
  int first;  // 1-based, inclusive
  int last;
  std::vector<std::string> provenance;

  int size() const { return last - first + 1; }
};

}  // namespace detail

// Starts from singletons and repeatedly applies the first rule (file order)
// that has an eligible pair, merging its leftmost one, until nothing fires.
// A pair is eligible when the rule matches, the two tokens sit in
// neighbouring groups, and either the rule chains or both groups are single
// tokens.
inline GroupedSentence group_sentence(const AnnotatedSentence& sentence,
                                      const RuleSet& rules) {
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  for (const Token& t : toks) {
    if (!t.head) {
      throw InputError("sentence " + sentence.id + ": token " +
                       std::to_string(t.index) + " has no head annotation");
    }
    if (*t.head < 0 || *t.head > n || *t.head == t.index) {
      throw InputError("sentence " + sentence.id + ": token " +
                       std::to_string(t.index) + " has invalid head");
    }
  }

  std::vector<detail::Span> spans;
  spans.reserve(toks.size());
  for (int i = 1; i <= n; ++i) spans.push_back({i, i, {}});
  std::vector<int> group_of(n + 1);

  auto reindex = [&]() {
    for (std::size_t g = 0; g < spans.size(); ++g) {
      for (int i = spans[g].first; i <= spans[g].last; ++i) group_of[i] = static_cast<int>(g);
    }
  };
  reindex();

  for (;;) {
    bool merged = false;
    for (const GroupingRule& rule : rules.rules) {
      int best_left = -1;
      for (const Token& dep : toks) {
        const int h = *dep.head;
        if (h == 0) continue;
        const int gd = group_of[dep.index];
        const int gh = group_of[h];
        if (std::abs(gd - gh) != 1) continue;
        if (!rule.chain && (spans[gd].size() > 1 || spans[gh].size() > 1)) continue;
        if (!rule_matches(rule, dep, toks[h - 1])) continue;
        const int left = std::min(gd, gh);
        if (best_left < 0 || left < best_left) best_left = left;
      }
      if (best_left >= 0) {
        auto& a = spans[best_left];
        auto& b = spans[best_left + 1];
        a.last = b.last;
        a.provenance.insert(a.provenance.end(), b.provenance.begin(), b.provenance.end());
        a.provenance.push_back(rule.deprel);
        spans.erase(spans.begin() + best_left + 1);
        reindex();
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }

  GroupedSentence out;
  out.id = sentence.id;
  out.delimiter = rules.delimiter;
  out.tokens.reserve(toks.size());
  for (const Token& t : toks) out.tokens.push_back(t.form);
  for (auto& s : spans) {
    std::vector<int> group;
    for (int i = s.first; i <= s.last; ++i) group.push_back(i);
    out.groups.push_back(std::move(group));
    out.provenance.push_back(std::move(s.provenance));
  }
  return out;
}

// Group members joined by `delimiter`, groups separated by single spaces.
inline std::string render_grouped(const GroupedSentence& g, std::string_view delimiter) {
  std::string out;
  for (std::size_t k = 0; k < g.groups.size(); ++k) {
    if (k) out.push_back(' ');
    out += text::join(g.group_words(k), delimiter);
  }
  return out;
}

inline std::string render_grouped(const GroupedSentence& g) {
  return render_grouped(g, g.delimiter);
}

struct CountReport {
  std::string language;
  std::size_t total_words = 0;
  std::size_t total_groups = 0;
  double reduction_pct = 0.0;
};

using CorpusView =
    std::variant<std::vector<RawSentence>, std::vector<GroupedSentence>>;

// Per-language word/group totals, ascending by word total. Plain corpora
// report groups == words.
inline std::vector<CountReport> corpus_stats(
    const std::vector<std::pair<std::string, CorpusView>>& corpora) {
  std::vector<CountReport> out;
  for (const auto& [lang, corpus] : corpora) {
    CountReport r;
    r.language = lang;
    if (const auto* raw = std::get_if<std::vector<RawSentence>>(&corpus)) {
      for (const auto& s : *raw) r.total_words += s.words.size();
      r.total_groups = r.total_words;
    } else {
      for (const auto& s : std::get<std::vector<GroupedSentence>>(corpus)) {
        r.total_words += s.tokens.size();
        r.total_groups += s.groups.size();
      }
    }
    if (r.total_words > 0) {
      r.reduction_pct = 100.0 * static_cast<double>(r.total_words - r.total_groups) /
                        static_cast<double>(r.total_words);
    }
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const CountReport& a, const CountReport& b) {
    return a.total_words < b.total_words;
  });
  return out;
}

}  // namespace lwg
