#pragma once

// Readers for annotated (CoNLL-U) and plain corpora, the rules file, and
// line-aligned parallel corpora.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lwg/error.hpp"
#include "lwg/rules.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct AnnotatedSentence {
  std::string id;
  std::vector<Token> tokens;
  std::string raw_text;  // from `# text =`, may be empty

  bool fully_annotated() const {
    return std::all_of(tokens.begin(), tokens.end(),
                       [](const Token& t) { return t.head.has_value(); });
  }
};

struct RawSentence {
  std::string id;
  std::vector<std::string> words;
};

struct ParallelCorpus {
  std::vector<std::string> languages;
  std::vector<std::vector<std::string>> rows;  // rows[i][language index]

  std::size_t size() const { return rows.size(); }

  std::size_t language_index(std::string_view lang) const {
    for (std::size_t i = 0; i < languages.size(); ++i) {
      if (languages[i] == lang) return i;
    }
    throw InputError("language '" + std::string(lang) + "' not in corpus");
  }
};

namespace detail {

inline bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

inline bool is_range_or_empty_node(std::string_view id) {
  return id.find('-') != std::string_view::npos ||
         id.find('.') != std::string_view::npos;
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Token POS is XPOS, falling back to UPOS when XPOS is `_`. A `_` HEAD marks
// the token as unannotated.
inline std::vector<AnnotatedSentence> parse_conllu(std::string_view doc) {
  std::vector<AnnotatedSentence> out;
  AnnotatedSentence current;
  std::vector<std::size_t> token_lines;
  std::size_t block_count = 0;

  auto finish = [&]() {
    if (current.tokens.empty()) {
      current = {};
      return;
    }
    const int n = static_cast<int>(current.tokens.size());
    for (std::size_t i = 0; i < current.tokens.size(); ++i) {
      const Token& t = current.tokens[i];
      if (t.index != static_cast<int>(i) + 1) {
        throw ParseError(token_lines[i], "token ID " + std::to_string(t.index) +
                                             " out of sequence (expected " +
                                             std::to_string(i + 1) + ")");
      }
      if (t.head && (*t.head < 0 || *t.head > n || *t.head == t.index)) {
        throw ParseError(token_lines[i],
                         "HEAD " + std::to_string(*t.head) + " invalid for token " +
                             std::to_string(t.index) + " of " + std::to_string(n));
      }
    }
    ++block_count;
    if (current.id.empty()) current.id = std::to_string(block_count);
    out.push_back(std::move(current));
    current = {};
    token_lines.clear();
  };

  const auto all = text::lines(doc);
  for (std::size_t ln = 0; ln < all.size(); ++ln) {
    const std::string_view line = all[ln];
    const std::size_t line_no = ln + 1;
    if (text::trim(line).empty()) {
      finish();
      continue;
    }
    if (line.front() == '#') {
      const auto body = text::trim(line.substr(1));
      if (body.starts_with("sent_id")) {
        const auto eq = body.find('=');
        if (eq != std::string_view::npos) current.id = text::trim(body.substr(eq + 1));
      } else if (body.starts_with("text")) {
        const auto eq = body.find('=');
        if (eq != std::string_view::npos && text::trim(body.substr(0, eq)) == "text") {
          current.raw_text = text::trim(body.substr(eq + 1));
        }
      }
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() < 8) {
      throw ParseError(line_no, "expected at least 8 tab-separated columns, got " +
                                    std::to_string(cols.size()));
    }
    if (detail::is_range_or_empty_node(cols[0])) continue;

    Token tok;
    if (!detail::parse_int(cols[0], tok.index)) {
      throw ParseError(line_no, "non-integer ID '" + std::string(cols[0]) + "'");
    }
    tok.form = std::string(cols[1]);
    if (tok.form.empty() || text::contains_space(tok.form)) {
      throw ParseError(line_no, "FORM must be non-empty and whitespace-free");
    }
    tok.pos = std::string(cols[4] == "_" ? cols[3] : cols[4]);
    if (cols[6] != "_") {
      int head = 0;
      if (!detail::parse_int(cols[6], head)) {
        throw ParseError(line_no, "non-integer HEAD '" + std::string(cols[6]) + "'");
      }
      tok.head = head;
    }
    tok.deprel = std::string(cols[7]);
    current.tokens.push_back(std::move(tok));
    token_lines.push_back(line_no);
  }
  finish();
  return out;
}

// One sentence per line; ids are the 1-based numbers of non-empty lines.
inline std::vector<RawSentence> parse_plain(std::string_view doc) {
  std::vector<RawSentence> out;
  std::size_t count = 0;
  for (const auto line : text::lines(doc)) {
    auto words = text::split_whitespace(line);
    if (words.empty()) continue;
    out.push_back(RawSentence{std::to_string(++count), std::move(words)});
  }
  return out;
}

namespace detail {

inline PosSet parse_pos_set(std::string_view field, std::size_t line_no,
                            const char* what) {
  PosSet set;
  for (auto tag : text::split(field, ',')) {
    tag = text::trim(tag);
    if (tag.empty()) continue;
    if (tag == "any") {
      set.any = true;
    } else {
      set.tags.emplace_back(tag);
    }
  }
  if (set.empty()) throw ParseError(line_no, std::string("empty ") + what + " POS set");
  if (set.any) set.tags.clear();
  return set;
}

}  // namespace detail

// Rules file: `dep_pos_csv | head_pos_csv | deprel | flags_csv`, `#` comments.
inline RuleSet load_rules(std::string_view doc) {
  RuleSet set;
  const auto all = text::lines(doc);
  for (std::size_t ln = 0; ln < all.size(); ++ln) {
    const auto line = text::trim(all[ln]);
    const std::size_t line_no = ln + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = text::split(line, '|');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 '|'-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    GroupingRule rule;
    rule.dep_pos = detail::parse_pos_set(fields[0], line_no, "dependent");
    rule.head_pos = detail::parse_pos_set(fields[1], line_no, "head");
    rule.deprel = std::string(text::trim(fields[2]));
    if (rule.deprel.empty()) throw ParseError(line_no, "empty dependency relation");
    for (auto flag : text::split(fields[3], ',')) {
      flag = text::trim(flag);
      if (flag.empty()) continue;
      if (flag == "chain") {
        rule.chain = true;
      } else if (flag == "adjacent_only") {
        rule.adjacent_only = true;
      } else {
        throw ParseError(line_no, "unknown flag '" + std::string(flag) + "'");
      }
    }
    set.rules.push_back(std::move(rule));
  }
  return set;
}

// Row i pairs line i of every file. Files must have equal line counts and
// no empty lines.
inline ParallelCorpus load_parallel(
    const std::vector<std::pair<std::string, std::filesystem::path>>& paths) {
  ParallelCorpus corpus;
  std::vector<std::vector<std::string>> columns;
  for (const auto& [lang, path] : paths) {
    const std::string doc = read_file(path);
    std::vector<std::string> column;
    const auto all = text::lines(doc);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (text::split_whitespace(all[i]).empty()) {
        throw InputError(path.string() + ": line " + std::to_string(i + 1) +
                         " is empty");
      }
      column.emplace_back(all[i]);
    }
    corpus.languages.push_back(lang);
    columns.push_back(std::move(column));
  }
  for (std::size_t c = 1; c < columns.size(); ++c) {
    if (columns[c].size() != columns[0].size()) {
      std::string msg = "line-count mismatch:";
      for (std::size_t k = 0; k < columns.size(); ++k) {
        msg += " " + paths[k].second.string() + "=" + std::to_string(columns[k].size());
      }
      throw InputError(msg);
    }
  }
  const std::size_t n = columns.empty() ? 0 : columns[0].size();
  corpus.rows.assign(n, std::vector<std::string>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < n; ++r) corpus.rows[r][c] = std::move(columns[c][r]);
  }
  return corpus;
}

}  // namespace lwg
