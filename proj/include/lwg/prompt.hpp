#pragma once

// Few-shot prompts for chunk-wise (decomposed) translation. Layout:
//
//   Translate from {src} to {tgt}:
//   <blank>
//   {src}: <chunk>
//   {tgt}: <chunk>
//   ...
//   <blank>
//   (one such section per shot, then the test section whose last pair is
//    "{src}: <test chunk>" / "{tgt}: <mask>")

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lwg/error.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct PromptShot {
  std::vector<std::string> src_chunks;
  std::vector<std::string> tgt_chunks;

  friend bool operator==(const PromptShot&, const PromptShot&) = default;
};

struct PromptDocument {
  std::string source_lang = "Hindi";
  std::string target_lang;
  std::vector<PromptShot> shots;
  // Already translated (source, target) chunks of the test sentence.
  std::vector<std::pair<std::string, std::string>> test_chunks_done;
  std::string test_chunk;
  std::string mask_token = "<mask>";
};

namespace detail {

inline void check_chunk(std::string_view chunk, const std::string& where) {
  if (chunk.find('\n') != std::string_view::npos || chunk.find('\r') != std::string_view::npos) {
    throw InputError(where + ": chunk contains a line break");
  }
}

}  // namespace detail

inline std::string prompt_header(const PromptDocument& doc) {
  return "Translate from " + doc.source_lang + " to " + doc.target_lang + ":";
}

inline std::string build_prompt(const PromptDocument& doc) {
  if (doc.mask_token.empty()) throw InputError("mask token must be non-empty");
  if (doc.source_lang.empty() || doc.target_lang.empty()) {
    throw InputError("language names must be non-empty");
  }
  const std::string header = prompt_header(doc);
  std::string out;
  auto pair = [&](std::string_view src, std::string_view tgt) {
    out.append(doc.source_lang).append(": ").append(src).push_back('\n');
    out.append(doc.target_lang).append(": ").append(tgt).push_back('\n');
  };
  for (std::size_t s = 0; s < doc.shots.size(); ++s) {
    const auto& shot = doc.shots[s];
    if (shot.src_chunks.size() != shot.tgt_chunks.size()) {
      throw InputError("shot " + std::to_string(s) + ": " +
                       std::to_string(shot.src_chunks.size()) + " source chunks vs " +
                       std::to_string(shot.tgt_chunks.size()) + " target chunks");
    }
    out.append(header).append("\n\n");
    for (std::size_t c = 0; c < shot.src_chunks.size(); ++c) {
      detail::check_chunk(shot.src_chunks[c], "shot " + std::to_string(s));
      detail::check_chunk(shot.tgt_chunks[c], "shot " + std::to_string(s));
      pair(shot.src_chunks[c], shot.tgt_chunks[c]);
    }
    out.push_back('\n');
  }
  out.append(header).append("\n\n");
  for (const auto& [src, tgt] : doc.test_chunks_done) {
    detail::check_chunk(src, "test prefix");
    detail::check_chunk(tgt, "test prefix");
    pair(src, tgt);
  }
  detail::check_chunk(doc.test_chunk, "test chunk");
  detail::check_chunk(doc.mask_token, "mask");
  pair(doc.test_chunk, doc.mask_token);
  return out;
}

// Inverse of build_prompt: one entry per section, in order.
inline std::vector<PromptShot> parse_prompt(std::string_view prompt, std::string_view source_lang,
                                            std::string_view target_lang) {
  const std::string header =
      "Translate from " + std::string(source_lang) + " to " + std::string(target_lang) + ":";
  const std::string src_prefix = std::string(source_lang) + ": ";
  const std::string tgt_prefix = std::string(target_lang) + ": ";
  std::vector<PromptShot> sections;
  const auto all = text::lines(prompt);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto line = all[i];
    if (line == header) {
      sections.emplace_back();
    } else if (line.empty()) {
      continue;
    } else if (sections.empty()) {
      throw ParseError(i + 1, "content before first header");
    } else if (line.starts_with(src_prefix)) {
      sections.back().src_chunks.emplace_back(line.substr(src_prefix.size()));
    } else if (line.starts_with(tgt_prefix)) {
      sections.back().tgt_chunks.emplace_back(line.substr(tgt_prefix.size()));
    } else {
      throw ParseError(i + 1, "unrecognised prompt line");
    }
  }
  return sections;
}

// Shots JSONL: {"src_chunks": [...], "tgt_chunks": [...]} per line.
inline std::vector<PromptShot> read_shots(std::string_view doc) {
  std::vector<PromptShot> shots;
  const auto all = text::lines(doc);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (text::trim(all[i]).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(all[i]);
      PromptShot shot;
      j.at("src_chunks").get_to(shot.src_chunks);
      j.at("tgt_chunks").get_to(shot.tgt_chunks);
      if (shot.src_chunks.size() != shot.tgt_chunks.size()) {
        throw ParseError(i + 1, "shot " + std::to_string(shots.size()) +
                                    " has unequal source/target chunk counts");
      }
      shots.push_back(std::move(shot));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return shots;
}

}  // namespace lwg
