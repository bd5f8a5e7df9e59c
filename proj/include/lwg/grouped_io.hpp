#pragma once

// Grouped-sentence JSONL: one object per line with id, tokens, groups,
// rendered, plus provenance and delimiter so records re-read exactly.

#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lwg/error.hpp"
#include "lwg/grouping.hpp"
#include "lwg/text.hpp"

namespace lwg {

inline nlohmann::json to_json(const GroupedSentence& g) {
  return nlohmann::json{{"id", g.id},
                        {"tokens", g.tokens},
                        {"groups", g.groups},
                        {"rendered", render_grouped(g)},
                        {"provenance", g.provenance},
                        {"delimiter", g.delimiter}};
}

inline GroupedSentence grouped_from_json(const nlohmann::json& j) {
  GroupedSentence g;
  j.at("id").get_to(g.id);
  j.at("tokens").get_to(g.tokens);
  j.at("groups").get_to(g.groups);
  if (j.contains("delimiter")) j.at("delimiter").get_to(g.delimiter);
  if (j.contains("provenance")) {
    j.at("provenance").get_to(g.provenance);
  } else {
    g.provenance.assign(g.groups.size(), {});
  }
  validate(g);
  if (j.contains("rendered") && j.at("rendered").get<std::string>() != render_grouped(g)) {
    throw InputError("sentence " + g.id + ": 'rendered' disagrees with tokens/groups");
  }
  return g;
}

inline void write_grouped(std::span<const GroupedSentence> sentences, std::ostream& out) {
  for (const auto& g : sentences) out << to_json(g).dump() << '\n';
  if (!out) throw Error(ErrorKind::kInput, "write failed");
}

inline std::vector<GroupedSentence> read_grouped(std::string_view doc) {
  std::vector<GroupedSentence> out;
  const auto all = text::lines(doc);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (text::trim(all[i]).empty()) continue;
    try {
      out.push_back(grouped_from_json(nlohmann::json::parse(all[i])));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(i + 1, e.what());
    } catch (const InputError& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return out;
}

inline std::vector<GroupedSentence> read_grouped(std::istream& in) {
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_grouped(doc);
}

// `language\twords\tgroups\treduction_pct` with a header row.
inline void write_stats_tsv(std::span<const CountReport> reports, std::ostream& out) {
  out << "language\twords\tgroups\treduction_pct\n";
  char pct[32];
  for (const auto& r : reports) {
    std::snprintf(pct, sizeof pct, "%.2f", r.reduction_pct);
    out << r.language << '\t' << r.total_words << '\t' << r.total_groups << '\t' << pct
        << '\n';
  }
}

}  // namespace lwg
