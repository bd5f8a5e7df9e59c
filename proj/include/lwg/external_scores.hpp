#pragma once

// Externally produced per-sentence scores: TSV `id<TAB>metric<TAB>score`.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "lwg/error.hpp"
#include "lwg/text.hpp"

namespace lwg {

struct ExternalScore {
  std::string id;
  std::string metric;
  double score = 0.0;

  friend bool operator==(const ExternalScore&, const ExternalScore&) = default;
};

inline std::vector<ExternalScore> ingest_external_scores(std::string_view doc) {
  std::vector<ExternalScore> rows;
  const auto all = text::lines(doc);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto line = text::trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = text::split(all[i], '\t');
    if (rows.empty() && cols.size() == 3 && text::trim(cols[0]) == "id" &&
        text::trim(cols[2]) == "score") {
      continue;  // header row
    }
    if (cols.size() != 3) {
      throw ParseError(i + 1, "expected id<TAB>metric<TAB>score");
    }
    ExternalScore row{std::string(text::trim(cols[0])), std::string(text::trim(cols[1])), 0.0};
    const auto num = text::trim(cols[2]);
    const auto* end = num.data() + num.size();
    auto [ptr, ec] = std::from_chars(num.data(), end, row.score);
    if (row.id.empty() || row.metric.empty() || num.empty() || ec != std::errc() || ptr != end) {
      throw ParseError(i + 1, "malformed score row");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lwg
