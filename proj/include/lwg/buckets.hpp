#pragma once

// Source-length bucketing of per-sentence scores. Bucket width is the
// population standard deviation of the lengths rounded up (at least 1),
// buckets start at the shortest length, and any bucket with fewer than
// `min_instances` members is merged into its lower neighbour (the upper one
// for the first bucket).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace lwg {

struct LengthScore {
  int source_len = 0;
  double score = 0.0;
};

struct Bucket {
  int lo = 0;  // inclusive
  int hi = 0;  // exclusive
  std::size_t count = 0;
  double mean_score = 0.0;
};

struct LengthBuckets {
  int width = 1;
  std::vector<Bucket> buckets;
};

inline LengthBuckets bucket_scores(std::span<const LengthScore> pairs, std::size_t min_instances) {
  if (pairs.empty()) throw std::invalid_argument("bucket_scores: no pairs");
  if (min_instances < 1) throw std::invalid_argument("bucket_scores: min_instances must be >= 1");

  double mean = 0.0;
  for (const auto& p : pairs) mean += p.source_len;
  mean /= static_cast<double>(pairs.size());
  double var = 0.0;
  for (const auto& p : pairs) var += (p.source_len - mean) * (p.source_len - mean);
  var /= static_cast<double>(pairs.size());

  LengthBuckets out;
  out.width = std::max(1, static_cast<int>(std::ceil(std::sqrt(var))));

  const auto [min_it, max_it] = std::minmax_element(
      pairs.begin(), pairs.end(),
      [](const LengthScore& a, const LengthScore& b) { return a.source_len < b.source_len; });
  const int lo = min_it->source_len;
  const int hi = max_it->source_len + 1;

  struct Acc {
    int lo, hi;
    std::size_t count = 0;
    double sum = 0.0;
  };
  std::vector<Acc> acc;
  for (int b = lo; b < hi; b += out.width) acc.push_back({b, std::min(b + out.width, hi)});
  for (const auto& p : pairs) {
    auto& a = acc[static_cast<std::size_t>((p.source_len - lo) / out.width)];
    ++a.count;
    a.sum += p.score;
  }

  for (;;) {
    if (acc.size() <= 1) break;
    auto small = std::find_if(acc.begin(), acc.end(),
                              [&](const Acc& a) { return a.count < min_instances; });
    if (small == acc.end()) break;
    auto target = small == acc.begin() ? small + 1 : small - 1;
    target->lo = std::min(target->lo, small->lo);
    target->hi = std::max(target->hi, small->hi);
    target->count += small->count;
    target->sum += small->sum;
    acc.erase(small);
  }

  for (const auto& a : acc) {
    out.buckets.push_back(
        {a.lo, a.hi, a.count, a.count ? a.sum / static_cast<double>(a.count) : 0.0});
  }
  return out;
}

// `bucket_lo\tbucket_hi\tcount\tmean_score` with a header row.
inline void write_bucket_tsv(const LengthBuckets& b, std::ostream& out) {
  out << "bucket_lo\tbucket_hi\tcount\tmean_score\n";
  char score[32];
  for (const auto& k : b.buckets) {
    std::snprintf(score, sizeof score, "%.4f", k.mean_score);
    out << k.lo << '\t' << k.hi << '\t' << k.count << '\t' << score << '\n';
  }
}

}  // namespace lwg
