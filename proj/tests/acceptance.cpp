// Acceptance suite: one status line per criterion. Exit status is non-zero
// when any criterion FAILs. Criteria that need data not shipped with the
// repository (FLORES-200 devtest) read it from the environment and report
// SKIP or PARTIAL when it is absent.
//
//   LWG_FLORES_HIN          plain devtest Hindi, one sentence per line
//   LWG_FLORES_HIN_CONLLU   the same sentences, dependency-annotated

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lwg/lwg.hpp"
#include "support.hpp"

namespace {

using namespace lwg;
using Clock = std::chrono::steady_clock;

// Tolerances and limits.
constexpr double kChrfTolerance = 0.01;
constexpr double kReductionTarget = 26.0;
constexpr double kReductionBand = 6.0;
constexpr std::size_t kFilterTarget = 552;
constexpr std::size_t kFilterBand = 10;
constexpr double kFixtureSeconds = 1.0;
constexpr double kShuffleSeconds = 30.0;
constexpr double kChunkSeconds = 10.0;
constexpr int kPropertyCases = 10000;
constexpr std::size_t kTrendSentences = 250;
constexpr double kExactTolerance = 1e-9;

struct Outcome {
  std::string status;  // PASS, FAIL, SKIP, PARTIAL, INFO
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char b[64];
  std::snprintf(b, sizeof b, f, x);
  return b;
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

const RuleSet& rules() {
  static const RuleSet r = default_rules();
  return r;
}

// 1. Fixture grouped exactly as annotated.
Outcome fixture_exact() {
  const auto t0 = Clock::now();
  const std::string doc = read_file(testing::testdata("table4_fixture.conllu"));
  std::vector<std::string> gold;
  for (auto line : text::lines(doc)) {
    if (line.starts_with("# gold = ")) gold.emplace_back(line.substr(9));
  }
  const auto sentences = parse_conllu(doc);
  std::size_t exact = 0;
  std::string first_miss;
  for (std::size_t i = 0; i < sentences.size() && i < gold.size(); ++i) {
    const auto got = render_grouped(group_sentence(sentences[i], rules()));
    if (got == gold[i]) {
      ++exact;
    } else if (first_miss.empty()) {
      first_miss = sentences[i].id + ": got '" + got + "'";
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = sentences.size() >= 25 && gold.size() == sentences.size() &&
                  exact == sentences.size() && secs < kFixtureSeconds;
  std::string d = std::to_string(exact) + "/" + std::to_string(sentences.size()) +
                  " sentences exact, " + fmt("%.3f s", secs);
  if (!first_miss.empty()) d += "; " + first_miss;
  return {ok ? "PASS" : "FAIL", d};
}

// 2. Reduction: fixture exact; devtest within the band when provided.
Outcome reduction() {
  const auto fixture = parse_conllu(read_file(testing::testdata("table4_fixture.conllu")));
  std::vector<GroupedSentence> g;
  for (const auto& s : fixture) g.push_back(group_sentence(s, rules()));
  const auto r = corpus_stats({{"hin", g}}).front();
  // Hand count from the gold lines: 168 words in 112 groups.
  const bool fixture_ok = r.total_words == 168 && r.total_groups == 112 &&
                          std::abs(r.reduction_pct - 100.0 / 3.0) < kExactTolerance;
  std::string d = "fixture " + std::to_string(r.total_words) + "->" +
                  std::to_string(r.total_groups) + fmt(" (%.2f%%)", r.reduction_pct);
  if (!fixture_ok) return {"FAIL", d + " expected 168->112"};

  const char* path = env("LWG_FLORES_HIN_CONLLU");
  if (!path) return {"PARTIAL", d + "; devtest check not run (LWG_FLORES_HIN_CONLLU unset)"};
  std::vector<GroupedSentence> dev;
  for (const auto& s : parse_conllu(read_file(path))) {
    dev.push_back(group_sentence(s, rules()));
  }
  const auto rd = corpus_stats({{"hin", dev}}).front();
  const bool ok = rd.total_groups < rd.total_words &&
                  std::abs(rd.reduction_pct - kReductionTarget) <= kReductionBand;
  d += "; devtest " + std::to_string(rd.total_words) + "->" + std::to_string(rd.total_groups) +
       fmt(" (%.2f%%, target 26 +/- 6)", rd.reduction_pct);
  return {ok ? "PASS" : "FAIL", d};
}

// 3. Length filter on the devtest.
Outcome length_filter() {
  const char* path = env("LWG_FLORES_HIN");
  if (!path) return {"SKIP", "needs FLORES-200 devtest Hindi (LWG_FLORES_HIN unset)"};
  const auto sentences = parse_plain(read_file(path));
  const auto kept = filter_corpus(sentences, 20).size();
  const auto diff = kept > kFilterTarget ? kept - kFilterTarget : kFilterTarget - kept;
  return {diff <= kFilterBand ? "PASS" : "FAIL",
          std::to_string(kept) + " of " + std::to_string(sentences.size()) +
              " sentences under 20 words (target 552 +/- 10)"};
}

// 4. Shuffle properties over grouped random sentences.
Outcome shuffle_properties() {
  const auto t0 = Clock::now();
  testing::SentenceGenerator gen(404);
  std::mt19937_64 seeds(99);
  const ShuffleSetting settings[] = {ShuffleSetting::full(), ShuffleSetting::window(5),
                                     ShuffleSetting::window(10)};
  std::size_t violations = 0;
  for (int c = 0; c < kPropertyCases; ++c) {
    const auto g = group_sentence(gen.next(std::to_string(c)), rules());
    const bool preserve = c % 2 == 1;
    const auto& setting = settings[c % 3];
    const ShuffleSpec spec{setting, preserve, seeds()};
    const auto units = units_of(g, preserve);
    const auto s = shuffle(units, spec);

    auto a = s.original, b = s.permuted;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    violations += a != b;

    if (preserve) {
      std::string stream = " ";
      for (const auto& u : s.permuted) {
        for (auto w : text::split(u, '_')) stream += std::string(w) + " ";
      }
      for (std::size_t k = 0; k < g.groups.size(); ++k) {
        violations += stream.find(" " + text::join(g.group_words(k), " ") + " ") ==
                      std::string::npos;
      }
    }
    if (setting.kind == ShuffleSetting::Kind::kWindow) {
      const auto w = static_cast<std::size_t>(setting.param);
      for (std::size_t k = 0; k < s.permutation.size(); ++k) {
        const auto from = s.permutation[k];
        violations += from / w != k / w || (from > k ? from - k : k - from) >= w;
      }
    }
    violations += shuffle(units, spec).permutation != s.permutation;
  }
  const double secs = seconds_since(t0);
  const bool ok = violations == 0 && secs < kShuffleSeconds;
  return {ok ? "PASS" : "FAIL", std::to_string(kPropertyCases) + " cases, " +
                                    std::to_string(violations) + " violations, " +
                                    fmt("%.2f s", secs)};
}

// 5. Grouped shuffles stay closer to the original than word shuffles.
Outcome similarity_trend() {
  NgramHashEmbedder e;
  // Exhaustive: "a b c d" as [a b][c d]; feature-space oracle 13/14 vs 19/28.
  const std::vector<std::string> w{"a", "b", "c", "d"};
  const auto ref = e.embed("a b c d");
  const double grouped_exh =
      (cosine(ref, e.embed("a b c d")) + cosine(ref, e.embed("c d a b"))) / 2.0;
  std::vector<int> p{0, 1, 2, 3};
  double ungrouped_exh = 0.0;
  int perms = 0;
  do {
    ungrouped_exh += cosine(ref, e.embed(w[p[0]] + " " + w[p[1]] + " " + w[p[2]] + " " + w[p[3]]));
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  ungrouped_exh /= perms;
  const bool exh_ok = perms == 24 && std::abs(grouped_exh - 13.0 / 14.0) < kExactTolerance &&
                      std::abs(ungrouped_exh - 19.0 / 28.0) < kExactTolerance;

  testing::SentenceGenerator gen(505);
  ParallelCorpus corpus;
  corpus.languages = {"hin"};
  std::vector<GroupedSentence> grouped;
  for (std::size_t i = 0; i < kTrendSentences; ++i) {
    const auto s = gen.next(std::to_string(i + 1));
    grouped.push_back(group_sentence(s, rules()));
    corpus.rows.push_back({s.raw_text});
  }
  const std::vector<ShuffleSetting> settings{ShuffleSetting::full(), ShuffleSetting::window(5),
                                             ShuffleSetting::window(10)};
  const auto t = similarity_experiment(corpus, grouped, settings, e, {});
  bool trend_ok = true;
  std::string d = fmt("exhaustive %.4f vs ", grouped_exh) + fmt("%.4f", ungrouped_exh);
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const double u = t.find(s, false, t.pivot)->mean;
    const double g = t.find(s, true, t.pivot)->mean;
    trend_ok = trend_ok && g >= u;
    d += "; " + settings[s].name() + fmt(" %.4f", u) + fmt("->%.4f", g);
  }
  d += " (" + std::to_string(kTrendSentences) + " sentences x 5 seeds)";
  return {exh_ok && trend_ok ? "PASS" : "FAIL", d};
}

// 6. chrF++ against frozen reference-scorer outputs.
Outcome chrf_equivalence() {
  struct Golden {
    const char* hyp;
    const char* ref;
    double score;
  };
  const Golden goldens[] = {
      {"राम ने रावण को मारा", "राम ने रावण को मारा", 100.0},
      {"रावण को राम ने मारा", "राम ने रावण को मारा", 61.5272227772},
      {"वह घर जा रहा है।", "वह अपने घर जा रहा है।", 64.8907916172},
      {"The cat sat on the mat.", "The cat is sitting on the mat.", 54.2551855195},
      {"सोमवार को, स्टैनफोर्ड यूनिवर्सिटी स्कूल", "সোমবারে স্ট্যানফোর্ড ইউনিভার্সিটি স্কুল", 0.0},
      {"আবিষ্কারের ঘোষণা করেছেন", "আবিষ্কারের ঘোষণা করেছেন।", 86.4554233502},
      {"(hello) world, again!", "hello world again", 46.3528516851},
      {"abc", "xyz", 0.0},
      {"জীবিত থাকার হার অর্ধেক হতে পারে।", "বেঁচে থাকার হার অর্ধেক হতে পারে।", 80.4985015990},
      {"A", "a b", 0.0},
  };
  double worst = 0.0;
  for (const auto& g : goldens) worst = std::max(worst, std::abs(chrfpp(g.hyp, g.ref) - g.score));
  bool identity = true;
  for (const char* s : {"राम ने रावण को मारा", "a", "Hello, world!", "জীবিত থাকার হার"}) {
    identity = identity && chrfpp(s, s) == 100.0;
  }
  return {worst <= kChrfTolerance && identity ? "PASS" : "FAIL",
          fmt("10 pairs, max |diff| %.2e", worst) + (identity ? ", identity = 100" : ", identity != 100")};
}

// 7. Chunker reconstruction, atomicity and singleton equivalence.
Outcome chunk_properties() {
  const auto t0 = Clock::now();
  testing::SentenceGenerator gen(707);
  std::size_t violations = 0;
  for (int c = 0; c < kPropertyCases; ++c) {
    const auto g = group_sentence(gen.next(std::to_string(c)), rules());
    const int width = 1 + c % 8;
    const auto plan = chunk_grouped(g, width);
    std::vector<std::string> rebuilt;
    for (const auto& t : plan.chunk_texts()) {
      for (auto& w : text::split_whitespace(t)) rebuilt.push_back(w);
    }
    violations += rebuilt != g.tokens;
    // Every group lies inside exactly one chunk.
    std::size_t start = 0, unit = 0;
    for (std::size_t k = 0; k < plan.chunk_count(); ++k) {
      std::size_t words = 0;
      for (; unit < plan.boundaries[k]; ++unit) {
        violations += plan.units[unit] != g.group_words(unit);
        words += plan.units[unit].size();
      }
      start += words;
    }
    violations += unit != g.groups.size() || start != g.tokens.size();

    const auto id = identity_grouping(g.id, g.tokens);
    violations += chunk_grouped(id, width).boundaries != chunk_fixed(g.tokens, width).boundaries;
  }
  const double secs = seconds_since(t0);
  return {violations == 0 && secs < kChunkSeconds ? "PASS" : "FAIL",
          std::to_string(kPropertyCases) + " sentences, " + std::to_string(violations) +
              " violations, " + fmt("%.2f s", secs)};
}

// 8. Byte-exact figure prompts.
Outcome golden_prompts() {
  std::string d;
  bool ok = true;
  for (const std::string name : {"figure5", "figure6"}) {
    PromptDocument doc;
    doc.source_lang = "Hindi";
    doc.target_lang = "Bengali";
    doc.shots = read_shots(read_file(testing::testdata(name + "_shots.jsonl")));
    doc.test_chunk =
        std::string(text::trim(read_file(testing::testdata(name + "_test_chunk.txt"))));
    const bool same =
        build_prompt(doc) == read_file(testing::testdata(name + "_prompt.txt"));
    ok = ok && same;
    d += (d.empty() ? "" : ", ") + name + (same ? " identical" : " differs");
  }
  return {ok ? "PASS" : "FAIL", d};
}

// 9. Bucket layout and merge rule.
Outcome bucketing() {
  std::vector<LengthScore> uniform;
  for (int i = 1; i <= 100; ++i) uniform.push_back({i, 0.0});
  const auto b = bucket_scores(uniform, 1);
  const std::vector<std::array<int, 3>> want{{1, 30, 29}, {30, 59, 29}, {59, 88, 29}, {88, 101, 13}};
  bool layout = b.width == 29 && b.buckets.size() == want.size();
  for (std::size_t i = 0; layout && i < want.size(); ++i) {
    layout = b.buckets[i].lo == want[i][0] && b.buckets[i].hi == want[i][1] &&
             b.buckets[i].count == static_cast<std::size_t>(want[i][2]);
  }
  // Crafted: a 9-instance middle bucket between two large ones.
  std::vector<LengthScore> crafted;
  for (int len = 1; len <= 30; ++len) crafted.insert(crafted.end(), 2, {len, 0.0});
  for (int i = 0; i < 5; ++i) crafted.push_back({45, 0.0});
  for (int len = 61; len <= 90; ++len) crafted.insert(crafted.end(), 2, {len, 0.0});
  const auto m = bucket_scores(crafted, 20);
  bool merged = m.buckets.size() == 2;
  for (const auto& x : m.buckets) merged = merged && x.count >= 20;
  return {layout && merged ? "PASS" : "FAIL",
          "width " + std::to_string(b.width) + ", " + std::to_string(b.buckets.size()) +
              " buckets on 1..100; crafted input -> " + std::to_string(m.buckets.size()) +
              " buckets, none under 20"};
}

Outcome translation_gains() {
  return {"INFO",
          "translation-quality gains need an external 3.7B-parameter model; this toolkit "
          "produces both prompt sets and ingests/buckets external scores (see 7-9)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"gold-group fixture", fixture_exact},
      {"word-count reduction", reduction},
      {"length filter count", length_filter},
      {"shuffle properties", shuffle_properties},
      {"similarity trend", similarity_trend},
      {"chrF++ equivalence", chrf_equivalence},
      {"chunker properties", chunk_properties},
      {"golden prompts", golden_prompts},
      {"bucketing", bucketing},
      {"translation gains", translation_gains},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {"FAIL", std::string("exception: ") + e.what()};
    }
    failed += o.status == "FAIL";
    std::printf("%-7s %2zu %s: %s\n", o.status.c_str(), i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
