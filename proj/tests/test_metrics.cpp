#include <gtest/gtest.h>

#include <sstream>

#include "lwg/buckets.hpp"
#include "lwg/chrf.hpp"
#include "lwg/external_scores.hpp"

namespace lwg {
namespace {

struct Golden {
  const char* hyp;
  const char* ref;
  double score;
};

// sacrebleu 2.6.0, CHRF(word_order=2):
// nrefs:1|case:mixed|eff:yes|nc:6|nw:2|space:no|version:2.6.0
const Golden kGoldens[] = {
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

TEST(Chrf, SentenceGoldens) {
  for (const auto& g : kGoldens) {
    EXPECT_NEAR(chrfpp(g.hyp, g.ref), g.score, 1e-6) << g.hyp;
  }
}

TEST(Chrf, CorpusGolden) {
  std::vector<std::string> hyps, refs;
  for (const auto& g : kGoldens) {
    hyps.emplace_back(g.hyp);
    refs.emplace_back(g.ref);
  }
  EXPECT_NEAR(corpus_chrfpp(hyps, refs), 56.8579657637, 1e-6);
}

TEST(Chrf, PlainChrfAndEdgeCases) {
  ChrfConfig plain;
  plain.word_order = 0;
  EXPECT_NEAR(chrfpp("The cat sat on the mat.", "The cat is sitting on the mat.", plain),
              49.6485170311, 1e-6);
  EXPECT_DOUBLE_EQ(chrfpp("", "abc"), 0.0);
  EXPECT_THROW(chrfpp("abc", ""), std::domain_error);
  EXPECT_THROW(chrfpp("abc", "   "), std::domain_error);
  EXPECT_DOUBLE_EQ(chrfpp("x y z", "x y z"), 100.0);
}

TEST(Chrf, Signature) {
  EXPECT_EQ(ChrfConfig{}.signature(), "nrefs:1|case:mixed|eff:yes|nc:6|nw:2|space:no");
}

TEST(Chrf, WordSplitting) {
  const auto w = detail::chrf_words("(hello) world, again! a.");
  std::vector<std::string> got;
  for (const auto& x : w) got.push_back(text::encode(x));
  // Only a single trailing or leading punctuation character is split off.
  EXPECT_EQ(got, (std::vector<std::string>{"(hello", ")", "world", ",", "again", "!", "a",
                                           "."}));
}

TEST(Chrf, MismatchedCorpusSizes) {
  std::vector<std::string> h{"a"}, r{"a", "b"};
  EXPECT_THROW(corpus_chrfpp(h, r), std::invalid_argument);
}

std::vector<LengthScore> lengths(int lo, int hi, double score = 0.0) {
  std::vector<LengthScore> v;
  for (int i = lo; i <= hi; ++i) v.push_back({i, score});
  return v;
}

TEST(Buckets, OneToHundred) {
  const auto b = bucket_scores(lengths(1, 100), 1);
  EXPECT_EQ(b.width, 29);
  ASSERT_EQ(b.buckets.size(), 4u);
  const int lo[] = {1, 30, 59, 88}, hi[] = {30, 59, 88, 101};
  const std::size_t count[] = {29, 29, 29, 13};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(b.buckets[i].lo, lo[i]);
    EXPECT_EQ(b.buckets[i].hi, hi[i]);
    EXPECT_EQ(b.buckets[i].count, count[i]);
  }
}

TEST(Buckets, EqualLengthsSingleBucket) {
  std::vector<LengthScore> v(30, {7, 50.0});
  v[3].score = 80.0;
  const auto b = bucket_scores(v, 20);
  EXPECT_EQ(b.width, 1);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].lo, 7);
  EXPECT_EQ(b.buckets[0].hi, 8);
  EXPECT_NEAR(b.buckets[0].mean_score, 51.0, 1e-12);
}

TEST(Buckets, SparseMiddleBucketMergesDown) {
  // Width 31 gives [1,32) 60, [32,63) 9, [63,91) 56 before merging.
  std::vector<LengthScore> v;
  for (int len = 1; len <= 30; ++len) v.insert(v.end(), 2, {len, 10.0});
  for (int i = 0; i < 5; ++i) v.push_back({45, 40.0});
  for (int len = 61; len <= 90; ++len) v.insert(v.end(), 2, {len, 70.0});
  const auto b = bucket_scores(v, 20);
  EXPECT_EQ(b.width, 31);
  ASSERT_EQ(b.buckets.size(), 2u);
  for (const auto& x : b.buckets) EXPECT_GE(x.count, 20u);
  EXPECT_EQ(b.buckets[0].lo, 1);
  EXPECT_EQ(b.buckets[0].hi, 63);
  EXPECT_EQ(b.buckets[0].count, 69u);
  EXPECT_NEAR(b.buckets[0].mean_score, (60 * 10.0 + 5 * 40.0 + 4 * 70.0) / 69.0, 1e-12);
  EXPECT_EQ(b.buckets[1].lo, 63);
  EXPECT_EQ(b.buckets[1].hi, 91);
  EXPECT_EQ(b.buckets[1].count, 56u);
}

TEST(Buckets, SparseFirstBucketMergesUp) {
  std::vector<LengthScore> v;
  for (int i = 0; i < 3; ++i) v.push_back({1, 0.0});
  for (int i = 0; i < 60; ++i) v.push_back({30, 0.0});
  const auto b = bucket_scores(v, 20);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].count, 63u);
}

TEST(Buckets, EverythingSparseCollapsesToOne) {
  const auto b = bucket_scores(lengths(1, 10), 20);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].count, 10u);
}

TEST(Buckets, PartitionAndTsv) {
  const auto b = bucket_scores(lengths(3, 77, 1.5), 7);
  std::size_t total = 0;
  for (std::size_t i = 0; i < b.buckets.size(); ++i) {
    total += b.buckets[i].count;
    EXPECT_GE(b.buckets[i].count, 7u);
    if (i > 0) EXPECT_EQ(b.buckets[i].lo, b.buckets[i - 1].hi);
  }
  EXPECT_EQ(total, 75u);
  std::ostringstream out;
  write_bucket_tsv(b, out);
  EXPECT_TRUE(out.str().starts_with("bucket_lo\tbucket_hi\tcount\tmean_score\n3\t"));
  EXPECT_NE(out.str().find("\t1.5000\n"), std::string::npos);
  EXPECT_THROW(bucket_scores(std::vector<LengthScore>{}, 1), std::invalid_argument);
}

TEST(ExternalScores, Parse) {
  const auto s = ingest_external_scores(
      "# scorer output\nid\tmetric\tscore\n1\tchrF++\t37.55\n2\tspBLEU\t4.3\n\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].id, "1");
  EXPECT_EQ(s[0].metric, "chrF++");
  EXPECT_DOUBLE_EQ(s[0].score, 37.55);
  EXPECT_DOUBLE_EQ(s[1].score, 4.3);
  EXPECT_TRUE(ingest_external_scores("").empty());
}

TEST(ExternalScores, MalformedRowNamesLine) {
  try {
    ingest_external_scores("1\tchrF++\t37.5\n2\tchrF++\tabc\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ingest_external_scores("1\tchrF++\n"), ParseError);
}

}  // namespace
}  // namespace lwg
