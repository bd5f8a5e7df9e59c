#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "lwg/corpus_io.hpp"
#include "lwg/grouping.hpp"
#include "lwg/rules.hpp"

namespace lwg::testing {

inline std::filesystem::path testdata(const std::string& name) {
  return std::filesystem::path(LWG_TESTDATA_DIR) / name;
}

inline std::filesystem::path datadir(const std::string& name) {
  return std::filesystem::path(LWG_DATA_DIR) / name;
}

inline Token tok(int index, std::string form, std::string pos, std::optional<int> head,
                 std::string deprel) {
  return Token{index, std::move(form), std::move(pos), head, std::move(deprel)};
}

// Random Hindi-like clauses built from phrase templates the shipped rules
// recognise: noun phrases with an optional postposition, an optional
// adjective, and a verb with up to two auxiliaries.
class SentenceGenerator {
 public:
  explicit SentenceGenerator(std::uint64_t seed) : rng_(seed) {}

  AnnotatedSentence next(const std::string& id) {
    AnnotatedSentence s;
    s.id = id;
    const int n_phrases = pick(1, 4);
    std::vector<int> attach_to_verb;
    for (int p = 0; p < n_phrases; ++p) {
      const int noun = add(s, choose(kNouns), pick(0, 3) == 0 ? "NNP" : "NN", "k1");
      attach_to_verb.push_back(noun);
      if (pick(0, 1) == 1) add(s, choose(kPostpositions), "PSP", "lwg_psp", noun);
      if (pick(0, 3) == 0) attach_to_verb.push_back(add(s, choose(kAdjectives), "JJ", "k1s"));
    }
    if (pick(0, 2) == 0) attach_to_verb.push_back(add(s, choose(kNouns), "NN", "pof"));
    const int verb = add(s, choose(kVerbs), "VM", "main");
    s.tokens[verb - 1].head = 0;
    int prev = verb;
    const int n_aux = pick(0, 2);
    for (int a = 0; a < n_aux; ++a) {
      prev = add(s, choose(kAux), "VAUX", a == 0 ? "lwg_vaux" : "lwg_vaux_cont", prev);
    }
    for (int i : attach_to_verb) s.tokens[i - 1].head = verb;
    for (const auto& t : s.tokens) s.raw_text += (s.raw_text.empty() ? "" : " ") + t.form;
    return s;
  }

  std::vector<AnnotatedSentence> corpus(std::size_t n) {
    std::vector<AnnotatedSentence> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(next("s" + std::to_string(i + 1)));
    return out;
  }

 private:
  static constexpr const char* kNouns[] = {"राम", "घर", "किताब", "नदी", "शहर", "बच्चा",
                                           "मेला", "पानी", "राजा", "दिल्ली", "स्कूल"};
  static constexpr const char* kPostpositions[] = {"ने", "को", "में", "से", "पर", "का"};
  static constexpr const char* kAdjectives[] = {"सुंदर", "बड़ा", "पुराना", "नया"};
  static constexpr const char* kVerbs[] = {"जा", "कर", "देख", "खा", "लिख", "बना"};
  static constexpr const char* kAux[] = {"रहा", "है", "था", "गया", "सकता"};

  template <std::size_t N>
  std::string choose(const char* const (&xs)[N]) {
    return xs[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  static int add(AnnotatedSentence& s, std::string form, std::string pos, std::string deprel,
                 std::optional<int> head = std::nullopt) {
    const int index = static_cast<int>(s.tokens.size()) + 1;
    s.tokens.push_back(tok(index, std::move(form), std::move(pos), head, std::move(deprel)));
    return index;
  }

  std::mt19937_64 rng_;
};

}  // namespace lwg::testing
