#pragma once

// Built-in copy of data/table4.rules (kept identical; a test checks it).

#include <string_view>

#include "lwg/corpus_io.hpp"

namespace lwg {

inline constexpr std::string_view kDefaultRules = R"RULES(# Hindi local word grouping rules (treebank tagset, intra-chunk relations).
#
# Format: dependent POS | head POS | relation | flags
#   The dependent is the token carrying the relation label; it is merged with
#   its head when the two sit in neighbouring groups. `any` matches every tag.
#   `chain` lets the rule extend groups that already hold several words;
#   without it the rule only fuses two single words.
#
# Postposition/case marker on a noun, pronoun, verb or another
# postposition: हॉल-में, जाने-के-लिए, लगने-वाला
PSP | NN,NNP,VM,PRP,PSP | lwg_psp | chain
# Auxiliary continuing an auxiliary or main verb: जाता-था, रहता-है, हुआ-है, गए-है
VAUX | VAUX,VM | lwg_vaux_cont | chain
# Auxiliary on a main verb: बसाया-गया, कहती-है, बनवाया-था, बनी-हुई, देती-है, लिए-हुए
VAUX | VM | lwg_vaux | chain
# Particle on a verb: देखते-ही, बड़ा-सा, एक-ही
RP | VM | lwg_rp | chain
# Noun part of a conjunct verb: बंद-रहता, आनंद-उठा, स्मृति-दिलाता, अलग-होना
# The source lists the head tag as JJ under category "v"; both are accepted.
NN | JJ,VM | pof |
# Compound name parts: म.प्र.-पर्यटन-बोट-क्लब, विमान-सेवा, 17वीं-शताब्दी, रुद्र-प्रताप
NNPC,NNC | any | pof_cn | chain
# Noun part of a conjunct with any head. Not chained, so a negated verb
# keeps its noun outside: क्या नहीं-किया, प्रवेश नहीं-मिलता
NN,NNP | any | pof |
)RULES";

inline RuleSet default_rules() { return load_rules(kDefaultRules); }

}  // namespace lwg
