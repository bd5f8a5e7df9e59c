#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lwg {

// One whitespace-separated word of an annotated sentence.
struct Token {
  int index = 0;               // 1-based position
  std::string form;
  std::string pos;             // treebank tag (XPOS)
  std::optional<int> head;     // 0 = root; empty when unannotated
  std::string deprel;

  friend bool operator==(const Token&, const Token&) = default;
};

// A set of POS tags, or the wildcard `any`.
struct PosSet {
  bool any = false;
  std::vector<std::string> tags;

  static PosSet wildcard() { return PosSet{true, {}}; }

  bool contains(const std::string& tag) const {
    return any || std::find(tags.begin(), tags.end(), tag) != tags.end();
  }
  bool empty() const { return !any && tags.empty(); }

  friend bool operator==(const PosSet&, const PosSet&) = default;
};

struct GroupingRule {
  PosSet dep_pos;
  PosSet head_pos;
  std::string deprel;
  // A chain rule may merge groups that already hold several tokens; other
  // rules only fuse two single-token groups.
  bool chain = false;
  // Always in force: merges happen only between neighbouring groups.
  bool adjacent_only = true;

  friend bool operator==(const GroupingRule&, const GroupingRule&) = default;
};

struct RuleSet {
  std::vector<GroupingRule> rules;
  std::string delimiter = "_";
};

// True when `dependent` attaches to `head` through the rule's relation and
// both POS tags fall in the rule's sets. Adjacency is the engine's concern.
inline bool rule_matches(const GroupingRule& rule, const Token& dependent,
                         const Token& head) {
  return dependent.deprel == rule.deprel && dependent.head.has_value() &&
         *dependent.head == head.index && rule.dep_pos.contains(dependent.pos) &&
         rule.head_pos.contains(head.pos);
}

}  // namespace lwg
