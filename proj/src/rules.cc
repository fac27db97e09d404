// Copyright 2026 The compsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compsum/rules.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace compsum {
namespace {

constexpr std::array<std::string_view, kNumRules> kRuleNames = {
    "APPOSITIVE_NP", "RELATIVE_CLAUSE", "ADVERBIAL_CLAUSE", "ADJP_IN_NP",
    "ADVP",          "GERUNDIVE_VP_IN_NP", "PP_CONFIG",     "PARENTHETICAL"};

// Complementizers that introduce argument clauses rather than adjuncts.
constexpr std::array<std::string_view, 2> kComplementizers = {"that",
                                                              "whether"};

bool IsClauseCategory(std::string_view c) {
  return c == "S" || c == "SINV" || c == "SQ" || c == "VP";
}

bool IsLeafTagged(const TreeNode &n, std::string_view tag) {
  return n.is_leaf() && n.label == tag;
}

bool IsComma(const TreeNode &n) { return IsLeafTagged(n, ","); }

bool IsOpenBracket(const TreeNode &n) {
  return n.is_leaf() &&
         (n.label == "-LRB-" || n.label == "-LSB-" || n.label == "-LCB-");
}

bool IsCloseBracket(const TreeNode &n) {
  return n.is_leaf() &&
         (n.label == "-RRB-" || n.label == "-RSB-" || n.label == "-RCB-");
}

bool IsAdjectiveTag(std::string_view t) {
  return t == "JJ" || t == "JJR" || t == "JJS";
}

bool IsWhTag(std::string_view t) {
  return t == "WDT" || t == "WP" || t == "WP$" || t == "WRB";
}

bool IsNominal(const TreeNode &n) {
  std::string_view c = n.category();
  return c.starts_with("NN") || c == "NP" || c == "NX";
}

const TreeNode &FirstLeaf(const TreeNode &n) {
  const TreeNode *cur = &n;
  while (!cur->is_leaf()) cur = &cur->children.front();
  return *cur;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Candidate {
  Span bare;
  RuleId rule;
  std::string label;
  // Alternative spans with absorbed punctuation, most preferred first.
  std::vector<Span> widenings;
};

class OptionFinder {
 public:
  OptionFinder(const SentenceTree &tree, const RuleConfig &config)
      : tree_(tree), config_(config) {}

  std::vector<Candidate> Run() {
    Visit(tree_.root);
    return std::move(found_);
  }

 private:
  void Visit(const TreeNode &parent) {
    for (std::size_t j = 0; j < parent.children.size(); ++j) {
      MatchChild(parent, j);
      if (!parent.children[j].is_leaf()) Visit(parent.children[j]);
    }
    MatchBracketPairs(parent);
  }

  void Add(const TreeNode &node, RuleId rule, std::vector<Span> widenings = {}) {
    found_.push_back(Candidate{node.span, rule, std::string(node.category()),
                               std::move(widenings)});
  }

  // Comma absorption for clause-level deletions: left comma first.
  static std::vector<Span> CommaWidenings(const TreeNode &parent,
                                          std::size_t j) {
    const TreeNode &c = parent.children[j];
    std::vector<Span> out;
    if (j > 0 && IsComma(parent.children[j - 1])) {
      out.push_back({parent.children[j - 1].span.start, c.span.end});
    }
    if (j + 1 < parent.children.size() && IsComma(parent.children[j + 1])) {
      out.push_back({c.span.start, parent.children[j + 1].span.end});
    }
    return out;
  }

  void MatchChild(const TreeNode &parent, std::size_t j) {
    const auto &kids = parent.children;
    const TreeNode &child = kids[j];
    std::string_view pc = parent.category();
    std::string_view cc = child.category();
    bool has_left_comma = j > 0 && IsComma(kids[j - 1]);
    bool at_end = j + 1 == kids.size();
    bool has_right_comma = !at_end && IsComma(kids[j + 1]);

    if (cc == "NP" && has_left_comma && (has_right_comma || at_end)) {
      bool licensed = false;
      if (pc == "NP") {
        bool coordination = std::any_of(kids.begin(), kids.end(), [](const TreeNode &k) {
          return k.category() == "CC";
        });
        licensed = j >= 2 && !coordination;
      } else {
        licensed = j >= 2 && kids[j - 2].category() == "NP" && has_right_comma;
      }
      if (licensed) {
        int left = kids[j - 1].span.start;
        std::vector<Span> widen;
        if (has_right_comma) widen.push_back({left, kids[j + 1].span.end});
        widen.push_back({left, child.span.end});
        Add(child, RuleId::kAppositiveNp, std::move(widen));
      }
    }

    if (cc == "SBAR" && !child.is_leaf()) {
      const TreeNode &first = child.children.front();
      std::string_view fc = first.category();
      if (pc == "NP" && (fc == "WHNP" || fc == "WHADVP" || fc == "WHPP" ||
                         IsWhTag(FirstLeaf(child).label))) {
        Add(child, RuleId::kRelativeClause, CommaWidenings(parent, j));
      } else if (IsClauseCategory(pc) && IsLeafTagged(first, "IN")) {
        std::string word = Lower(tree_.tokens[first.span.start].text);
        if (std::find(kComplementizers.begin(), kComplementizers.end(), word) ==
            kComplementizers.end()) {
          Add(child, RuleId::kAdverbialClause, CommaWidenings(parent, j));
        }
      }
    }

    if (pc == "NP" && (cc == "ADJP" || (child.is_leaf() && IsAdjectiveTag(cc)))) {
      bool premodifier = std::any_of(kids.begin() + j + 1, kids.end(), IsNominal);
      if (premodifier) Add(child, RuleId::kAdjpInNp);
    }

    if (cc == "ADVP" && IsClauseCategory(pc)) {
      Add(child, RuleId::kAdvp, CommaWidenings(parent, j));
    } else if (pc == "VP" && IsLeafTagged(child, "RB")) {
      bool before_verb = std::any_of(kids.begin() + j + 1, kids.end(), [](const TreeNode &k) {
        std::string_view c = k.category();
        return c.starts_with("VB") || c == "VP";
      });
      if (before_verb) Add(child, RuleId::kAdvp);
    }

    if (pc == "NP" && cc == "VP" && !child.is_leaf()) {
      auto head = std::find_if(child.children.begin(), child.children.end(),
                               [](const TreeNode &k) {
                                 return k.is_leaf() && k.label.starts_with("VB");
                               });
      if (head != child.children.end() && head->label == "VBG") {
        Add(child, RuleId::kGerundiveVpInNp, CommaWidenings(parent, j));
      }
    }

    if (cc == "PP" && IsClauseCategory(pc) && !child.is_leaf()) {
      bool object_follows = std::any_of(kids.begin() + j + 1, kids.end(), [](const TreeNode &k) {
        return k.category() == "NP";
      });
      std::string head = Lower(tree_.tokens[FirstLeaf(child).span.start].text);
      if (!object_follows || config_.adjunct_prepositions.contains(head)) {
        Add(child, RuleId::kPpConfig, CommaWidenings(parent, j));
      }
    }

    if (cc == "PRN") {
      std::vector<Span> widen;
      if (j > 0 && !at_end && IsOpenBracket(kids[j - 1]) &&
          IsCloseBracket(kids[j + 1])) {
        widen.push_back({kids[j - 1].span.start, kids[j + 1].span.end});
      }
      Add(child, RuleId::kParenthetical, std::move(widen));
    }
  }

  // Sibling runs enclosed by matching bracket leaves, brackets included.
  void MatchBracketPairs(const TreeNode &parent) {
    const auto &kids = parent.children;
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (!IsOpenBracket(kids[j])) continue;
      int depth = 0;
      for (std::size_t l = j + 1; l < kids.size(); ++l) {
        if (IsOpenBracket(kids[l])) {
          ++depth;
        } else if (IsCloseBracket(kids[l])) {
          if (depth == 0) {
            found_.push_back(Candidate{{kids[j].span.start, kids[l].span.end},
                                       RuleId::kParenthetical,
                                       "PRN",
                                       {}});
            break;
          }
          --depth;
        }
      }
    }
  }

  const SentenceTree &tree_;
  const RuleConfig &config_;
  std::vector<Candidate> found_;
};

}  // namespace

std::string_view RuleName(RuleId rule) {
  return kRuleNames[static_cast<int>(rule)];
}

std::optional<RuleId> RuleFromName(std::string_view name) {
  for (int i = 0; i < kNumRules; ++i) {
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

std::vector<CompressionOption> ExtractOptions(const SentenceTree &tree,
                                              const RuleConfig &config) {
  std::vector<Candidate> found = OptionFinder(tree, config).Run();

  // Widen one candidate at a time, accepting a widening only if it does not
  // cross the current span of any other candidate.
  std::vector<Span> current;
  current.reserve(found.size());
  for (const Candidate &c : found) current.push_back(c.bare);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Span &w : found[i].widenings) {
      bool ok = true;
      for (std::size_t j = 0; j < found.size() && ok; ++j) {
        if (j != i && w.Crosses(current[j])) ok = false;
      }
      if (ok) {
        current[i] = w;
        break;
      }
    }
  }

  std::vector<CompressionOption> options;
  options.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    options.push_back(CompressionOption{current[i], found[i].rule,
                                        found[i].label,
                                        current[i] != found[i].bare});
  }
  std::stable_sort(options.begin(), options.end(),
                   [](const CompressionOption &a, const CompressionOption &b) {
                     if (a.span.start != b.span.start) return a.span.start < b.span.start;
                     if (a.span.end != b.span.end) return a.span.end > b.span.end;
                     return a.rule < b.rule;
                   });
  options.erase(std::unique(options.begin(), options.end(),
                            [](const CompressionOption &a, const CompressionOption &b) {
                              return a.span == b.span;
                            }),
                options.end());
  return NormalizeOptions(std::move(options), tree.size());
}

std::vector<CompressionOption> NormalizeOptions(
    std::vector<CompressionOption> options, int sentence_length) {
  std::erase_if(options, [&](const CompressionOption &o) {
    return o.span.start <= 0 && o.span.end >= sentence_length;
  });
  for (std::size_t i = 0; i < options.size(); ++i) {
    for (std::size_t j = i + 1; j < options.size(); ++j) {
      if (options[i].span.Crosses(options[j].span)) {
        throw std::logic_error(
            "compression options partially overlap: [" +
            std::to_string(options[i].span.start) + "," +
            std::to_string(options[i].span.end) + ") and [" +
            std::to_string(options[j].span.start) + "," +
            std::to_string(options[j].span.end) + ")");
      }
    }
  }
  return options;
}

}  // namespace compsum
