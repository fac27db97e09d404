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

#ifndef COMPSUM_RULES_H_
#define COMPSUM_RULES_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "compsum/treebank.h"

namespace compsum {

// Deletion rule families. Declaration order is the precedence used when
// two rules yield the same span.
enum class RuleId {
  kAppositiveNp,
  kRelativeClause,
  kAdverbialClause,
  kAdjpInNp,
  kAdvp,
  kGerundiveVpInNp,
  kPpConfig,
  kParenthetical,
};

inline constexpr int kNumRules = 8;

std::string_view RuleName(RuleId rule);
std::optional<RuleId> RuleFromName(std::string_view name);

struct CompressionOption {
  Span span;
  RuleId rule = RuleId::kAppositiveNp;
  std::string node_label;
  // Set when commas or brackets next to the constituent were folded in.
  bool include_boundary_punct = false;

  friend bool operator==(const CompressionOption &,
                         const CompressionOption &) = default;
};

struct RuleConfig {
  // Heads of PP adjuncts that are deletable regardless of position.
  std::set<std::string> adjunct_prepositions = {
      "on",    "in",    "at",   "by",    "during", "after",  "before",
      "over",  "under", "near", "since", "until",  "within", "throughout"};
};

// Every deletable span licensed by the rule set, sorted by
// (start, -length). Spans are constituents, optionally widened by adjacent
// punctuation; any two results nest or are disjoint.
std::vector<CompressionOption> ExtractOptions(const SentenceTree &tree,
                                              const RuleConfig &config = {});

// Drops whole-sentence options and verifies the nest-or-disjoint property.
// A crossing pair throws std::logic_error.
std::vector<CompressionOption> NormalizeOptions(
    std::vector<CompressionOption> options, int sentence_length);

}  // namespace compsum

#endif  // COMPSUM_RULES_H_
