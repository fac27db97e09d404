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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "compsum/rules.h"
#include "compsum/treebank.h"
#include "doctest.h"
#include "support/test_support.h"

namespace compsum {
namespace {

void CollectSpans(const TreeNode &node, std::set<Span> *out) {
  out->insert(node.span);
  for (const TreeNode &c : node.children) CollectSpans(c, out);
}

bool IsBoundaryPunct(const std::string &token) {
  return token == "," || token == "(" || token == ")" || token == "[" || token == "]" ||
         token == "{" || token == "}";
}

TEST_CASE("hand-annotated fixtures yield exactly the gold options") {
  for (const testing::RuleFixture &f : testing::RuleFixtures()) {
    CAPTURE(f.name);
    SentenceTree tree = ParsePtb(f.ptb);
    std::vector<CompressionOption> got = ExtractOptions(tree);
    REQUIRE(got.size() == f.gold.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CAPTURE(i);
      CHECK(got[i].span == Span{f.gold[i].start, f.gold[i].end});
      CHECK(got[i].rule == f.gold[i].rule);
    }
  }
}

TEST_CASE("fixtures cover every rule") {
  std::set<RuleId> seen;
  for (const testing::RuleFixture &f : testing::RuleFixtures()) {
    for (const testing::GoldOption &g : f.gold) seen.insert(g.rule);
  }
  CHECK(seen.size() == static_cast<std::size_t>(kNumRules));
}

TEST_CASE("portrait fragment options") {
  SentenceTree tree = ParsePtb(testing::RuleFixtures()[0].ptb);
  std::vector<CompressionOption> got = ExtractOptions(tree);
  auto text = [&](const CompressionOption &o) {
    std::string s;
    for (int i = o.span.start; i < o.span.end; ++i) s += (s.empty() ? "" : " ") + tree.tokens[i].text;
    return s;
  };
  std::set<std::string> texts;
  for (const auto &o : got) texts.insert(text(o));
  CHECK(texts.count("intimate"));
  CHECK(texts.count("well-known"));
  CHECK(texts.count("with their furry friends"));
  CHECK(texts.count("featuring well-known artists with their furry friends"));
  CHECK(got[1].node_label == "VP");
  CHECK(got[2].node_label == "ADJP");
  CHECK(got[0].span.Disjoint(got[1].span));
  CHECK(got[1].span.Contains(got[3].span));
}

TEST_CASE("nothing to delete") {
  CHECK(ExtractOptions(ParsePtb("(S (NP (PRP He)) (VP (VBD ran)))")).empty());
}

TEST_CASE("appositive absorbs both commas") {
  SentenceTree tree =
      ParsePtb("(S (NP (NN John)) (, ,) (NP (DT a) (NN doctor)) (, ,) (VP (VBD spoke)))");
  std::vector<CompressionOption> got = ExtractOptions(tree);
  REQUIRE(got.size() == 1);
  CHECK(got[0].rule == RuleId::kAppositiveNp);
  CHECK(got[0].span == Span{1, 5});
  CHECK(got[0].include_boundary_punct);
  CHECK(RenderWithDeletions(tree, std::vector<Span>{got[0].span}) == "John spoke");
}

TEST_CASE("coordination is not an appositive") {
  SentenceTree tree = ParsePtb(
      "(S (NP (NP (NNS apples)) (, ,) (NP (NNS pears)) (, ,) (CC and) (NP (NNS plums))) "
      "(VP (VBD fell)))");
  for (const CompressionOption &o : ExtractOptions(tree)) CHECK(o.rule != RuleId::kAppositiveNp);
}

TEST_CASE("prepositions outside the adjunct list stay when an object follows") {
  RuleConfig cfg;
  cfg.adjunct_prepositions.insert("to");
  SentenceTree tree = ParsePtb(testing::RuleFixtures()[9].ptb);
  CHECK(ExtractOptions(tree).empty());
  std::vector<CompressionOption> got = ExtractOptions(tree, cfg);
  REQUIRE(got.size() == 1);
  CHECK(got[0].span == Span{2, 4});
}

TEST_CASE("rule names round-trip") {
  for (int r = 0; r < kNumRules; ++r) {
    RuleId id = static_cast<RuleId>(r);
    CHECK(RuleFromName(RuleName(id)) == id);
  }
  CHECK(RuleName(RuleId::kAppositiveNp) == "APPOSITIVE_NP");
  CHECK_FALSE(RuleFromName("NOT_A_RULE").has_value());
}

TEST_CASE("normalize options") {
  CHECK(NormalizeOptions({}, 5).empty());
  CompressionOption whole{Span{0, 5}, RuleId::kAdvp, "ADVP", false};
  CompressionOption part{Span{1, 3}, RuleId::kAdvp, "ADVP", false};
  CHECK(NormalizeOptions({whole, part}, 5) == std::vector<CompressionOption>{part});
  CompressionOption outer{Span{1, 5}, RuleId::kGerundiveVpInNp, "VP", false};
  CompressionOption inner{Span{3, 5}, RuleId::kPpConfig, "PP", false};
  CHECK(NormalizeOptions({outer, inner}, 6).size() == 2);
  CompressionOption crossing{Span{2, 6}, RuleId::kPpConfig, "PP", false};
  CHECK_THROWS_AS(NormalizeOptions({outer, crossing}, 8), std::logic_error);
}

TEST_CASE("property: random trees give nested or disjoint constituent options") {
  testing::TreeGrammar grammar(3);
  std::mt19937_64 rng(9);
  std::vector<int> per_rule(kNumRules, 0);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text = grammar.Sentence();
    CAPTURE(text);
    SentenceTree tree = ParsePtb(text);
    std::vector<CompressionOption> options = ExtractOptions(tree);
    CHECK(ExtractOptions(tree) == options);

    std::set<Span> constituents;
    CollectSpans(tree.root, &constituents);
    for (std::size_t i = 0; i < options.size(); ++i) {
      const Span &s = options[i].span;
      ++per_rule[static_cast<int>(options[i].rule)];
      CHECK(s.length() > 0);
      CHECK(s.length() < tree.size());
      for (std::size_t j = i + 1; j < options.size(); ++j) {
        CHECK_FALSE(s.Crosses(options[j].span));
        CHECK_FALSE(s == options[j].span);
      }
      if (options[i].rule == RuleId::kParenthetical) continue;
      // A constituent plus at most one absorbed punctuation token per side.
      bool found = false;
      for (int left = 0; left <= 1; ++left) {
        for (int right = 0; right <= 1; ++right) {
          Span core{s.start + left, s.end - right};
          if (core.length() < 1) continue;
          if (left && !IsBoundaryPunct(tree.tokens[s.start].text)) continue;
          if (right && !IsBoundaryPunct(tree.tokens[s.end - 1].text)) continue;
          found = found || constituents.count(core) == 1;
        }
      }
      CHECK(found);
    }

    // Any subset of options deletes cleanly and leaves a subsequence.
    std::vector<Span> chosen;
    for (const CompressionOption &o : options) {
      if (testing::Uniform(rng, 0, 1)) chosen.push_back(o.span);
    }
    std::vector<std::string> kept = SurvivingTokens(tree, chosen);
    CHECK(testing::IsSubsequence(kept, tree.words()));
  }
  for (int r = 0; r < kNumRules; ++r) {
    CAPTURE(r);
    CHECK(per_rule[r] > 0);
  }
}

}  // namespace
}  // namespace compsum
