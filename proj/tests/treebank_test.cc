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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "compsum/treebank.h"
#include "doctest.h"
#include "support/test_support.h"

namespace compsum {
namespace {

// Preterminal; the word itself lives in SentenceTree::tokens.
TreeNode Leaf(const std::string &tag, int i) { return TreeNode{tag, {}, Span{i, i + 1}}; }

TreeNode Node(const std::string &label, std::vector<TreeNode> children) {
  Span span{children.front().span.start, children.back().span.end};
  return TreeNode{label, std::move(children), span};
}

bool SameTree(const TreeNode &a, const TreeNode &b) {
  if (a.label != b.label || !(a.span == b.span) || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!SameTree(a.children[i], b.children[i])) return false;
  }
  return true;
}

void CheckSpans(const TreeNode &node, int *next_leaf) {
  if (node.is_leaf()) {
    CHECK(node.span == Span{*next_leaf, *next_leaf + 1});
    ++*next_leaf;
    return;
  }
  for (const TreeNode &c : node.children) CheckSpans(c, next_leaf);
  CHECK(node.span.start == node.children.front().span.start);
  CHECK(node.span.end == node.children.back().span.end);
}

TEST_CASE("two-leaf noun phrase") {
  SentenceTree t = ParsePtb("(NP (DT the) (NN cat))");
  CHECK(t.root.label == "NP");
  CHECK(t.root.span == Span{0, 2});
  CHECK(t.words() == std::vector<std::string>{"the", "cat"});
  CHECK(t.root.children[0].is_leaf());
  CHECK(t.tokens[1].index == 1);
}

TEST_CASE("spans follow leaf order") {
  SentenceTree t = ParsePtb("(S (NP (PRP He)) (VP (VBD ran)))");
  CHECK(t.root.span == Span{0, 2});
  CHECK(t.root.children[0].span == Span{0, 1});
  CHECK(t.root.children[1].span == Span{1, 2});
}

TEST_CASE("unlabeled wrapper is removed") {
  struct Case {
    std::string text;
    TreeNode expected;
  };
  std::vector<Case> cases = {
      {"((S (NP (PRP He)) (VP (VBD ran))))",
       Node("S", {Node("NP", {Leaf("PRP", 0)}), Node("VP", {Leaf("VBD", 1)})})},
      {"( (NP (DT the) (NN cat)) )", Node("NP", {Leaf("DT", 0), Leaf("NN", 1)})},
      {"(\n  (S\n    (NP-SBJ (NNP Mary))\n    (VP (VBZ sings))\n    (. .)))",
       Node("S", {Node("NP-SBJ", {Leaf("NNP", 0)}), Node("VP", {Leaf("VBZ", 1)}),
                  Leaf(".", 2)})},
      {"((FRAG (NN x)))", Node("FRAG", {Leaf("NN", 0)})},
      {"((S (NP (-LRB- -LRB-) (NN a) (-RRB- -RRB-)) (VP (VB go))))",
       Node("S", {Node("NP", {Leaf("-LRB-", 0), Leaf("NN", 1), Leaf("-RRB-", 2)}),
                  Node("VP", {Leaf("VB", 3)})})},
  };
  for (const Case &c : cases) {
    CAPTURE(c.text);
    SentenceTree t = ParsePtb(c.text);
    CHECK(SameTree(t.root, c.expected));
    std::string inner = c.text.substr(c.text.find('(', 1));
    inner = inner.substr(0, inner.find_last_of(')'));
    CHECK(ToPtb(t) == ToPtb(ParsePtb(inner)));
  }
}

TEST_CASE("bracket tokens are unescaped and written back escaped") {
  SentenceTree t = ParsePtb("(NP (-LRB- -LRB-) (NN x) (-RRB- -RRB-) (-LCB- -LCB-))");
  CHECK(t.words() == std::vector<std::string>{"(", "x", ")", "{"});
  CHECK(t.root.children[0].label == "-LRB-");
  CHECK(ToPtb(t) == "(NP (-LRB- -LRB-) (NN x) (-RRB- -RRB-) (-LCB- -LCB-))");
  CHECK(EscapeToken("[") == "-LSB-");
  CHECK(UnescapeToken("-RSB-") == "]");
  CHECK(UnescapeToken("word") == "word");
}

TEST_CASE("category strips function tags") {
  SentenceTree t = ParsePtb("(S (NP-SBJ-1 (PRP He)) (VP (VBD ran)) (-NONE- *))");
  CHECK(t.root.children[0].category() == "NP");
  CHECK(t.root.children[2].category() == "-NONE-");
}

TEST_CASE("malformed input reports an offset") {
  SUBCASE("missing close") {
    std::string text = "(NP (DT the) (NN cat)";
    try {
      ParsePtb(text);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.offset() == text.size());
    }
  }
  SUBCASE("extra close") {
    try {
      ParsePtb("(NP (DT the)))");
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.offset() == 13);
    }
  }
  CHECK_THROWS_AS(ParsePtb(""), ParseError);
  CHECK_THROWS_AS(ParsePtb("   "), ParseError);
  CHECK_THROWS_AS(ParsePtb("(NP )"), ParseError);
  CHECK_THROWS_AS(ParsePtb("((NP (DT a)) (NP (DT b)))"), ParseError);
}

TEST_CASE("node spans") {
  SentenceTree t = ParsePtb("(S (NP (DT a) (NN b)) (VP (VBD c) (NP (DT d) (NN e))))");
  const TreeNode &leaf = t.root.children[1].children[1].children[1];
  CHECK(NodeSpan(leaf) == Span{4, 5});
  CHECK(NodeSpan(t.root.children[1].children[1].children[0]).start == 3);
  CHECK(NodeSpan(t.root) == Span{0, t.size()});
  int next = 0;
  CheckSpans(t.root, &next);
  CHECK(next == t.size());
}

TEST_CASE("render with deletions") {
  SentenceTree abc = ParsePtb("(S (NN a) (NN b) (NN c))");
  CHECK(RenderWithDeletions(abc, {}) == "a b c");
  std::vector<Span> one = {{1, 2}};
  CHECK(RenderWithDeletions(abc, one) == "a c");
  SentenceTree five = ParsePtb("(S (NN a) (NN b) (NN c) (NN d) (NN e))");
  std::vector<Span> nested = {{1, 4}, {2, 3}};
  CHECK(RenderWithDeletions(five, nested) == "a e");
  std::vector<Span> all = {{0, 5}};
  CHECK(RenderWithDeletions(five, all).empty());
  std::vector<Span> crossing = {{1, 3}, {2, 4}};
  CHECK_THROWS_AS(RenderWithDeletions(five, crossing), std::invalid_argument);
  std::vector<Span> outside = {{3, 7}};
  CHECK_THROWS_AS(RenderWithDeletions(five, outside), std::invalid_argument);
  CHECK(SurvivingTokens(five, nested) == std::vector<std::string>{"a", "e"});
}

TEST_CASE("property: random trees round-trip with consistent spans") {
  testing::TreeGrammar grammar(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = grammar.Sentence();
    CAPTURE(text);
    SentenceTree t = ParsePtb(text);
    CHECK(ToPtb(t) == text);
    SentenceTree again = ParsePtb(ToPtb(t));
    CHECK(SameTree(t.root, again.root));
    CHECK(again.words() == t.words());
    int next = 0;
    CheckSpans(t.root, &next);
    CHECK(next == t.size());
  }
}

TEST_CASE("property: rendering ignores deletion order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = testing::Uniform(rng, 3, 12);
    SentenceTree t = testing::FlatSentence(testing::RandomWords(rng, n, 30));
    // Nested family: a chain of shrinking spans plus a disjoint tail span.
    std::vector<Span> spans;
    int a = testing::Uniform(rng, 0, n - 2);
    int b = testing::Uniform(rng, a + 1, n - 1);
    spans.push_back({a, b});
    if (b - a >= 2) spans.push_back({a + 1, b});
    if (b < n - 1) spans.push_back({b + 1, n});
    std::string base = RenderWithDeletions(t, spans);
    for (int s = 0; s < 4; ++s) {
      std::shuffle(spans.begin(), spans.end(), rng);
      CHECK(RenderWithDeletions(t, spans) == base);
    }
    std::vector<bool> mask = DeletionMask(n, spans);
    std::string expected;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) continue;
      if (!expected.empty()) expected += " ";
      expected += t.tokens[i].text;
    }
    CHECK(base == expected);
  }
}

}  // namespace
}  // namespace compsum
