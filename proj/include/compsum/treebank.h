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

#ifndef COMPSUM_TREEBANK_H_
#define COMPSUM_TREEBANK_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compsum {

// Half-open token interval [start, end) within a sentence.
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool Contains(const Span &other) const {
    return start <= other.start && other.end <= end;
  }
  bool Disjoint(const Span &other) const {
    return end <= other.start || other.end <= start;
  }
  bool Covers(int index) const { return start <= index && index < end; }
  // True if the two spans overlap without one containing the other.
  bool Crosses(const Span &other) const {
    return !Disjoint(other) && !Contains(other) && !other.Contains(*this);
  }

  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

struct Token {
  std::string text;
  int index = 0;
};

// A constituent. Leaves carry the part-of-speech tag as label and own
// exactly one token; the token text lives in SentenceTree::tokens.
struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;
  Span span;

  bool is_leaf() const { return children.empty(); }

  // Category without function tags or indices: "NP-SBJ-1" -> "NP".
  // Labels that start with '-' (-LRB-, -NONE-) are returned unchanged.
  std::string_view category() const;
};

struct SentenceTree {
  TreeNode root;
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  std::vector<std::string> words() const;
};

// Raised for malformed bracketed input. offset() is the byte position in
// the input at which parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses one Penn-Treebank style bracketed tree. Escaped bracket tokens
// (-LRB-, -RRB-, -LSB-, ...) are unescaped into the token text while the
// leaf keeps the escaped tag. A single unlabeled outer wrapper is removed.
SentenceTree ParsePtb(std::string_view text);

// Serializes back to bracketed notation, re-escaping bracket tokens.
std::string ToPtb(const SentenceTree &tree);

std::string EscapeToken(std::string_view token);
std::string UnescapeToken(std::string_view token);

inline Span NodeSpan(const TreeNode &node) { return node.span; }

// Joins the tokens that lie outside every deleted span with single spaces.
// Deletions may nest; crossing spans throw std::invalid_argument.
std::string RenderWithDeletions(const SentenceTree &tree,
                                std::span<const Span> deletions);

// Token-level form of RenderWithDeletions.
std::vector<std::string> SurvivingTokens(const SentenceTree &tree,
                                         std::span<const Span> deletions);

// Per-token mask: true where the token falls inside some deletion.
std::vector<bool> DeletionMask(int sentence_length,
                               std::span<const Span> deletions);

}  // namespace compsum

#endif  // COMPSUM_TREEBANK_H_
