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

#include "compsum/treebank.h"

#include <array>
#include <cctype>
#include <utility>

namespace compsum {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 6>
    kBracketEscapes = {{{"(", "-LRB-"},
                        {")", "-RRB-"},
                        {"[", "-LSB-"},
                        {"]", "-RSB-"},
                        {"{", "-LCB-"},
                        {"}", "-RCB-"}}};

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  SentenceTree Read() {
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
    if (text_[pos_] != '(') throw ParseError("expected '('", pos_);
    SentenceTree tree;
    tree.root = ReadNode(&tree.tokens, /*allow_unlabeled=*/true);
    SkipSpace();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected text after tree", pos_);
    }
    if (tree.root.label.empty()) {
      if (tree.root.children.size() != 1) {
        throw ParseError("unlabeled root with several children", 0);
      }
      TreeNode inner = std::move(tree.root.children.front());
      tree.root = std::move(inner);
    }
    return tree;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  bool AtAtom() const {
    return pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')';
  }

  std::string_view ReadAtom() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(begin, pos_ - begin);
  }

  TreeNode ReadNode(std::vector<Token> *tokens, bool allow_unlabeled) {
    std::size_t open = pos_;
    ++pos_;  // '('
    TreeNode node;
    SkipSpace();
    if (AtAtom()) node.label = std::string(ReadAtom());
    if (node.label.empty() && !allow_unlabeled) {
      throw ParseError("node without a label", open);
    }
    SkipSpace();
    int first = static_cast<int>(tokens->size());
    if (AtAtom()) {
      if (node.label.empty()) throw ParseError("token without a tag", pos_);
      std::string_view word = ReadAtom();
      int index = static_cast<int>(tokens->size());
      tokens->push_back(Token{UnescapeToken(word), index});
      SkipSpace();
    } else {
      while (pos_ < text_.size() && text_[pos_] == '(') {
        node.children.push_back(ReadNode(tokens, false));
        SkipSpace();
      }
      if (node.children.empty() && pos_ < text_.size()) {
        throw ParseError("node has no children or token", pos_);
      }
    }
    if (pos_ >= text_.size()) {
      throw ParseError("unbalanced parentheses: missing ')'", pos_);
    }
    if (text_[pos_] != ')') {
      throw ParseError("expected ')'", pos_);
    }
    ++pos_;
    node.span = Span{first, static_cast<int>(tokens->size())};
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void WriteNode(const TreeNode &node, const std::vector<Token> &tokens,
               std::string *out) {
  out->push_back('(');
  out->append(node.label);
  if (node.is_leaf()) {
    out->push_back(' ');
    out->append(EscapeToken(tokens[node.span.start].text));
  } else {
    for (const TreeNode &child : node.children) {
      out->push_back(' ');
      WriteNode(child, tokens, out);
    }
  }
  out->push_back(')');
}

void ValidateDeletions(int n, std::span<const Span> deletions) {
  for (std::size_t i = 0; i < deletions.size(); ++i) {
    const Span &a = deletions[i];
    if (a.start < 0 || a.start >= a.end || a.end > n) {
      throw std::invalid_argument("deletion span [" + std::to_string(a.start) +
                                  "," + std::to_string(a.end) +
                                  ") outside sentence of length " +
                                  std::to_string(n));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (a.Crosses(deletions[j])) {
        throw std::invalid_argument("deletion spans partially overlap");
      }
    }
  }
}

}  // namespace

ParseError::ParseError(const std::string &what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

std::string_view TreeNode::category() const {
  std::string_view l = label;
  if (l.empty() || l.front() == '-') return l;
  std::size_t cut = l.find_first_of("-=");
  return cut == std::string_view::npos ? l : l.substr(0, cut);
}

std::vector<std::string> SentenceTree::words() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.text);
  return out;
}

SentenceTree ParsePtb(std::string_view text) {
  return BracketReader(text).Read();
}

std::string ToPtb(const SentenceTree &tree) {
  std::string out;
  WriteNode(tree.root, tree.tokens, &out);
  return out;
}

std::string EscapeToken(std::string_view token) {
  for (const auto &[raw, escaped] : kBracketEscapes) {
    if (token == raw) return std::string(escaped);
  }
  return std::string(token);
}

std::string UnescapeToken(std::string_view token) {
  for (const auto &[raw, escaped] : kBracketEscapes) {
    if (token == escaped) return std::string(raw);
  }
  return std::string(token);
}

std::vector<bool> DeletionMask(int sentence_length,
                               std::span<const Span> deletions) {
  ValidateDeletions(sentence_length, deletions);
  std::vector<bool> mask(sentence_length, false);
  for (const Span &s : deletions) {
    for (int i = s.start; i < s.end; ++i) mask[i] = true;
  }
  return mask;
}

std::vector<std::string> SurvivingTokens(const SentenceTree &tree,
                                         std::span<const Span> deletions) {
  std::vector<bool> mask = DeletionMask(tree.size(), deletions);
  std::vector<std::string> out;
  for (int i = 0; i < tree.size(); ++i) {
    if (!mask[i]) out.push_back(tree.tokens[i].text);
  }
  return out;
}

std::string RenderWithDeletions(const SentenceTree &tree,
                                std::span<const Span> deletions) {
  std::string out;
  for (const std::string &w : SurvivingTokens(tree, deletions)) {
    if (!out.empty()) out.push_back(' ');
    out.append(w);
  }
  return out;
}

}  // namespace compsum
