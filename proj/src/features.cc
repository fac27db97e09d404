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

#include "compsum/features.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "compsum/rouge.h"

namespace compsum {
namespace {

// Keeps log-scaled counts roughly within [0, 1.5] for realistic lengths.
constexpr double kLogScale = 0.25;

std::string Lower(const std::string &s) {
  std::string out = s;
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsContent(const std::string &lowered) {
  return !IsPunctuation(lowered) && !DefaultStopwords().contains(lowered);
}

bool IsCapitalized(const std::string &token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token.front())) != 0;
}

}  // namespace

DocumentContext::DocumentContext(const Document &doc, int max_sents) : doc_(&doc) {
  const int total = doc.size();
  const int n = std::min(total, max_sents);
  for (const SentenceTree &s : doc.sentences) {
    std::vector<std::string> lowered;
    std::unordered_set<std::string> types;
    for (const Token &t : s.tokens) {
      lowered.push_back(Lower(t.text));
      if (IsContent(lowered.back())) {
        types.insert(lowered.back());
        doc_content_types_.insert(lowered.back());
      }
      ++doc_counts_[lowered.back()];
    }
    lowered_.push_back(std::move(lowered));
    content_types_.push_back(std::move(types));
  }

  double content_total = 0;
  for (const auto &[w, c] : doc_counts_) {
    if (IsContent(w)) content_total += c;
  }

  for (int i = 0; i < n; ++i) {
    const auto &tokens = doc.sentences[i].tokens;
    const auto &lowered = lowered_[i];
    const double len = static_cast<double>(tokens.size());
    double covered = 0;
    for (const std::string &w : content_types_[i]) covered += doc_counts_.at(w);
    double stop = 0, caps = 0;
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      if (DefaultStopwords().contains(lowered[j])) ++stop;
      if (j > 0 && IsCapitalized(tokens[j].text)) ++caps;
    }
    SentenceFeatures f;
    f.values = {static_cast<double>(i) / total,
                kLogScale * std::log1p(len),
                content_total > 0 ? covered / content_total : 0.0,
                len > 0 ? stop / len : 0.0,
                len > 0 ? caps / len : 0.0,
                i < 3 ? 1.0 : 0.0};
    sentence_features_.push_back(f);
  }

  auto &d = document_features_.values;
  for (const SentenceFeatures &f : sentence_features_) {
    for (int c = 0; c < kSentenceDim; ++c) {
      d[c] += f.values[c] / n;
      d[kSentenceDim + c] = std::max(d[kSentenceDim + c], f.values[c]);
    }
  }
  d[2 * kSentenceDim] = kLogScale * std::log1p(static_cast<double>(total));
}

DecoderState DocumentContext::State(const std::vector<int> &selected, int k) const {
  DecoderState state;
  state.selected = selected;
  auto &v = state.values;
  v[0] = k > 0 ? static_cast<double>(selected.size()) / k : 0.0;
  std::unordered_set<std::string> covered;
  for (int i : selected) {
    const SentenceFeatures &f = sentence_features_.at(i);
    for (int c = 0; c < kSentenceDim; ++c) {
      v[1 + c] += f.values[c] / static_cast<double>(selected.size());
    }
    covered.insert(content_types_[i].begin(), content_types_[i].end());
  }
  v[kStateDim - 1] = doc_content_types_.empty()
                         ? 0.0
                         : static_cast<double>(covered.size()) /
                               static_cast<double>(doc_content_types_.size());
  return state;
}

OptionFeatures DocumentContext::Option(int sent_index, const CompressionOption &option,
                                       const DecoderState &state) const {
  const auto &lowered = lowered_.at(sent_index);
  std::unordered_map<std::string, int> inside;
  for (int j = option.span.start; j < option.span.end; ++j) ++inside[lowered[j]];

  std::unordered_set<std::string> summary;
  for (int i : state.selected) {
    if (i == sent_index) continue;
    summary.insert(lowered_[i].begin(), lowered_[i].end());
  }

  double words = 0, elsewhere = 0, in_summary = 0, stop = 0;
  for (int j = option.span.start; j < option.span.end; ++j) {
    const std::string &w = lowered[j];
    if (IsPunctuation(w)) continue;
    ++words;
    if (doc_counts_.at(w) > inside.at(w)) ++elsewhere;
    if (summary.contains(w)) ++in_summary;
    if (DefaultStopwords().contains(w)) ++stop;
  }

  OptionFeatures f;
  auto &v = f.values;
  v[static_cast<int>(option.rule)] = 1.0;
  const double sentence_len = static_cast<double>(lowered.size());
  int c = kNumRules;
  v[c++] = kLogScale * std::log1p(static_cast<double>(option.span.length()));
  v[c++] = option.span.start / sentence_len;
  v[c++] = words > 0 ? elsewhere / words : 0.0;
  v[c++] = words > 0 ? in_summary / words : 0.0;
  v[c++] = words > 0 ? stop / words : 0.0;
  const SentenceFeatures &parent = sentence_features_.at(sent_index);
  std::copy(parent.values.begin(), parent.values.end(), v.begin() + c);
  return f;
}

SentenceFeatures FeaturizeSentence(const Document &doc, int i) {
  return DocumentContext(doc, doc.size()).sentence(i);
}

DocumentFeatures FeaturizeDocument(const Document &doc) {
  return DocumentContext(doc).document();
}

OptionFeatures FeaturizeOption(const Document &doc, int sent_index,
                               const CompressionOption &option,
                               const DecoderState &state) {
  return DocumentContext(doc, doc.size()).Option(sent_index, option, state);
}

}  // namespace compsum
