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

#ifndef COMPSUM_FEATURES_H_
#define COMPSUM_FEATURES_H_

#include <array>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "compsum/document.h"
#include "compsum/rules.h"

namespace compsum {

inline constexpr int kSentenceDim = 6;
inline constexpr int kDocumentDim = 2 * kSentenceDim + 1;
inline constexpr int kStateDim = kSentenceDim + 2;
inline constexpr int kOptionDim = kNumRules + 5 + kSentenceDim;

// position, log length, centrality, stopword share, capitalized share, lead-3
struct SentenceFeatures {
  std::array<double, kSentenceDim> values{};
};

// mean and max of sentence features, log sentence count
struct DocumentFeatures {
  std::array<double, kDocumentDim> values{};
};

// Decoder context before choosing the next sentence. `selected` is in
// pick order.
struct DecoderState {
  std::vector<int> selected;
  // step / k, running mean of selected sentence features, coverage
  std::array<double, kStateDim> values{};
};

struct OptionFeatures {
  std::array<double, kOptionDim> values{};
};

// Per-document statistics shared by all feature functions. Only the
// leading `max_sents` sentences are candidates.
class DocumentContext {
 public:
  explicit DocumentContext(const Document &doc, int max_sents = 30);

  const Document &doc() const { return *doc_; }
  int num_candidates() const { return static_cast<int>(sentence_features_.size()); }

  const SentenceFeatures &sentence(int i) const { return sentence_features_.at(i); }
  std::span<const SentenceFeatures> sentences() const { return sentence_features_; }
  const DocumentFeatures &document() const { return document_features_; }

  // State after picking `selected` (in order) out of a k-sentence summary.
  DecoderState State(const std::vector<int> &selected, int k) const;

  OptionFeatures Option(int sent_index, const CompressionOption &option,
                        const DecoderState &state) const;

 private:
  const Document *doc_;
  std::vector<std::vector<std::string>> lowered_;  // per sentence
  std::vector<std::unordered_set<std::string>> content_types_;
  std::unordered_map<std::string, int> doc_counts_;
  std::unordered_set<std::string> doc_content_types_;
  std::vector<SentenceFeatures> sentence_features_;
  DocumentFeatures document_features_;
};

SentenceFeatures FeaturizeSentence(const Document &doc, int i);
DocumentFeatures FeaturizeDocument(const Document &doc);
OptionFeatures FeaturizeOption(const Document &doc, int sent_index,
                               const CompressionOption &option,
                               const DecoderState &state);

}  // namespace compsum

#endif  // COMPSUM_FEATURES_H_
