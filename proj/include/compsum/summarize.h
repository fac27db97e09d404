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

#ifndef COMPSUM_SUMMARIZE_H_
#define COMPSUM_SUMMARIZE_H_

#include <string>
#include <vector>

#include "compsum/document.h"
#include "compsum/model.h"
#include "compsum/rules.h"

namespace compsum {

struct SummarizeConfig {
  int k = 3;
  // Deletion aggressiveness: 0 never deletes, 1 deletes every option the
  // classifier gives any probability.
  double tau = 0.45;
  bool dedup = true;
  RuleConfig rules;

  void Validate() const;
};

enum class DeletionCause { kModel, kDedup };

std::string_view CauseName(DeletionCause cause);

struct AppliedDeletion {
  CompressionOption option;
  DeletionCause cause = DeletionCause::kModel;
};

struct SummarySentence {
  int index = 0;
  std::vector<CompressionOption> options;
  std::vector<double> p_del;  // parallel to options
  std::vector<AppliedDeletion> deletions;
  TokenList tokens;           // surviving tokens

  std::vector<Span> DeletedSpans() const;
};

struct Summary {
  std::string doc_id;
  std::vector<int> selected;               // pick order
  std::vector<SummarySentence> sentences;  // document order
  int tokens_before = 0;

  TokenList Tokens() const;
  std::string Text() const;
  int tokens_after() const;
};

// DEL iff p_del > 1 - tau. Both arguments must lie in [0, 1].
bool ApplyThreshold(double p_del, double tau);

// Deletes, in document order, each surviving option whose lowercased
// non-punctuation unigrams all occur elsewhere in the current summary.
// Coverage is recomputed after every deletion.
Summary DedupSummary(Summary summary, const Document &doc);

// Renders each sentence's surviving tokens from its deletions.
void RenderSummary(const Document &doc, Summary *summary);

// Greedy extraction, per-option classification and thresholding, then
// optional deduplication. k is capped at the number of candidates.
Summary Summarize(const Model &model, const Document &doc, const SummarizeConfig &config);

// Selected sentences verbatim, no compression.
Summary ExtractOnly(const Model &model, const Document &doc, int k);

}  // namespace compsum

#endif  // COMPSUM_SUMMARIZE_H_
