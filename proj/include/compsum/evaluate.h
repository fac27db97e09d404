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

#ifndef COMPSUM_EVALUATE_H_
#define COMPSUM_EVALUATE_H_

#include <span>
#include <string>
#include <vector>

#include "compsum/document.h"
#include "compsum/model.h"
#include "compsum/rouge.h"
#include "compsum/summarize.h"

namespace compsum {

struct RougeTriple {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;

  double MeanF1() const { return (rouge1.f1 + rouge2.f1 + rougeL.f1) / 3.0; }
};

// Flattened candidate and reference, lowercased and stemmed.
RougeTriple ScoreSummary(std::span<const std::string> candidate,
                         std::span<const std::string> reference,
                         const PreprocessConfig &preprocess = PreprocessConfig::Evaluation());

struct DocumentEvaluation {
  std::string doc_id;
  RougeTriple scores;
  int tokens_before = 0;
  int tokens_after = 0;
};

struct CorpusEvaluation {
  std::vector<DocumentEvaluation> documents;  // corpus order
  RougeTriple mean;                           // per-field means
  int skipped = 0;                            // documents without reference
  std::vector<std::string> warnings;

  // Summary tokens kept after deletions over tokens before, corpus-wide.
  double CompressionRatio() const;
  std::string ToCsv() const;
  std::string ToJson() const;
};

// Scores already produced summaries; summaries[i] belongs to corpus[i].
CorpusEvaluation EvaluateSummaries(std::span<const Summary> summaries,
                                   std::span<const Document> corpus);

// Summarizes (in parallel across documents) and scores the corpus.
CorpusEvaluation EvaluateCorpus(const Model &model, std::span<const Document> corpus,
                                const SummarizeConfig &config);

// Summaries for every document, in corpus order.
std::vector<Summary> SummarizeCorpus(const Model &model, std::span<const Document> corpus,
                                     const SummarizeConfig &config);

struct SweepRow {
  double tau = 0.0;
  RougeTriple mean;
  double compression_ratio = 1.0;
};

// "start:stop:step", inclusive of stop (within 1e-9), values in [0, 1].
std::vector<double> ParseTauGrid(const std::string &spec);

std::vector<SweepRow> SweepThreshold(const Model &model, std::span<const Document> corpus,
                                     std::span<const double> grid,
                                     const SummarizeConfig &base);

std::string SweepCsv(std::span<const SweepRow> rows);

}  // namespace compsum

#endif  // COMPSUM_EVALUATE_H_
