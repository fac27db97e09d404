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

#ifndef COMPSUM_ORACLE_H_
#define COMPSUM_ORACLE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "compsum/document.h"
#include "compsum/rouge.h"
#include "compsum/rules.h"

namespace compsum {

struct OracleConfig {
  int k = 3;           // sentences per oracle summary
  int beam_width = 8;  // states kept per round
  int max_sents = 30;  // only the leading sentences are candidates
  int m = 5;           // oracles kept for training

  // Throws std::invalid_argument unless 1 <= k <= max_sents,
  // beam_width >= 1 and 1 <= m <= beam_width.
  void Validate() const;
};

struct OracleCandidate {
  // Sorted by the individual sentence score, best first.
  std::vector<int> sentence_indices;
  double score = 0.0;

  friend bool operator==(const OracleCandidate &, const OracleCandidate &) = default;
};

enum class CompressionLabel { kKeep, kDel };

std::string_view LabelName(CompressionLabel label);

struct LabeledOption {
  CompressionOption option;
  double r_before = 0.0;
  double r_after = 0.0;
  CompressionLabel label = CompressionLabel::kKeep;

  // r_after / r_before; +inf when only r_before is zero, 1 when both are.
  double ratio() const;

  static LabeledOption Make(CompressionOption option, double r_before,
                            double r_after);
};

enum class CompressabilityBucket { kBad, kWeakPositive, kStrongPositive };

inline constexpr double kWeakPositiveLimit = 1.05;

CompressabilityBucket BucketForRatio(double ratio);
std::string_view BucketName(CompressabilityBucket bucket);

struct CompressabilityReport {
  std::array<std::int64_t, 3> counts{};
  std::int64_t total = 0;

  double percent(CompressabilityBucket bucket) const;
  // Category | share rows, one per bucket.
  std::string ToTable() const;
};

// Throws std::invalid_argument on an empty option list.
CompressabilityReport MakeCompressabilityReport(std::span<const LabeledOption> options);

// Final beam, best first. Candidate scoring within each round runs in
// parallel when OpenMP is enabled.
std::vector<OracleCandidate> BeamSearchOracle(
    const Document &doc, std::span<const std::string> reference,
    const OracleConfig &config,
    const PreprocessConfig &preprocess = PreprocessConfig::Oracle());

// Single-threaded reference for BeamSearchOracle; results are identical.
std::vector<OracleCandidate> BeamSearchOracleSerial(
    const Document &doc, std::span<const std::string> reference,
    const OracleConfig &config,
    const PreprocessConfig &preprocess = PreprocessConfig::Oracle());

inline constexpr std::int64_t kExhaustiveLimit = 1'000'000;

// Best k-subset of the leading `max_sents` sentences by enumeration.
// Refuses (std::invalid_argument) when C(n, k) exceeds kExhaustiveLimit.
// The number of subsets scored is stored in `evaluated` when given.
OracleCandidate ExhaustiveOracle(
    const Document &doc, std::span<const std::string> reference, int k,
    int max_sents = 30,
    const PreprocessConfig &preprocess = PreprocessConfig::Oracle(),
    std::int64_t *evaluated = nullptr);

std::int64_t BinomialCoefficient(int n, int k);

// Scores each option in isolation: r_before is the whole sentence, r_after
// the sentence with only that option removed. DEL iff r_after > r_before.
std::vector<LabeledOption> LabelCompressions(
    const SentenceTree &sentence, std::span<const CompressionOption> options,
    std::span<const std::string> reference,
    const PreprocessConfig &preprocess = PreprocessConfig::Oracle());

// Top min(m, |beam|) candidates by score.
std::vector<OracleCandidate> SelectTrainingOracles(
    std::span<const OracleCandidate> beam, int m);

// Oracle supervision for one document.
struct DocumentOracle {
  std::string doc_id;
  std::vector<OracleCandidate> oracles;
  // labels[i] holds the labeled options of sentence i, for every sentence
  // within the candidate window.
  std::vector<std::vector<LabeledOption>> labels;

  // Labeled options of the sentences in the best oracle.
  std::vector<LabeledOption> TopOracleLabels() const;
};

DocumentOracle BuildDocumentOracle(const Document &doc,
                                   const OracleConfig &config,
                                   const RuleConfig &rules = {});

// Builds oracles for every document, in parallel across documents. Output
// order follows the input. Documents that fail (e.g. too few sentences)
// are reported through `errors` and skipped.
std::vector<DocumentOracle> BuildOracles(std::span<const Document> corpus,
                                         const OracleConfig &config,
                                         std::vector<std::string> *errors,
                                         const RuleConfig &rules = {});

}  // namespace compsum

#endif  // COMPSUM_ORACLE_H_
