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

#ifndef COMPSUM_ROUGE_H_
#define COMPSUM_ROUGE_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compsum {

using TokenList = std::vector<std::string>;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static RougeScore FromCounts(double matches, double candidate_total,
                               double reference_total);
};

// Built-in English stopword list.
const std::set<std::string> &DefaultStopwords();

struct PreprocessConfig {
  bool lowercase = true;
  bool remove_stopwords = false;
  bool stem = false;
  std::set<std::string> stopword_list = DefaultStopwords();

  // Settings used when scoring oracle candidates: all steps on.
  static PreprocessConfig Oracle();
  // Settings used for reported ROUGE: lowercase and stem.
  static PreprocessConfig Evaluation();
};

// Porter (1980) suffix stripper. Expects a lowercase word.
std::string PorterStem(std::string_view word);

bool IsPunctuation(std::string_view token);

// Lowercase, then drop stopwords and punctuation, then stem.
TokenList PreprocessTokens(std::span<const std::string> tokens,
                           const PreprocessConfig &config);

// Clipped n-gram overlap against one or more references.
RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const TokenList> references, int n);
RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::string> reference, int n);

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);
RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const std::string> reference);

// Mean of unigram and bigram F1 after preprocessing both sides with
// `config`.
double ApproxOracleScore(std::span<const std::string> candidate,
                         std::span<const std::string> reference,
                         const PreprocessConfig &config);

// ApproxOracleScore with the reference side precomputed. Candidates passed
// to Score() must already be preprocessed.
class ApproxScorer {
 public:
  ApproxScorer(std::span<const std::string> reference,
               const PreprocessConfig &config);

  double Score(std::span<const std::string> preprocessed_candidate) const;
  double ScoreRaw(std::span<const std::string> candidate) const;

  const PreprocessConfig &config() const { return config_; }

 private:
  PreprocessConfig config_;
  std::map<std::string, int, std::less<>> unigrams_;
  std::map<std::pair<std::string, std::string>, int> bigrams_;
  int unigram_total_ = 0;
  int bigram_total_ = 0;
};

}  // namespace compsum

#endif  // COMPSUM_ROUGE_H_
