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

#include "compsum/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>


namespace compsum {
namespace {

struct BeamState {
  std::vector<int> indices;  // ascending
  double score = 0.0;
};

bool BetterState(const BeamState &a, const BeamState &b) {
  if (a.score != b.score) return a.score > b.score;
  return a.indices < b.indices;
}

// Preprocessed candidate window of a document plus the reference scorer.
class OracleProblem {
 public:
  OracleProblem(const Document &doc, std::span<const std::string> reference,
                int k, int max_sents, const PreprocessConfig &preprocess)
      : scorer_(reference, preprocess) {
    int n = std::min(doc.size(), max_sents);
    if (n < k) {
      throw std::invalid_argument("document '" + doc.id + "' has " +
                                  std::to_string(n) +
                                  " candidate sentences, fewer than k=" +
                                  std::to_string(k));
    }
    sentences_.reserve(n);
    for (int i = 0; i < n; ++i) {
      sentences_.push_back(
          PreprocessTokens(doc.sentences[i].words(), scorer_.config()));
    }
  }

  int size() const { return static_cast<int>(sentences_.size()); }

  // Sentences are concatenated in document order.
  double Score(const std::vector<int> &ascending) const {
    TokenList joined;
    for (int i : ascending) {
      joined.insert(joined.end(), sentences_[i].begin(), sentences_[i].end());
    }
    return scorer_.Score(joined);
  }

  OracleCandidate ToCandidate(const BeamState &state) const {
    std::vector<std::pair<double, int>> salience;
    for (int i : state.indices) salience.push_back({Score({i}), i});
    std::sort(salience.begin(), salience.end(), [](const auto &a, const auto &b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    OracleCandidate out;
    out.score = state.score;
    for (const auto &[s, i] : salience) out.sentence_indices.push_back(i);
    return out;
  }

 private:
  ApproxScorer scorer_;
  std::vector<TokenList> sentences_;
};

// Every distinct one-sentence extension of the current beam.
std::vector<BeamState> Expand(const std::vector<BeamState> &beam, int n) {
  std::set<std::vector<int>> seen;
  std::vector<BeamState> out;
  for (const BeamState &state : beam) {
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(state.indices.begin(), state.indices.end(), i)) {
        continue;
      }
      std::vector<int> next = state.indices;
      next.insert(std::upper_bound(next.begin(), next.end(), i), i);
      if (seen.insert(next).second) out.push_back({std::move(next), 0.0});
    }
  }
  return out;
}

void Prune(std::vector<BeamState> *states, int width) {
  std::sort(states->begin(), states->end(), BetterState);
  if (static_cast<int>(states->size()) > width) states->resize(width);
}

std::vector<OracleCandidate> Finish(const OracleProblem &problem,
                                    const std::vector<BeamState> &beam) {
  std::vector<OracleCandidate> out;
  out.reserve(beam.size());
  for (const BeamState &s : beam) out.push_back(problem.ToCandidate(s));
  return out;
}

}  // namespace

void OracleConfig::Validate() const {
  if (k < 1 || k > max_sents) {
    throw std::invalid_argument("oracle k must be in [1, max_sents]");
  }
  if (beam_width < 1) throw std::invalid_argument("beam width must be >= 1");
  if (m < 1 || m > beam_width) {
    throw std::invalid_argument("oracle count m must be in [1, beam width]");
  }
}

std::string_view LabelName(CompressionLabel label) {
  return label == CompressionLabel::kDel ? "DEL" : "KEEP";
}

double LabeledOption::ratio() const {
  if (r_before == 0.0) {
    return r_after > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  }
  return r_after / r_before;
}

LabeledOption LabeledOption::Make(CompressionOption option, double r_before,
                                  double r_after) {
  LabeledOption out;
  out.option = std::move(option);
  out.r_before = r_before;
  out.r_after = r_after;
  out.label = r_after > r_before ? CompressionLabel::kDel : CompressionLabel::kKeep;
  return out;
}

CompressabilityBucket BucketForRatio(double ratio) {
  if (ratio <= 1.0) return CompressabilityBucket::kBad;
  if (ratio <= kWeakPositiveLimit) return CompressabilityBucket::kWeakPositive;
  return CompressabilityBucket::kStrongPositive;
}

std::string_view BucketName(CompressabilityBucket bucket) {
  switch (bucket) {
    case CompressabilityBucket::kBad:
      return "Bad";
    case CompressabilityBucket::kWeakPositive:
      return "Weak Positive";
    case CompressabilityBucket::kStrongPositive:
      return "Strong Positive";
  }
  return "";
}

double CompressabilityReport::percent(CompressabilityBucket bucket) const {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(counts[static_cast<int>(bucket)]) /
         static_cast<double>(total);
}

std::string CompressabilityReport::ToTable() const {
  std::ostringstream out;
  out << "Category,Share\n";
  for (auto b : {CompressabilityBucket::kBad, CompressabilityBucket::kWeakPositive,
                 CompressabilityBucket::kStrongPositive}) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f%%", percent(b));
    out << BucketName(b) << "," << buf << "\n";
  }
  return out.str();
}

CompressabilityReport MakeCompressabilityReport(std::span<const LabeledOption> options) {
  if (options.empty()) {
    throw std::invalid_argument("compressability report needs at least one labeled option");
  }
  CompressabilityReport report;
  for (const LabeledOption &o : options) {
    ++report.counts[static_cast<int>(BucketForRatio(o.ratio()))];
    ++report.total;
  }
  return report;
}

std::vector<OracleCandidate> BeamSearchOracleSerial(
    const Document &doc, std::span<const std::string> reference,
    const OracleConfig &config, const PreprocessConfig &preprocess) {
  config.Validate();
  OracleProblem problem(doc, reference, config.k, config.max_sents, preprocess);
  std::vector<BeamState> beam = {BeamState{}};
  for (int round = 0; round < config.k; ++round) {
    std::set<std::vector<int>> seen;
    std::vector<BeamState> next;
    for (const BeamState &state : beam) {
      for (int i = 0; i < problem.size(); ++i) {
        if (std::find(state.indices.begin(), state.indices.end(), i) !=
            state.indices.end()) {
          continue;
        }
        BeamState grown = state;
        grown.indices.push_back(i);
        std::sort(grown.indices.begin(), grown.indices.end());
        if (!seen.insert(grown.indices).second) continue;
        grown.score = problem.Score(grown.indices);
        next.push_back(std::move(grown));
      }
    }
    Prune(&next, config.beam_width);
    beam = std::move(next);
  }
  return Finish(problem, beam);
}

std::vector<OracleCandidate> BeamSearchOracle(
    const Document &doc, std::span<const std::string> reference,
    const OracleConfig &config, const PreprocessConfig &preprocess) {
  config.Validate();
  OracleProblem problem(doc, reference, config.k, config.max_sents, preprocess);
  std::vector<BeamState> beam = {BeamState{}};
  for (int round = 0; round < config.k; ++round) {
    std::vector<BeamState> next = Expand(beam, problem.size());
    const auto count = static_cast<std::int64_t>(next.size());
#pragma omp parallel for schedule(dynamic, 4) if (count > 16)
    for (std::int64_t c = 0; c < count; ++c) {
      next[c].score = problem.Score(next[c].indices);
    }
    Prune(&next, config.beam_width);
    beam = std::move(next);
  }
  return Finish(problem, beam);
}

std::int64_t BinomialCoefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    if (result > kMax / (n - k + i)) return kMax;
    result = result * (n - k + i) / i;
  }
  return result;
}

OracleCandidate ExhaustiveOracle(const Document &doc,
                                 std::span<const std::string> reference, int k,
                                 int max_sents, const PreprocessConfig &preprocess,
                                 std::int64_t *evaluated) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  OracleProblem problem(doc, reference, k, max_sents, preprocess);
  const int n = problem.size();
  std::int64_t subsets = BinomialCoefficient(n, k);
  if (subsets > kExhaustiveLimit) {
    throw std::invalid_argument("exhaustive oracle refused: C(" + std::to_string(n) +
                                "," + std::to_string(k) + ") = " +
                                std::to_string(subsets) + " subsets exceeds " +
                                std::to_string(kExhaustiveLimit));
  }
  std::vector<int> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  BeamState best{combo, problem.Score(combo)};
  std::int64_t scored = 1;
  while (true) {
    int pos = k - 1;
    while (pos >= 0 && combo[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int j = pos + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    // Lexicographic enumeration: strict improvement keeps the earliest tie.
    double s = problem.Score(combo);
    ++scored;
    if (s > best.score) best = BeamState{combo, s};
  }
  if (evaluated != nullptr) *evaluated = scored;
  return problem.ToCandidate(best);
}

std::vector<LabeledOption> LabelCompressions(
    const SentenceTree &sentence, std::span<const CompressionOption> options,
    std::span<const std::string> reference, const PreprocessConfig &preprocess) {
  ApproxScorer scorer(reference, preprocess);
  const double before = scorer.ScoreRaw(sentence.words());
  std::vector<LabeledOption> out;
  out.reserve(options.size());
  for (const CompressionOption &option : options) {
    Span only[] = {option.span};
    double after = scorer.ScoreRaw(SurvivingTokens(sentence, only));
    out.push_back(LabeledOption::Make(option, before, after));
  }
  return out;
}

std::vector<OracleCandidate> SelectTrainingOracles(std::span<const OracleCandidate> beam,
                                                   int m) {
  std::vector<OracleCandidate> sorted(beam.begin(), beam.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const OracleCandidate &a, const OracleCandidate &b) {
                     if (a.score != b.score) return a.score > b.score;
                     std::vector<int> sa = a.sentence_indices, sb = b.sentence_indices;
                     std::sort(sa.begin(), sa.end());
                     std::sort(sb.begin(), sb.end());
                     return sa < sb;
                   });
  if (m >= 0 && static_cast<int>(sorted.size()) > m) sorted.resize(m);
  return sorted;
}

std::vector<LabeledOption> DocumentOracle::TopOracleLabels() const {
  std::vector<LabeledOption> out;
  if (oracles.empty()) return out;
  for (int i : oracles.front().sentence_indices) {
    if (i < static_cast<int>(labels.size())) {
      out.insert(out.end(), labels[i].begin(), labels[i].end());
    }
  }
  return out;
}

DocumentOracle BuildDocumentOracle(const Document &doc, const OracleConfig &config,
                                   const RuleConfig &rules) {
  if (!doc.has_reference()) {
    throw std::invalid_argument("document '" + doc.id + "' has no reference summary");
  }
  TokenList reference = doc.ReferenceTokens();
  DocumentOracle out;
  out.doc_id = doc.id;
  out.oracles = SelectTrainingOracles(BeamSearchOracle(doc, reference, config), config.m);
  int n = std::min(doc.size(), config.max_sents);
  out.labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    const SentenceTree &sentence = doc.sentences[i];
    out.labels.push_back(
        LabelCompressions(sentence, ExtractOptions(sentence, rules), reference));
  }
  return out;
}

std::vector<DocumentOracle> BuildOracles(std::span<const Document> corpus,
                                         const OracleConfig &config,
                                         std::vector<std::string> *errors,
                                         const RuleConfig &rules) {
  config.Validate();
  const auto count = static_cast<std::int64_t>(corpus.size());
  std::vector<DocumentOracle> built(corpus.size());
  std::vector<std::string> failures(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      built[i] = BuildDocumentOracle(corpus[i], config, rules);
    } catch (const std::exception &e) {
      failures[i] = e.what();
    }
  }
  std::vector<DocumentOracle> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (failures[i].empty()) {
      out.push_back(std::move(built[i]));
    } else if (errors != nullptr) {
      errors->push_back(failures[i]);
    }
  }
  return out;
}

}  // namespace compsum
