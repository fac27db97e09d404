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

#ifndef COMPSUM_MODEL_H_
#define COMPSUM_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "compsum/document.h"
#include "compsum/features.h"
#include "compsum/oracle.h"

namespace compsum {

struct TrainConfig {
  double alpha = 1.0;  // weight of the compression loss
  double learning_rate = 0.001;
  int epochs = 2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::uint64_t seed = 1;
  // Multiplies the loss of DEL-labeled options.
  double positive_weight = 1.0;
  int max_sents = 30;

  void Validate() const;
  friend bool operator==(const TrainConfig &, const TrainConfig &) = default;
};

// Named parameter block, row-major within the flat parameter vector.
struct ParamBlock {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::size_t offset = 0;

  std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
};

// Extraction scorer  score_i = w_score . tanh(W_state [d_t; v_doc] +
// W_sent h_i + b_ext)  and a one-hidden-layer logistic compression
// classifier. All weights live in one flat vector.
class Model {
 public:
  static constexpr int kFormatVersion = 1;
  static constexpr int kStateInputDim = kStateDim + kDocumentDim;

  explicit Model(int hidden = 32, int compression_hidden = 32);

  // Uniform in [-scale, scale] from a fixed-algorithm generator.
  static Model Initialize(std::uint64_t seed, int hidden = 32,
                          int compression_hidden = 32, double scale = 0.08);

  int hidden() const { return hidden_; }
  int compression_hidden() const { return compression_hidden_; }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  const std::vector<ParamBlock> &blocks() const { return blocks_; }
  const ParamBlock &block(std::string_view name) const;

  std::span<const double> w_state() const { return Block(0); }
  std::span<const double> w_sent() const { return Block(1); }
  std::span<const double> b_ext() const { return Block(2); }
  std::span<const double> w_score() const { return Block(3); }
  std::span<const double> c_in() const { return Block(4); }
  std::span<const double> c_bias() const { return Block(5); }
  std::span<const double> c_out() const { return Block(6); }
  double c_out_bias() const { return Block(7)[0]; }

  TrainConfig train_config;

  friend bool operator==(const Model &a, const Model &b);

 private:
  std::span<const double> Block(int i) const {
    return std::span<const double>(params_).subspan(blocks_[i].offset, blocks_[i].size());
  }

  int hidden_;
  int compression_hidden_;
  std::vector<ParamBlock> blocks_;
  std::vector<double> params_;
};

// Raw extraction score of one sentence.
double ExtractionScore(const Model &model, const DecoderState &state,
                       const DocumentFeatures &doc, const SentenceFeatures &sentence);

// Softmax over raw scores where taken[i] is false; taken entries are 0.
std::vector<double> MaskedSoftmax(std::span<const double> scores, const std::vector<bool> &taken);

// Softmax over the unselected sentences; selected ones get exactly 0.
// Throws std::invalid_argument when nothing remains.
std::vector<double> ScoreRemaining(const Model &model, const DecoderState &state,
                                   const DocumentFeatures &doc,
                                   std::span<const SentenceFeatures> sentences,
                                   const std::vector<int> &selected);

// k greedy picks in pick order; ties go to the lower index.
std::vector<int> DecodeGreedy(const Model &model, const DocumentContext &context, int k);
std::vector<int> DecodeGreedy(const Model &model, const Document &doc, int k);

// Probability that the option should be deleted.
double ClassifyOption(const Model &model, const OptionFeatures &features);

// Teacher-forced supervision for one document, with features precomputed.
struct TrainingExample {
  struct Step {
    std::array<double, Model::kStateInputDim> input{};
    std::vector<int> candidates;  // unselected sentence indices
    int gold = 0;
    double weight = 1.0;          // 1/m
  };
  struct OptionItem {
    OptionFeatures features;
    bool del = false;
    double weight = 1.0;          // 1/m
  };

  std::vector<SentenceFeatures> sentences;
  std::vector<Step> steps;
  std::vector<OptionItem> options;
};

// Oracle sentences are fed in salience order; option labels are read from
// labels[sentence]. Throws std::invalid_argument for out-of-window indices.
TrainingExample MakeTrainingExample(const DocumentContext &context,
                                    std::span<const OracleCandidate> oracles,
                                    const std::vector<std::vector<LabeledOption>> &labels);

// L_sent + alpha * L_comp, both averaged over oracles. Fills `gradient`
// (sized like the parameters) when non-null.
double LossAndGradient(const Model &model, const TrainingExample &example,
                       const TrainConfig &config, std::vector<double> *gradient);

double LossJoint(const Model &model, const Document &doc,
                 std::span<const OracleCandidate> oracles,
                 const std::vector<std::vector<LabeledOption>> &labels,
                 const TrainConfig &config = {});

struct TrainingDocument {
  const Document *doc = nullptr;
  const DocumentOracle *oracle = nullptr;
};

struct TrainResult {
  Model model;
  // Mean training loss at initialization, then after each epoch.
  std::vector<double> epoch_loss;
};

// Adam over one document per step, documents visited in a seeded
// shuffled order. Deterministic for a given seed.
TrainResult Train(std::span<const TrainingDocument> corpus, const TrainConfig &config,
                  int hidden = 32, int compression_hidden = 32);

// Optional hook applied to the analytic gradient before comparison.
using GradientMutator = std::function<void(std::vector<double> &)>;

// Max over parameters of |g_a - g_n| / max(1e-8, |g_a| + |g_n|) with
// central differences of step h.
double GradientCheck(const Model &model, const TrainingExample &example,
                     const TrainConfig &config, double h = 1e-5,
                     const GradientMutator &mutate = nullptr);

}  // namespace compsum

#endif  // COMPSUM_MODEL_H_
