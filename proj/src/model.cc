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

#include "compsum/model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace compsum {
namespace {

double Softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

double Sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// [0, 1) with 53 random bits; independent of the standard library's
// distribution implementations.
double UnitUniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<double, Model::kStateInputDim> StateInput(const DecoderState &state,
                                                     const DocumentFeatures &doc) {
  std::array<double, Model::kStateInputDim> in{};
  std::copy(state.values.begin(), state.values.end(), in.begin());
  std::copy(doc.values.begin(), doc.values.end(), in.begin() + kStateDim);
  return in;
}

// W_state * input + b_ext.
std::vector<double> StateProjection(const Model &model,
                                    std::span<const double, Model::kStateInputDim> in) {
  const int h = model.hidden();
  auto w = model.w_state();
  auto b = model.b_ext();
  std::vector<double> out(h);
  for (int r = 0; r < h; ++r) {
    double acc = b[r];
    for (int c = 0; c < Model::kStateInputDim; ++c) acc += w[r * Model::kStateInputDim + c] * in[c];
    out[r] = acc;
  }
  return out;
}

// w_score . tanh(base + W_sent * sentence); the tanh activations are
// written to `z` when given.
double ScoreFromProjection(const Model &model, const std::vector<double> &base,
                           const SentenceFeatures &sentence, double *z = nullptr) {
  auto w = model.w_sent();
  auto v = model.w_score();
  double score = 0;
  for (int r = 0; r < model.hidden(); ++r) {
    double a = base[r];
    for (int c = 0; c < kSentenceDim; ++c) a += w[r * kSentenceDim + c] * sentence.values[c];
    double t = std::tanh(a);
    if (z != nullptr) z[r] = t;
    score += v[r] * t;
  }
  return score;
}

// Compression logit; hidden activations go to `hidden_out` when given.
double CompressionLogit(const Model &model, const OptionFeatures &x, double *hidden_out = nullptr) {
  auto w = model.c_in();
  auto b = model.c_bias();
  auto out = model.c_out();
  double logit = model.c_out_bias();
  for (int r = 0; r < model.compression_hidden(); ++r) {
    double u = b[r];
    for (int c = 0; c < kOptionDim; ++c) u += w[r * kOptionDim + c] * x.values[c];
    double t = std::tanh(u);
    if (hidden_out != nullptr) hidden_out[r] = t;
    logit += out[r] * t;
  }
  return logit;
}

// Loss only, generic in the scalar type; params use the model's layout.
template <typename T>
T ForwardLoss(const Model &model, const std::vector<T> &params,
              const TrainingExample &example, const TrainConfig &config) {
  using std::exp;
  using std::log;
  using std::tanh;
  const int h = model.hidden();
  const int ch = model.compression_hidden();
  const auto &blocks = model.blocks();
  const T *w_state = params.data() + blocks[0].offset;
  const T *w_sent = params.data() + blocks[1].offset;
  const T *b_ext = params.data() + blocks[2].offset;
  const T *w_score = params.data() + blocks[3].offset;
  const T *c_in = params.data() + blocks[4].offset;
  const T *c_bias = params.data() + blocks[5].offset;
  const T *c_out = params.data() + blocks[6].offset;
  const T c_out_bias = params[blocks[7].offset];

  T sentence_loss = 0;
  std::vector<T> base(h);
  for (const TrainingExample::Step &step : example.steps) {
    for (int r = 0; r < h; ++r) {
      T acc = b_ext[r];
      for (int c = 0; c < Model::kStateInputDim; ++c) {
        acc += w_state[r * Model::kStateInputDim + c] * static_cast<T>(step.input[c]);
      }
      base[r] = acc;
    }
    std::vector<T> scores;
    T gold_score = 0;
    T best = -std::numeric_limits<T>::infinity();
    for (int idx : step.candidates) {
      const SentenceFeatures &x = example.sentences[idx];
      T score = 0;
      for (int r = 0; r < h; ++r) {
        T a = base[r];
        for (int c = 0; c < kSentenceDim; ++c) a += w_sent[r * kSentenceDim + c] * static_cast<T>(x.values[c]);
        score += w_score[r] * tanh(a);
      }
      scores.push_back(score);
      best = std::max(best, score);
      if (idx == step.gold) gold_score = score;
    }
    T total = 0;
    for (T v : scores) total += exp(v - best);
    sentence_loss += static_cast<T>(step.weight) * (best + log(total) - gold_score);
  }

  T compression_loss = 0;
  for (const TrainingExample::OptionItem &item : example.options) {
    T logit = c_out_bias;
    for (int r = 0; r < ch; ++r) {
      T u = c_bias[r];
      for (int c = 0; c < kOptionDim; ++c) u += c_in[r * kOptionDim + c] * static_cast<T>(item.features.values[c]);
      logit += c_out[r] * tanh(u);
    }
    const T z = item.del ? -logit : logit;
    const T softplus = std::max(z, T(0)) + std::log1p(exp(-std::abs(z)));
    compression_loss += static_cast<T>(item.weight * (item.del ? config.positive_weight : 1.0)) * softplus;
  }
  return sentence_loss + static_cast<T>(config.alpha) * compression_loss;
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(alpha >= 0)) throw std::invalid_argument("alpha must be >= 0");
  if (!(learning_rate > 0)) throw std::invalid_argument("learning rate must be > 0");
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  if (!(positive_weight > 0)) throw std::invalid_argument("positive weight must be > 0");
  if (max_sents < 1) throw std::invalid_argument("max_sents must be >= 1");
}

Model::Model(int hidden, int compression_hidden)
    : hidden_(hidden), compression_hidden_(compression_hidden) {
  if (hidden < 1 || compression_hidden < 1) {
    throw std::invalid_argument("hidden sizes must be positive");
  }
  const int h = hidden, c = compression_hidden;
  std::size_t offset = 0;
  auto add = [&](std::string name, int rows, int cols) {
    blocks_.push_back(ParamBlock{std::move(name), rows, cols, offset});
    offset += blocks_.back().size();
  };
  add("w_state", h, kStateInputDim);
  add("w_sent", h, kSentenceDim);
  add("b_ext", h, 1);
  add("w_score", h, 1);
  add("c_in", c, kOptionDim);
  add("c_bias", c, 1);
  add("c_out", c, 1);
  add("c_out_bias", 1, 1);
  params_.assign(offset, 0.0);
}

Model Model::Initialize(std::uint64_t seed, int hidden, int compression_hidden, double scale) {
  Model model(hidden, compression_hidden);
  std::mt19937_64 rng(seed);
  for (double &p : model.params_) p = scale * (2.0 * UnitUniform(rng) - 1.0);
  model.train_config.seed = seed;
  return model;
}

const ParamBlock &Model::block(std::string_view name) const {
  for (const ParamBlock &b : blocks_) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("no parameter block named " + std::string(name));
}

bool operator==(const Model &a, const Model &b) {
  if (a.hidden_ != b.hidden_ || a.compression_hidden_ != b.compression_hidden_ ||
      a.params_.size() != b.params_.size() || !(a.train_config == b.train_config)) {
    return false;
  }
  return std::equal(a.params_.begin(), a.params_.end(), b.params_.begin(),
                    [](double x, double y) {
                      return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
                    });
}

double ExtractionScore(const Model &model, const DecoderState &state,
                       const DocumentFeatures &doc, const SentenceFeatures &sentence) {
  auto in = StateInput(state, doc);
  return ScoreFromProjection(model, StateProjection(model, in), sentence);
}

std::vector<double> MaskedSoftmax(std::span<const double> scores, const std::vector<bool> &taken) {
  const std::size_t n = scores.size();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) best = std::max(best, scores[i]);
  }
  std::vector<double> probs(n, 0.0);
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (taken[i]) continue;
    probs[i] = std::exp(scores[i] - best);
    total += probs[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) probs[i] /= total;
  }
  return probs;
}

std::vector<double> ScoreRemaining(const Model &model, const DecoderState &state,
                                   const DocumentFeatures &doc,
                                   std::span<const SentenceFeatures> sentences,
                                   const std::vector<int> &selected) {
  const int n = static_cast<int>(sentences.size());
  std::vector<bool> taken(n, false);
  for (int i : selected) {
    if (i < 0 || i >= n) throw std::invalid_argument("selected index out of range");
    taken[i] = true;
  }
  if (std::count(taken.begin(), taken.end(), false) == 0) {
    throw std::invalid_argument("all sentences are already selected");
  }
  auto in = StateInput(state, doc);
  std::vector<double> base = StateProjection(model, in);
  std::vector<double> scores(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (!taken[i]) scores[i] = ScoreFromProjection(model, base, sentences[i]);
  }
  return MaskedSoftmax(scores, taken);
}

std::vector<int> DecodeGreedy(const Model &model, const DocumentContext &context, int k) {
  if (k < 1 || k > context.num_candidates()) {
    throw std::invalid_argument("document '" + context.doc().id + "' has " +
                                std::to_string(context.num_candidates()) +
                                " candidate sentences; cannot pick " + std::to_string(k));
  }
  std::vector<int> picked;
  for (int t = 0; t < k; ++t) {
    DecoderState state = context.State(picked, k);
    std::vector<double> probs =
        ScoreRemaining(model, state, context.document(), context.sentences(), picked);
    int best = -1;
    for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
      bool free = std::find(picked.begin(), picked.end(), i) == picked.end();
      if (free && (best < 0 || probs[i] > probs[best])) best = i;
    }
    picked.push_back(best);
  }
  return picked;
}

std::vector<int> DecodeGreedy(const Model &model, const Document &doc, int k) {
  return DecodeGreedy(model, DocumentContext(doc, model.train_config.max_sents), k);
}

double ClassifyOption(const Model &model, const OptionFeatures &features) {
  return Sigmoid(CompressionLogit(model, features));
}

TrainingExample MakeTrainingExample(const DocumentContext &context,
                                    std::span<const OracleCandidate> oracles,
                                    const std::vector<std::vector<LabeledOption>> &labels) {
  if (oracles.empty()) throw std::invalid_argument("at least one oracle is required");
  const int n = context.num_candidates();
  const double weight = 1.0 / static_cast<double>(oracles.size());
  TrainingExample example;
  example.sentences.assign(context.sentences().begin(), context.sentences().end());
  for (const OracleCandidate &oracle : oracles) {
    const auto &order = oracle.sentence_indices;
    const int k = static_cast<int>(order.size());
    std::vector<int> prefix;
    for (int t = 0; t < k; ++t) {
      const int gold = order[t];
      if (gold < 0 || gold >= n) {
        throw std::invalid_argument("oracle sentence " + std::to_string(gold) +
                                    " outside the " + std::to_string(n) +
                                    "-sentence window of document '" + context.doc().id + "'");
      }
      DecoderState state = context.State(prefix, k);
      TrainingExample::Step step;
      step.input = StateInput(state, context.document());
      for (int i = 0; i < n; ++i) {
        if (std::find(prefix.begin(), prefix.end(), i) == prefix.end()) step.candidates.push_back(i);
      }
      step.gold = gold;
      step.weight = weight;
      example.steps.push_back(std::move(step));
      if (gold < static_cast<int>(labels.size())) {
        for (const LabeledOption &lo : labels[gold]) {
          example.options.push_back({context.Option(gold, lo.option, state),
                                     lo.label == CompressionLabel::kDel, weight});
        }
      }
      prefix.push_back(gold);
    }
  }
  return example;
}

double LossAndGradient(const Model &model, const TrainingExample &example,
                       const TrainConfig &config, std::vector<double> *gradient) {
  const int h = model.hidden();
  const int ch = model.compression_hidden();
  const bool want_grad = gradient != nullptr;
  if (want_grad) gradient->assign(model.params().size(), 0.0);

  std::span<double> g_state, g_sent, g_b, g_score, g_cin, g_cbias, g_cout;
  double *g_cout_bias = nullptr;
  if (want_grad) {
    auto blk = [&](int i) {
      const ParamBlock &b = model.blocks()[i];
      return std::span<double>(*gradient).subspan(b.offset, b.size());
    };
    g_state = blk(0);
    g_sent = blk(1);
    g_b = blk(2);
    g_score = blk(3);
    g_cin = blk(4);
    g_cbias = blk(5);
    g_cout = blk(6);
    g_cout_bias = blk(7).data();
  }

  double sentence_loss = 0;
  std::vector<double> z;
  std::vector<double> scores;
  std::vector<double> da_sum(h);
  for (const TrainingExample::Step &step : example.steps) {
    const std::size_t m = step.candidates.size();
    std::vector<double> base = StateProjection(model, step.input);
    z.assign(m * h, 0.0);
    scores.assign(m, 0.0);
    double best = -std::numeric_limits<double>::infinity();
    std::size_t gold_pos = m;
    for (std::size_t j = 0; j < m; ++j) {
      scores[j] = ScoreFromProjection(model, base, example.sentences[step.candidates[j]], &z[j * h]);
      best = std::max(best, scores[j]);
      if (step.candidates[j] == step.gold) gold_pos = j;
    }
    if (gold_pos == m) throw std::invalid_argument("gold sentence is not a candidate");
    double total = 0;
    for (double s : scores) total += std::exp(s - best);
    const double log_norm = best + std::log(total);
    sentence_loss += step.weight * (log_norm - scores[gold_pos]);
    if (!want_grad) continue;

    auto w_score = model.w_score();
    std::fill(da_sum.begin(), da_sum.end(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      double g = std::exp(scores[j] - log_norm) - (j == gold_pos ? 1.0 : 0.0);
      g *= step.weight;
      const SentenceFeatures &x = example.sentences[step.candidates[j]];
      for (int r = 0; r < h; ++r) {
        const double t = z[j * h + r];
        g_score[r] += g * t;
        const double da = g * w_score[r] * (1.0 - t * t);
        da_sum[r] += da;
        for (int c = 0; c < kSentenceDim; ++c) g_sent[r * kSentenceDim + c] += da * x.values[c];
      }
    }
    for (int r = 0; r < h; ++r) {
      g_b[r] += da_sum[r];
      for (int c = 0; c < Model::kStateInputDim; ++c) {
        g_state[r * Model::kStateInputDim + c] += da_sum[r] * step.input[c];
      }
    }
  }

  double compression_loss = 0;
  std::vector<double> v(ch);
  for (const TrainingExample::OptionItem &item : example.options) {
    const double logit = CompressionLogit(model, item.features, v.data());
    const double scale = item.weight * (item.del ? config.positive_weight : 1.0);
    compression_loss += scale * (item.del ? Softplus(-logit) : Softplus(logit));
    if (!want_grad) continue;
    const double dl = config.alpha * scale * (Sigmoid(logit) - (item.del ? 1.0 : 0.0));
    *g_cout_bias += dl;
    auto c_out = model.c_out();
    for (int r = 0; r < ch; ++r) {
      g_cout[r] += dl * v[r];
      const double du = dl * c_out[r] * (1.0 - v[r] * v[r]);
      g_cbias[r] += du;
      for (int c = 0; c < kOptionDim; ++c) g_cin[r * kOptionDim + c] += du * item.features.values[c];
    }
  }
  return sentence_loss + config.alpha * compression_loss;
}

double LossJoint(const Model &model, const Document &doc,
                 std::span<const OracleCandidate> oracles,
                 const std::vector<std::vector<LabeledOption>> &labels,
                 const TrainConfig &config) {
  DocumentContext context(doc, config.max_sents);
  return LossAndGradient(model, MakeTrainingExample(context, oracles, labels), config, nullptr);
}

TrainResult Train(std::span<const TrainingDocument> corpus, const TrainConfig &config,
                  int hidden, int compression_hidden) {
  config.Validate();
  if (corpus.empty()) throw std::invalid_argument("training corpus is empty");
  std::vector<TrainingExample> examples;
  examples.reserve(corpus.size());
  for (const TrainingDocument &d : corpus) {
    DocumentContext context(*d.doc, config.max_sents);
    examples.push_back(MakeTrainingExample(context, d.oracle->oracles, d.oracle->labels));
  }

  TrainResult result{Model::Initialize(config.seed, hidden, compression_hidden), {}};
  Model &model = result.model;
  model.train_config = config;

  auto mean_loss = [&]() {
    double total = 0;
    for (const TrainingExample &e : examples) total += LossAndGradient(model, e, config, nullptr);
    return total / static_cast<double>(examples.size());
  };
  result.epoch_loss.push_back(mean_loss());

  std::vector<double> first(model.params().size(), 0.0);
  std::vector<double> second(model.params().size(), 0.0);
  std::vector<double> grad;
  std::vector<std::size_t> order(examples.size());
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::int64_t step = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    for (std::size_t idx : order) {
      LossAndGradient(model, examples[idx], config, &grad);
      ++step;
      const double c1 = 1.0 - std::pow(config.beta1, static_cast<double>(step));
      const double c2 = 1.0 - std::pow(config.beta2, static_cast<double>(step));
      std::span<double> p = model.params();
      for (std::size_t j = 0; j < p.size(); ++j) {
        first[j] = config.beta1 * first[j] + (1.0 - config.beta1) * grad[j];
        second[j] = config.beta2 * second[j] + (1.0 - config.beta2) * grad[j] * grad[j];
        p[j] -= config.learning_rate * (first[j] / c1) / (std::sqrt(second[j] / c2) + config.epsilon);
      }
    }
    result.epoch_loss.push_back(mean_loss());
  }
  return result;
}

double GradientCheck(const Model &model, const TrainingExample &example,
                     const TrainConfig &config, double h, const GradientMutator &mutate) {
  std::vector<double> analytic;
  LossAndGradient(model, example, config, &analytic);
  if (mutate) mutate(analytic);
  // Probes run in extended precision so roundoff stays well below the
  // smallest gradients being checked.
  std::vector<long double> p(model.params().begin(), model.params().end());
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long double saved = p[i];
    p[i] = saved + h;
    const long double up = ForwardLoss<long double>(model, p, example, config);
    p[i] = saved - h;
    const long double down = ForwardLoss<long double>(model, p, example, config);
    p[i] = saved;
    const double numeric = static_cast<double>((up - down) / (2 * static_cast<long double>(h)));
    const double err = std::abs(analytic[i] - numeric) /
                       std::max(1e-8, std::abs(analytic[i]) + std::abs(numeric));
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace compsum
