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

#include "compsum/evaluate.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace compsum {
namespace {

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void AddTo(RougeScore *acc, const RougeScore &s) {
  acc->precision += s.precision;
  acc->recall += s.recall;
  acc->f1 += s.f1;
}

void Scale(RougeScore *s, double by) {
  s->precision *= by;
  s->recall *= by;
  s->f1 *= by;
}

nlohmann::json ScoreJson(const RougeScore &s) {
  return {{"p", s.precision}, {"r", s.recall}, {"f", s.f1}};
}

}  // namespace

RougeTriple ScoreSummary(std::span<const std::string> candidate,
                         std::span<const std::string> reference,
                         const PreprocessConfig &preprocess) {
  TokenList cand = PreprocessTokens(candidate, preprocess);
  TokenList ref = PreprocessTokens(reference, preprocess);
  return RougeTriple{RougeN(cand, ref, 1), RougeN(cand, ref, 2), RougeL(cand, ref)};
}

double CorpusEvaluation::CompressionRatio() const {
  double before = 0, after = 0;
  for (const DocumentEvaluation &d : documents) {
    before += d.tokens_before;
    after += d.tokens_after;
  }
  return before > 0 ? after / before : 1.0;
}

std::string CorpusEvaluation::ToCsv() const {
  std::ostringstream out;
  out << "doc_id,r1_p,r1_r,r1_f,r2_p,r2_r,r2_f,rl_p,rl_r,rl_f\n";
  auto row = [&](const std::string &id, const RougeTriple &t) {
    out << id;
    for (const RougeScore *s : {&t.rouge1, &t.rouge2, &t.rougeL}) {
      out << ',' << Fixed(s->precision) << ',' << Fixed(s->recall) << ',' << Fixed(s->f1);
    }
    out << '\n';
  };
  for (const DocumentEvaluation &d : documents) row(d.doc_id, d.scores);
  row("MEAN", mean);
  return out.str();
}

std::string CorpusEvaluation::ToJson() const {
  nlohmann::json out;
  out["documents"] = nlohmann::json::array();
  for (const DocumentEvaluation &d : documents) {
    out["documents"].push_back({{"doc_id", d.doc_id},
                                {"rouge1", ScoreJson(d.scores.rouge1)},
                                {"rouge2", ScoreJson(d.scores.rouge2)},
                                {"rougeL", ScoreJson(d.scores.rougeL)}});
  }
  out["mean"] = {{"rouge1", ScoreJson(mean.rouge1)},
                 {"rouge2", ScoreJson(mean.rouge2)},
                 {"rougeL", ScoreJson(mean.rougeL)}};
  out["evaluated"] = documents.size();
  out["skipped"] = skipped;
  return out.dump(2);
}

CorpusEvaluation EvaluateSummaries(std::span<const Summary> summaries,
                                   std::span<const Document> corpus) {
  if (summaries.size() != corpus.size()) {
    throw std::invalid_argument("one summary per document is required");
  }
  CorpusEvaluation out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Document &doc = corpus[i];
    if (!doc.has_reference()) {
      ++out.skipped;
      out.warnings.push_back("document '" + doc.id + "' has no reference; skipped");
      continue;
    }
    TokenList reference = doc.ReferenceTokens();
    DocumentEvaluation row;
    row.doc_id = doc.id;
    row.scores = ScoreSummary(summaries[i].Tokens(), reference);
    row.tokens_before = summaries[i].tokens_before;
    row.tokens_after = summaries[i].tokens_after();
    out.documents.push_back(std::move(row));
  }
  if (!out.documents.empty()) {
    for (const DocumentEvaluation &d : out.documents) {
      AddTo(&out.mean.rouge1, d.scores.rouge1);
      AddTo(&out.mean.rouge2, d.scores.rouge2);
      AddTo(&out.mean.rougeL, d.scores.rougeL);
    }
    const double inv = 1.0 / static_cast<double>(out.documents.size());
    Scale(&out.mean.rouge1, inv);
    Scale(&out.mean.rouge2, inv);
    Scale(&out.mean.rougeL, inv);
  }
  return out;
}

std::vector<Summary> SummarizeCorpus(const Model &model, std::span<const Document> corpus,
                                     const SummarizeConfig &config) {
  config.Validate();
  const auto count = static_cast<std::int64_t>(corpus.size());
  std::vector<Summary> out(corpus.size());
  std::vector<std::string> errors(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[i] = Summarize(model, corpus[i], config);
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  }
  for (const std::string &e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  return out;
}

CorpusEvaluation EvaluateCorpus(const Model &model, std::span<const Document> corpus,
                                const SummarizeConfig &config) {
  std::vector<Summary> summaries = SummarizeCorpus(model, corpus, config);
  return EvaluateSummaries(summaries, corpus);
}

std::vector<double> ParseTauGrid(const std::string &spec) {
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw std::invalid_argument("tau grid must look like start:stop:step, got '" + spec + "'");
  }
  if (!(step > 0)) throw std::invalid_argument("tau grid step must be positive");
  if (start < 0 || stop > 1 || start > stop) {
    throw std::invalid_argument("tau grid must satisfy 0 <= start <= stop <= 1");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    double tau = start + i * step;
    if (tau > stop + 1e-9) break;
    grid.push_back(std::min(tau, 1.0));
  }
  return grid;
}

std::vector<SweepRow> SweepThreshold(const Model &model, std::span<const Document> corpus,
                                     std::span<const double> grid,
                                     const SummarizeConfig &base) {
  std::vector<SweepRow> rows;
  for (double tau : grid) {
    SummarizeConfig config = base;
    config.tau = tau;
    CorpusEvaluation eval = EvaluateCorpus(model, corpus, config);
    rows.push_back({tau, eval.mean, eval.CompressionRatio()});
  }
  return rows;
}

std::string SweepCsv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "tau,r1_f,r2_f,rl_f,mean_f,compression_ratio\n";
  for (const SweepRow &r : rows) {
    out << Fixed(r.tau, 4) << ',' << Fixed(r.mean.rouge1.f1) << ',' << Fixed(r.mean.rouge2.f1)
        << ',' << Fixed(r.mean.rougeL.f1) << ',' << Fixed(r.mean.MeanF1()) << ','
        << Fixed(r.compression_ratio) << '\n';
  }
  return out.str();
}

}  // namespace compsum
