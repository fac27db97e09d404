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

// Command-line front end: option extraction, oracle construction, training,
// summarization, evaluation, threshold sweeps, statistics and gradient
// checks over JSONL corpora.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compsum/corpus.h"
#include "compsum/evaluate.h"
#include "compsum/model.h"
#include "compsum/oracle.h"
#include "compsum/parallel.h"
#include "compsum/report.h"
#include "compsum/rules.h"
#include "compsum/serialize.h"
#include "compsum/summarize.h"
#include "compsum/synthetic.h"

namespace {

using namespace compsum;

struct Options {
  int threads = 0;

  std::string corpus;
  std::string oracles;
  std::string model;
  std::string out;

  OracleConfig oracle;
  TrainConfig train;
  int hidden = 32;
  SummarizeConfig summarize;
  bool no_dedup = false;
  std::string tau_grid = "0:1:0.05";
  std::string csv;
  std::string json;
  int examples = 10;
  int documents = 200;
  std::uint64_t synth_seed = 7;
};

// Writes to the named file, or stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream &stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<Document> ReadCorpusOrWarn(const std::string &path) {
  CorpusLoad load = LoadCorpus(path);
  for (const std::string &w : load.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(load.documents);
}

SummarizeConfig SummarizeSettings(const Options &o) {
  SummarizeConfig c = o.summarize;
  c.dedup = !o.no_dedup;
  c.Validate();
  return c;
}

// Pairs each oracle record with its document by id.
std::vector<TrainingDocument> Pair(const std::vector<Document> &docs,
                                   const std::vector<DocumentOracle> &oracles) {
  std::map<std::string, const Document *> by_id;
  for (const Document &d : docs) by_id[d.id] = &d;
  std::vector<TrainingDocument> out;
  for (const DocumentOracle &o : oracles) {
    auto it = by_id.find(o.doc_id);
    if (it == by_id.end()) {
      std::cerr << "warning: oracle for unknown document '" << o.doc_id << "' ignored\n";
      continue;
    }
    out.push_back({it->second, &o});
  }
  return out;
}

void RunOptionsExtract(const Options &o) {
  Output out(o.out);
  for (const Document &doc : ReadCorpusOrWarn(o.corpus)) {
    for (int i = 0; i < doc.size(); ++i) {
      out.stream() << OptionsRecord(doc.id, i, ExtractOptions(doc.sentences[i])) << "\n";
    }
  }
}

void RunOracleBuild(const Options &o) {
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<std::string> errors;
  std::vector<DocumentOracle> oracles = BuildOracles(docs, o.oracle, &errors);
  for (const std::string &e : errors) std::cerr << "warning: " << e << "\n";
  SaveOracles(oracles, o.out);
  std::vector<LabeledOption> labeled;
  for (const DocumentOracle &d : oracles) {
    auto l = d.TopOracleLabels();
    labeled.insert(labeled.end(), l.begin(), l.end());
  }
  std::cerr << "built oracles for " << oracles.size() << " of " << docs.size() << " documents\n";
  if (!labeled.empty()) std::cerr << MakeCompressabilityReport(labeled).ToTable();
}

void RunTrain(const Options &o) {
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<DocumentOracle> oracles = LoadOracles(o.oracles);
  std::vector<TrainingDocument> pairs = Pair(docs, oracles);
  TrainResult result = Train(pairs, o.train, o.hidden, o.hidden);
  for (std::size_t e = 0; e < result.epoch_loss.size(); ++e) {
    std::cerr << "epoch " << e << " mean loss " << result.epoch_loss[e] << "\n";
  }
  SaveModel(result.model, o.out);
}

void RunSummarize(const Options &o) {
  Model model = LoadModel(o.model);
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<Summary> summaries = SummarizeCorpus(model, docs, SummarizeSettings(o));
  Output out(o.out);
  for (const Summary &s : summaries) out.stream() << SummaryRecord(s) << "\n";
}

void RunEvaluate(const Options &o) {
  Model model = LoadModel(o.model);
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  CorpusEvaluation eval = EvaluateCorpus(model, docs, SummarizeSettings(o));
  for (const std::string &w : eval.warnings) std::cerr << "warning: " << w << "\n";
  if (eval.skipped > 0) std::cerr << eval.skipped << " documents skipped\n";
  if (!o.csv.empty()) Output(o.csv).stream() << eval.ToCsv();
  if (!o.json.empty()) Output(o.json).stream() << eval.ToJson() << "\n";
  if (o.csv.empty() && o.json.empty()) std::cout << eval.ToCsv();
}

void RunSweep(const Options &o) {
  Model model = LoadModel(o.model);
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<double> grid = ParseTauGrid(o.tau_grid);
  std::vector<SweepRow> rows = SweepThreshold(model, docs, grid, SummarizeSettings(o));
  Output(o.out).stream() << SweepCsv(rows);
}

void RunStats(const Options &o) {
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<DocumentOracle> oracles = LoadOracles(o.oracles);
  std::vector<LabeledOption> labeled;
  for (const DocumentOracle &d : oracles) {
    auto l = d.TopOracleLabels();
    labeled.insert(labeled.end(), l.begin(), l.end());
  }
  std::vector<Summary> summaries;
  if (!o.model.empty()) {
    summaries = SummarizeCorpus(LoadModel(o.model), docs, SummarizeSettings(o));
  }
  Output out(o.out);
  out.stream() << MakeCompressabilityReport(labeled).ToTable() << "\n"
               << MakeStatsReport(labeled, summaries).ToCsv();
}

void RunGradcheck(const Options &o) {
  std::vector<Document> docs = ReadCorpusOrWarn(o.corpus);
  std::vector<DocumentOracle> oracles = LoadOracles(o.oracles);
  std::vector<TrainingDocument> pairs = Pair(docs, oracles);
  Model model = o.model.empty() ? Model::Initialize(o.train.seed, o.hidden, o.hidden)
                                : LoadModel(o.model);
  double worst = 0;
  int checked = 0;
  for (const TrainingDocument &p : pairs) {
    if (checked == o.examples) break;
    DocumentContext context(*p.doc, o.train.max_sents);
    TrainingExample example = MakeTrainingExample(context, p.oracle->oracles, p.oracle->labels);
    double err = GradientCheck(model, example, o.train);
    std::cout << p.doc->id << " max_relative_error " << err << "\n";
    worst = std::max(worst, err);
    ++checked;
  }
  std::cout << "worst " << worst << (worst < 1e-4 ? " PASS" : " FAIL") << "\n";
  if (worst >= 1e-4) throw std::runtime_error("gradient check failed");
}

void RunSynth(const Options &o) {
  SyntheticConfig config;
  config.documents = o.documents;
  config.seed = o.synth_seed;
  Output out(o.out);
  for (const SyntheticDocument &d : GenerateSyntheticCorpus(config)) {
    out.stream() << DocumentRecord(d.doc) << "\n";
  }
}

void AddSummarizeFlags(CLI::App *cmd, Options *o) {
  cmd->add_option("--tau", o->summarize.tau, "deletion aggressiveness in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--k", o->summarize.k, "sentences to extract")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-dedup", o->no_dedup, "disable heuristic deduplication");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Joint extractive and compressive summarization"};
  app.set_config("--config", "", "TOML/INI file with default flag values");
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");

  std::string command;

  auto *options = app.add_subcommand("options", "compression option tools");
  options->require_subcommand(1);
  auto *extract = options->add_subcommand("extract", "dump compression options as JSONL");
  extract->add_option("--corpus", o.corpus)->required();
  extract->add_option("--out", o.out);

  auto *oracle = app.add_subcommand("oracle", "oracle construction");
  oracle->require_subcommand(1);
  auto *build = oracle->add_subcommand("build", "beam-search oracles and compression labels");
  build->add_option("--corpus", o.corpus)->required();
  build->add_option("--out", o.out)->required();
  build->add_option("--k", o.oracle.k, "sentences per oracle");
  build->add_option("--beam", o.oracle.beam_width, "beam width");
  build->add_option("--max-sents", o.oracle.max_sents, "leading sentences considered");
  build->add_option("--m", o.oracle.m, "oracles kept per document");

  auto *train = app.add_subcommand("train", "train the extraction and compression scorers");
  train->add_option("--corpus", o.corpus)->required();
  train->add_option("--oracles", o.oracles)->required();
  train->add_option("--out", o.out)->required();
  train->add_option("--alpha", o.train.alpha, "compression loss weight");
  train->add_option("--lr", o.train.learning_rate, "Adam learning rate");
  train->add_option("--epochs", o.train.epochs);
  train->add_option("--seed", o.train.seed);
  train->add_option("--positive-weight", o.train.positive_weight, "loss weight of DEL labels");
  train->add_option("--hidden", o.hidden, "hidden layer width");

  auto *summarize = app.add_subcommand("summarize", "write summaries as JSONL");
  summarize->add_option("--model", o.model)->required();
  summarize->add_option("--corpus", o.corpus)->required();
  summarize->add_option("--out", o.out);
  AddSummarizeFlags(summarize, &o);

  auto *evaluate = app.add_subcommand("evaluate", "ROUGE-1/2/L of the model's summaries");
  evaluate->add_option("--model", o.model)->required();
  evaluate->add_option("--corpus", o.corpus)->required();
  evaluate->add_option("--csv", o.csv, "per-document CSV report");
  evaluate->add_option("--json", o.json, "JSON report");
  AddSummarizeFlags(evaluate, &o);

  auto *sweep = app.add_subcommand("sweep", "ROUGE and compression ratio across tau");
  sweep->add_option("--model", o.model)->required();
  sweep->add_option("--corpus", o.corpus)->required();
  sweep->add_option("--tau-grid", o.tau_grid, "start:stop:step");
  sweep->add_option("--out", o.out);
  AddSummarizeFlags(sweep, &o);

  auto *stats = app.add_subcommand("stats", "compressability and node-type statistics");
  stats->add_option("--corpus", o.corpus)->required();
  stats->add_option("--oracles", o.oracles)->required();
  stats->add_option("--model", o.model, "also report applied deletions");
  stats->add_option("--out", o.out);
  AddSummarizeFlags(stats, &o);

  auto *gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient check");
  gradcheck->add_option("--corpus", o.corpus)->required();
  gradcheck->add_option("--oracles", o.oracles)->required();
  gradcheck->add_option("--model", o.model, "model file (default: seeded initialization)");
  gradcheck->add_option("--examples", o.examples, "documents to check");
  gradcheck->add_option("--seed", o.train.seed);

  auto *synth = app.add_subcommand("synth", "write a synthetic corpus as JSONL");
  synth->add_option("--out", o.out);
  synth->add_option("--documents", o.documents);
  synth->add_option("--seed", o.synth_seed);

  CLI11_PARSE(app, argc, argv);
  SetNumThreads(o.threads);

  CLI::App *active = app.get_subcommands().front();
  if (!active->get_subcommands().empty()) {
    command = active->get_name() + " " + active->get_subcommands().front()->get_name();
  } else {
    command = active->get_name();
  }

  try {
    if (extract->parsed()) RunOptionsExtract(o);
    else if (build->parsed()) RunOracleBuild(o);
    else if (train->parsed()) RunTrain(o);
    else if (summarize->parsed()) RunSummarize(o);
    else if (evaluate->parsed()) RunEvaluate(o);
    else if (sweep->parsed()) RunSweep(o);
    else if (stats->parsed()) RunStats(o);
    else if (gradcheck->parsed()) RunGradcheck(o);
    else if (synth->parsed()) RunSynth(o);
  } catch (const std::exception &e) {
    nlohmann::json error = {{"error", e.what()}, {"command", command}};
    std::cerr << error.dump() << "\n";
    return 1;
  }
  return 0;
}
