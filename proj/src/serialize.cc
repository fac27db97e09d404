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

#include "compsum/serialize.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace compsum {

using nlohmann::json;

namespace {

json TrainConfigJson(const TrainConfig &c) {
  return {{"alpha", c.alpha},
          {"learning_rate", c.learning_rate},
          {"epochs", c.epochs},
          {"beta1", c.beta1},
          {"beta2", c.beta2},
          {"epsilon", c.epsilon},
          {"positive_weight", c.positive_weight},
          {"max_sents", c.max_sents}};
}

TrainConfig TrainConfigFromJson(const json &j, std::uint64_t seed) {
  TrainConfig c;
  c.alpha = j.at("alpha").get<double>();
  c.learning_rate = j.at("learning_rate").get<double>();
  c.epochs = j.at("epochs").get<int>();
  c.beta1 = j.at("beta1").get<double>();
  c.beta2 = j.at("beta2").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.positive_weight = j.at("positive_weight").get<double>();
  c.max_sents = j.at("max_sents").get<int>();
  c.seed = seed;
  return c;
}

json OptionJson(const CompressionOption &o) {
  return {{"start", o.span.start},
          {"end", o.span.end},
          {"rule", RuleName(o.rule)},
          {"label", o.node_label}};
}

CompressionOption OptionFromJson(const json &j) {
  CompressionOption o;
  o.span = Span{j.at("start").get<int>(), j.at("end").get<int>()};
  auto rule = RuleFromName(j.at("rule").get<std::string>());
  if (!rule) throw FormatError("unknown rule " + j.at("rule").dump());
  o.rule = *rule;
  o.node_label = j.value("node", "");
  o.include_boundary_punct = j.value("punct", false);
  return o;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string ModelToJson(const Model &model) {
  json weights = json::object();
  auto params = model.params();
  for (const ParamBlock &b : model.blocks()) {
    json rows = json::array();
    for (int r = 0; r < b.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < b.cols; ++c) row.push_back(params[b.offset + r * b.cols + c]);
      rows.push_back(std::move(row));
    }
    weights[b.name] = std::move(rows);
  }
  json out = {{"format_version", Model::kFormatVersion},
              {"feature_dims",
               {{"sentence", kSentenceDim},
                {"document", kDocumentDim},
                {"state", kStateDim},
                {"option", kOptionDim}}},
              {"hidden_size", model.hidden()},
              {"compression_hidden_size", model.compression_hidden()},
              {"weights", std::move(weights)},
              {"train_config", TrainConfigJson(model.train_config)},
              {"seed", model.train_config.seed}};
  return out.dump();
}

Model ModelFromJson(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw FormatError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    int version = j.at("format_version").get<int>();
    if (version != Model::kFormatVersion) {
      throw FormatError("unsupported model format version " + std::to_string(version) +
                        " (expected " + std::to_string(Model::kFormatVersion) + ")");
    }
    const json &dims = j.at("feature_dims");
    if (dims.at("sentence").get<int>() != kSentenceDim ||
        dims.at("document").get<int>() != kDocumentDim ||
        dims.at("state").get<int>() != kStateDim || dims.at("option").get<int>() != kOptionDim) {
      throw FormatError("model feature dimensions do not match this build");
    }
    Model model(j.at("hidden_size").get<int>(), j.at("compression_hidden_size").get<int>());
    const json &weights = j.at("weights");
    std::span<double> params = model.params();
    for (const ParamBlock &b : model.blocks()) {
      const json &rows = weights.at(b.name);
      if (!rows.is_array() || static_cast<int>(rows.size()) != b.rows) {
        throw FormatError("weight block " + b.name + " has the wrong number of rows");
      }
      for (int r = 0; r < b.rows; ++r) {
        const json &row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != b.cols) {
          throw FormatError("weight block " + b.name + " has the wrong number of columns");
        }
        for (int c = 0; c < b.cols; ++c) {
          if (!row[c].is_number()) throw FormatError("non-numeric weight in " + b.name);
          double v = row[c].get<double>();
          if (!std::isfinite(v)) throw FormatError("non-finite weight in " + b.name);
          params[b.offset + r * b.cols + c] = v;
        }
      }
    }
    model.train_config = TrainConfigFromJson(j.at("train_config"), j.at("seed").get<std::uint64_t>());
    return model;
  } catch (const json::exception &e) {
    throw FormatError(std::string("malformed model file: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw FormatError(std::string("malformed model file: ") + e.what());
  }
}

void SaveModel(const Model &model, const std::string &path) {
  WriteFile(path, ModelToJson(model) + "\n");
}

Model LoadModel(const std::string &path) { return ModelFromJson(ReadFile(path)); }

std::string OracleRecord(const DocumentOracle &oracle) {
  json oracles = json::array();
  for (const OracleCandidate &c : oracle.oracles) {
    oracles.push_back({{"indices", c.sentence_indices}, {"score", c.score}});
  }
  json labels = json::array();
  for (const auto &sentence : oracle.labels) {
    json row = json::array();
    for (const LabeledOption &l : sentence) {
      json item = OptionJson(l.option);
      item.erase("label");
      item["node"] = l.option.node_label;
      item["punct"] = l.option.include_boundary_punct;
      item["r_before"] = l.r_before;
      item["r_after"] = l.r_after;
      item["label"] = LabelName(l.label);
      row.push_back(std::move(item));
    }
    labels.push_back(std::move(row));
  }
  return json{{"doc_id", oracle.doc_id}, {"oracles", oracles}, {"labels", labels}}.dump();
}

DocumentOracle ParseOracleRecord(const std::string &line) {
  try {
    json j = json::parse(line);
    DocumentOracle out;
    out.doc_id = j.at("doc_id").get<std::string>();
    for (const json &c : j.at("oracles")) {
      out.oracles.push_back(
          {c.at("indices").get<std::vector<int>>(), c.at("score").get<double>()});
    }
    for (const json &row : j.at("labels")) {
      std::vector<LabeledOption> sentence;
      for (const json &item : row) {
        LabeledOption l = LabeledOption::Make(OptionFromJson(item), item.at("r_before").get<double>(),
                                              item.at("r_after").get<double>());
        std::string label = item.at("label").get<std::string>();
        if (label != LabelName(l.label)) {
          throw FormatError("label " + label + " contradicts its scores in " + out.doc_id);
        }
        sentence.push_back(std::move(l));
      }
      out.labels.push_back(std::move(sentence));
    }
    return out;
  } catch (const json::exception &e) {
    throw FormatError(std::string("malformed oracle record: ") + e.what());
  }
}

void SaveOracles(const std::vector<DocumentOracle> &oracles, const std::string &path) {
  std::string text;
  for (const DocumentOracle &o : oracles) text += OracleRecord(o) + "\n";
  WriteFile(path, text);
}

std::vector<DocumentOracle> LoadOracles(const std::string &path) {
  std::istringstream in(ReadFile(path));
  std::vector<DocumentOracle> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(ParseOracleRecord(line));
    } catch (const FormatError &e) {
      throw FormatError(path + " line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::string OptionsRecord(const std::string &doc_id, int sent_index,
                          const std::vector<CompressionOption> &options) {
  json items = json::array();
  for (const CompressionOption &o : options) items.push_back(OptionJson(o));
  return json{{"doc_id", doc_id}, {"sent_index", sent_index}, {"options", items}}.dump();
}

std::string SummaryRecord(const Summary &summary) {
  json sentences = json::array();
  for (const SummarySentence &s : summary.sentences) {
    json deletions = json::array();
    for (const AppliedDeletion &d : s.deletions) {
      json item = OptionJson(d.option);
      item["cause"] = CauseName(d.cause);
      deletions.push_back(std::move(item));
    }
    std::string text;
    for (const std::string &t : s.tokens) {
      if (!text.empty()) text.push_back(' ');
      text += t;
    }
    sentences.push_back({{"index", s.index}, {"text", text}, {"deletions", deletions}});
  }
  return json{{"doc_id", summary.doc_id},
              {"selected", summary.selected},
              {"sentences", sentences},
              {"text", summary.Text()}}
      .dump();
}

}  // namespace compsum
