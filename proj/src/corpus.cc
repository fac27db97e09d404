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

#include "compsum/corpus.h"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace compsum {

using nlohmann::json;

Document ParseDocumentRecord(const std::string &line) {
  json record = json::parse(line);
  if (!record.is_object()) throw std::runtime_error("record is not a JSON object");
  Document doc;
  if (!record.contains("id") || !record["id"].is_string()) {
    throw std::runtime_error("record has no string 'id'");
  }
  doc.id = record["id"].get<std::string>();
  if (!record.contains("sentences") || !record["sentences"].is_array() ||
      record["sentences"].empty()) {
    throw std::runtime_error("document '" + doc.id + "' has no sentences");
  }
  int index = 0;
  for (const json &s : record["sentences"]) {
    if (!s.contains("parse") || !s["parse"].is_string()) {
      throw std::runtime_error("document '" + doc.id + "' sentence " +
                               std::to_string(index) + " has no parse");
    }
    SentenceTree tree;
    try {
      tree = ParsePtb(s["parse"].get<std::string>());
    } catch (const ParseError &e) {
      throw std::runtime_error("document '" + doc.id + "' sentence " +
                               std::to_string(index) + ": " + e.what());
    }
    if (s.contains("tokens")) {
      std::vector<std::string> tokens = s["tokens"].get<std::vector<std::string>>();
      bool same = tokens.size() == tree.tokens.size();
      for (std::size_t i = 0; same && i < tokens.size(); ++i) {
        same = UnescapeToken(tokens[i]) == tree.tokens[i].text;
      }
      if (!same) {
        throw std::runtime_error("document '" + doc.id + "' sentence " +
                                 std::to_string(index) +
                                 ": tokens do not match parse leaves");
      }
    }
    doc.sentences.push_back(std::move(tree));
    ++index;
  }
  if (record.contains("reference")) {
    for (const json &sent : record["reference"]) {
      TokenList tokens;
      for (const json &t : sent) tokens.push_back(UnescapeToken(t.get<std::string>()));
      doc.reference.push_back(std::move(tokens));
    }
  }
  return doc;
}

std::string DocumentRecord(const Document &doc) {
  json record;
  record["id"] = doc.id;
  record["sentences"] = json::array();
  for (const SentenceTree &s : doc.sentences) {
    json tokens = json::array();
    for (const Token &t : s.tokens) tokens.push_back(EscapeToken(t.text));
    record["sentences"].push_back({{"tokens", tokens}, {"parse", ToPtb(s)}});
  }
  record["reference"] = json::array();
  for (const TokenList &sent : doc.reference) {
    json tokens = json::array();
    for (const std::string &t : sent) tokens.push_back(EscapeToken(t));
    record["reference"].push_back(tokens);
  }
  return record.dump();
}

CorpusLoad ReadCorpus(std::istream &in) {
  CorpusLoad out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.documents.push_back(ParseDocumentRecord(line));
    } catch (const std::exception &e) {
      out.warnings.push_back("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (line_number == 0) out.warnings.push_back("corpus is empty");
  return out;
}

CorpusLoad LoadCorpus(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file " + path);
  return ReadCorpus(in);
}

}  // namespace compsum
