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

#ifndef COMPSUM_SERIALIZE_H_
#define COMPSUM_SERIALIZE_H_

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "compsum/model.h"
#include "compsum/oracle.h"
#include "compsum/rules.h"
#include "compsum/summarize.h"

namespace compsum {

// Problems reading a model or oracle file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ModelToJson(const Model &model);
// Validates version, feature dimensions and weight shapes.
Model ModelFromJson(const std::string &text);
void SaveModel(const Model &model, const std::string &path);
Model LoadModel(const std::string &path);

// One JSONL line of the oracle cache.
std::string OracleRecord(const DocumentOracle &oracle);
DocumentOracle ParseOracleRecord(const std::string &line);
void SaveOracles(const std::vector<DocumentOracle> &oracles, const std::string &path);
std::vector<DocumentOracle> LoadOracles(const std::string &path);

// {doc_id, sent_index, options: [{start, end, rule, label}]}
std::string OptionsRecord(const std::string &doc_id, int sent_index,
                          const std::vector<CompressionOption> &options);

std::string SummaryRecord(const Summary &summary);

}  // namespace compsum

#endif  // COMPSUM_SERIALIZE_H_
