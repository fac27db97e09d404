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

#ifndef COMPSUM_CORPUS_H_
#define COMPSUM_CORPUS_H_

#include <istream>
#include <string>
#include <vector>

#include "compsum/document.h"

namespace compsum {

struct CorpusLoad {
  std::vector<Document> documents;
  // One message per rejected record or other problem, in file order.
  std::vector<std::string> warnings;
};

// Reads JSONL records {id, sentences: [{tokens, parse}], reference:
// [[token, ...], ...]}. A malformed line or a record whose tokens differ
// from its parse leaves is skipped and reported; the rest still load.
CorpusLoad LoadCorpus(const std::string &path);
CorpusLoad ReadCorpus(std::istream &in);

// Parses one record. Throws std::runtime_error on schema problems.
Document ParseDocumentRecord(const std::string &line);
std::string DocumentRecord(const Document &doc);

}  // namespace compsum

#endif  // COMPSUM_CORPUS_H_
