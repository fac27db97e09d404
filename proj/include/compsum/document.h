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

#ifndef COMPSUM_DOCUMENT_H_
#define COMPSUM_DOCUMENT_H_

#include <string>
#include <vector>

#include "compsum/rouge.h"
#include "compsum/treebank.h"

namespace compsum {

struct Document {
  std::string id;
  std::vector<SentenceTree> sentences;
  // Reference summary, one token list per sentence. May be empty when the
  // document is only summarized.
  std::vector<TokenList> reference;

  int size() const { return static_cast<int>(sentences.size()); }
  bool has_reference() const { return !reference.empty(); }
  TokenList ReferenceTokens() const;
};

// Concatenation of the given sentences' tokens, in the order given.
TokenList ConcatenateSentences(const Document &doc, const std::vector<int> &indices);

}  // namespace compsum

#endif  // COMPSUM_DOCUMENT_H_
