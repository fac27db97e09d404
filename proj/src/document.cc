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

#include "compsum/document.h"

namespace compsum {

TokenList Document::ReferenceTokens() const {
  TokenList out;
  for (const TokenList &s : reference) out.insert(out.end(), s.begin(), s.end());
  return out;
}

TokenList ConcatenateSentences(const Document &doc, const std::vector<int> &indices) {
  TokenList out;
  for (int i : indices) {
    for (const Token &t : doc.sentences.at(i).tokens) out.push_back(t.text);
  }
  return out;
}

}  // namespace compsum
