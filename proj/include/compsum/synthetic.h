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

#ifndef COMPSUM_SYNTHETIC_H_
#define COMPSUM_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "compsum/document.h"

namespace compsum {

struct SyntheticConfig {
  int documents = 200;
  int min_sentences = 6;
  int max_sentences = 10;
  std::uint64_t seed = 7;
};

struct SyntheticDocument {
  Document doc;
  // The sentence the reference was copied from.
  int salient = 0;
};

// Parsed documents over pseudo-words. One sentence per document carries
// several capitalized names and is copied, minus its filler modifiers,
// into the reference. Modifiers are either filler (unique words that
// never reach the reference) or topical (reference words that recur in
// the document), so oracle compression labels are learnable.
std::vector<SyntheticDocument> GenerateSyntheticCorpus(const SyntheticConfig &config);

}  // namespace compsum

#endif  // COMPSUM_SYNTHETIC_H_
