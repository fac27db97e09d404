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

#include "compsum/synthetic.h"

#include <cctype>
#include <random>
#include <set>
#include <string>

namespace compsum {
namespace {

constexpr const char *kSyllables[] = {"ba", "ko", "ri", "ten", "mu", "sal", "dor", "vin",
                                      "pe", "lu", "gar", "nim", "tob", "fel", "quo", "zan",
                                      "wex", "har", "jol", "pim"};
constexpr const char *kPrepositions[] = {"near", "during", "with", "beside"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int Below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  bool Chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

// A constituent plus its words; filler parts never reach the reference.
struct Part {
  std::string ptb;
  std::vector<std::string> words;
  bool filler = false;
};

class DocumentBuilder {
 public:
  DocumentBuilder(Rng *rng) : rng_(*rng) {}

  std::string Fresh() {
    while (true) {
      std::string w;
      int syllables = 2 + rng_.Below(2);
      for (int i = 0; i < syllables; ++i) w += kSyllables[rng_.Below(std::size(kSyllables))];
      if (used_.insert(w).second) return w;
    }
  }

  std::string FreshName() {
    std::string w = Fresh();
    w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    return w;
  }

 private:
  Rng &rng_;
  std::set<std::string> used_;
};

Part Leaf(const std::string &tag, const std::string &word, bool filler = false) {
  return Part{"(" + tag + " " + word + ")", {word}, filler};
}

Part Node(const std::string &label, const std::vector<Part> &children, bool filler = false) {
  Part out{"(" + label, {}, filler};
  for (const Part &c : children) {
    out.ptb += " " + c.ptb;
    out.words.insert(out.words.end(), c.words.begin(), c.words.end());
  }
  out.ptb += ")";
  return out;
}

}  // namespace

std::vector<SyntheticDocument> GenerateSyntheticCorpus(const SyntheticConfig &config) {
  Rng rng(config.seed);
  std::vector<SyntheticDocument> corpus;
  for (int d = 0; d < config.documents; ++d) {
    DocumentBuilder words(&rng);
    const std::string topic[3] = {words.Fresh(), words.Fresh(), words.Fresh()};
    const std::string verb = words.Fresh();
    const std::string adjective = words.Fresh();
    const std::string names[3] = {words.FreshName(), words.FreshName(), words.FreshName()};
    const int n = config.min_sentences +
                  rng.Below(config.max_sentences - config.min_sentences + 1);

    SyntheticDocument out;
    out.doc.id = "synth-" + std::to_string(d);
    out.salient = rng.Below(n);

    for (int i = 0; i < n; ++i) {
      const bool salient = i == out.salient;
      std::vector<Part> vp;
      if (rng.Chance(salient ? 0.5 : 0.3)) {
        vp.push_back(Node("ADVP", {Leaf("RB", words.Fresh())}, true));
      }
      Part subject;
      if (salient) {
        subject = Node("NP", {Leaf("NNP", names[0]), Leaf("NNP", names[1])});
      } else if (rng.Chance(0.25)) {
        subject = Node("NP", {Leaf("NNP", words.FreshName())});
      } else {
        std::vector<Part> np = {Leaf("DT", "the")};
        if (rng.Chance(0.4)) np.push_back(Leaf("JJ", words.Fresh(), true));
        np.push_back(Leaf("NN", topic[rng.Below(3)]));
        subject = Node("NP", np);
      }
      vp.push_back(Leaf("VBD", salient || rng.Chance(0.5) ? verb : words.Fresh()));

      std::vector<Part> object = {Leaf("DT", "the")};
      if (salient || rng.Chance(0.5)) {
        bool topical = salient || rng.Chance(0.5);
        object.push_back(Leaf("JJ", topical ? adjective : words.Fresh(), !topical));
      }
      object.push_back(Leaf("NN", salient ? topic[0] : (rng.Chance(0.6) ? topic[rng.Below(2)] : words.Fresh())));
      vp.push_back(Node("NP", object));

      if (salient || rng.Chance(0.6)) {
        bool topical = salient || rng.Chance(0.5);
        std::string prep = kPrepositions[rng.Below(std::size(kPrepositions))];
        Part np = topical ? (salient && rng.Chance(0.5)
                                 ? Node("NP", {Leaf("NNP", names[2])})
                                 : Node("NP", {Leaf("DT", "the"), Leaf("NN", topic[1])}))
                          : Node("NP", {Leaf("DT", "the"), Leaf("NN", words.Fresh())});
        vp.push_back(Node("PP", {Leaf("IN", prep), np}, !topical));
      }

      Part sentence = Node("S", {subject, Node("VP", vp), Leaf(".", ".")});
      out.doc.sentences.push_back(ParsePtb(sentence.ptb));

      if (salient) {
        // Reference: the salient sentence without its filler parts.
        TokenList reference;
        auto collect = [&](const Part &p) {
          if (!p.filler) reference.insert(reference.end(), p.words.begin(), p.words.end());
        };
        collect(subject);
        for (const Part &p : vp) {
          if (p.filler) continue;
          if (p.ptb.starts_with("(NP")) {
            for (const Part &o : object) collect(o);
          } else {
            collect(p);
          }
        }
        reference.push_back(".");
        out.doc.reference.push_back(std::move(reference));
      }
    }
    corpus.push_back(std::move(out));
  }
  return corpus;
}

}  // namespace compsum
