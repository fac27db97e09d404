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

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "compsum/rouge.h"
#include "doctest.h"
#include "support/test_support.h"

namespace compsum {
namespace {

using Words = std::vector<std::string>;

// Output of the original 1980 algorithm as implemented by NLTK
// (PorterStemmer, ORIGINAL_ALGORITHM mode).
const std::vector<std::pair<std::string, std::string>> kPorterVectors = {
    {"caresses", "caress"}, {"ponies", "poni"}, {"ties", "ti"}, {"caress", "caress"}, {"cats", "cat"}, {"feed", "feed"}, {"agreed", "agre"}, {"plastered", "plaster"}, {"bled", "bled"}, {"motoring", "motor"}, {"sing", "sing"}, {"conflated", "conflat"}, {"troubled", "troubl"}, {"sized", "size"}, {"hopping", "hop"}, {"tanned", "tan"}, {"falling", "fall"}, {"hissing", "hiss"}, {"fizzed", "fizz"}, {"failing", "fail"}, {"filing", "file"}, {"happy", "happi"}, {"sky", "sky"}, {"relational", "relat"}, {"conditional", "condit"}, {"rational", "ration"}, {"valenci", "valenc"}, {"hesitanci", "hesit"}, {"digitizer", "digit"}, {"conformabli", "conform"}, {"radicalli", "radic"}, {"differentli", "differ"}, {"vileli", "vile"}, {"analogousli", "analog"}, {"vietnamization", "vietnam"}, {"predication", "predic"}, {"operator", "oper"}, {"feudalism", "feudal"}, {"decisiveness", "decis"}, {"hopefulness", "hope"}, {"callousness", "callous"}, {"formaliti", "formal"}, {"sensitiviti", "sensit"}, {"sensibiliti", "sensibl"}, {"triplicate", "triplic"}, {"formative", "form"}, {"formalize", "formal"}, {"electriciti", "electr"}, {"electrical", "electr"}, {"hopeful", "hope"}, {"goodness", "good"}, {"revival", "reviv"}, {"allowance", "allow"}, {"inference", "infer"}, {"airliner", "airlin"}, {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"}, {"defensible", "defens"}, {"irritant", "irrit"}, {"replacement", "replac"}, {"adjustment", "adjust"}, {"dependent", "depend"}, {"adoption", "adopt"}, {"homologou", "homolog"}, {"communism", "commun"}, {"activate", "activ"}, {"angulariti", "angular"}, {"homologous", "homolog"}, {"effective", "effect"}, {"bowdlerize", "bowdler"}, {"probate", "probat"}, {"rate", "rate"}, {"cease", "ceas"}, {"controll", "control"}, {"roll", "roll"}, {"generalizations", "gener"}, {"featuring", "featur"}, {"agreement", "agreement"}, {"as", "a"}, {"is", "i"}, {"was", "wa"}, {"the", "the"}, {"running", "run"}, {"friends", "friend"}, {"furry", "furri"}, {"portraits", "portrait"}, {"intimate", "intim"}};

TEST_CASE("porter stemmer matches reference vectors") {
  for (const auto &[word, stem] : kPorterVectors) {
    CAPTURE(word);
    CHECK(PorterStem(word) == stem);
  }
  CHECK(PorterStem("").empty());
  CHECK(PorterStem("a") == "a");
}

TEST_CASE("preprocess") {
  PreprocessConfig all = PreprocessConfig::Oracle();
  CHECK(PreprocessTokens(Words{"The", "cats", "ran"}, all) == Words{"cat", "ran"});
  CHECK(PreprocessTokens(Words{}, all).empty());
  PreprocessConfig off;
  off.lowercase = false;
  Words raw = {"The", "Cats", ",", "ran", "."};
  CHECK(PreprocessTokens(raw, off) == raw);
  CHECK(PreprocessTokens(Words{"Hello", ",", "world", "."}, all) == Words{"hello", "world"});
  PreprocessConfig eval = PreprocessConfig::Evaluation();
  CHECK(PreprocessTokens(Words{"The", "Cats"}, eval) == Words{"the", "cat"});
}

TEST_CASE("rouge-n worked examples") {
  Words ab = {"a", "b", "c", "d"};
  RougeScore same = RougeN(ab, ab, 1);
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);
  RougeScore half = RougeN(ab, Words{"a", "b", "e", "f"}, 1);
  CHECK(half.precision == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.recall == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.f1 == doctest::Approx(0.5).epsilon(1e-12));
  RougeScore clip = RougeN(Words{"a", "a"}, Words{"a"}, 1);
  CHECK(clip.precision == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(clip.recall == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(clip.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  RougeScore empty = RougeN(Words{}, ab, 1);
  CHECK(empty.f1 == 0.0);
  CHECK(RougeN(ab, Words{}, 2).f1 == 0.0);
}

TEST_CASE("rouge-n clips against the best reference and sums totals") {
  std::vector<TokenList> refs = {{"a", "a", "b"}, {"a", "c"}};
  RougeScore s = RougeN(Words{"a", "a", "a", "c"}, refs, 1);
  // a: min(3, max(2, 1)) = 2, c: min(1, 1) = 1
  CHECK(s.precision == doctest::Approx(3.0 / 4.0));
  CHECK(s.recall == doctest::Approx(3.0 / 5.0));
}

TEST_CASE("rouge-l worked examples") {
  Words a = {"a", "b", "c", "d"};
  RougeScore same = RougeL(a, a);
  CHECK(same.f1 == 1.0);
  CHECK(LcsLength(a, Words{"a", "c", "b", "d"}) == 3);
  RougeScore swapped = RougeL(a, Words{"a", "c", "b", "d"});
  CHECK(swapped.precision == doctest::Approx(0.75));
  CHECK(swapped.recall == doctest::Approx(0.75));
  CHECK(swapped.f1 == doctest::Approx(0.75));
  RougeScore disjoint = RougeL(a, Words{"x", "y"});
  CHECK(disjoint.precision == 0.0);
  CHECK(disjoint.recall == 0.0);
  CHECK(disjoint.f1 == 0.0);
}

TEST_CASE("approximate oracle score") {
  PreprocessConfig cfg = PreprocessConfig::Oracle();
  Words ref = {"dogs", "chase", "cats"};
  CHECK(ApproxOracleScore(ref, ref, cfg) == doctest::Approx(1.0));
  CHECK(ApproxOracleScore(Words{"birds", "sing"}, ref, cfg) == 0.0);
  PreprocessConfig plain;
  CHECK(ApproxOracleScore(Words{"a", "b", "c"}, Words{"a", "b", "d"}, plain) ==
        doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  ApproxScorer scorer(Words{"a", "b", "d"}, plain);
  CHECK(scorer.ScoreRaw(Words{"a", "b", "c"}) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("property: rouge agrees with brute-force counting") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Words cand = testing::RandomWords(rng, testing::Uniform(rng, 0, 12), 5);
    Words ref = testing::RandomWords(rng, testing::Uniform(rng, 0, 12), 5);
    for (int n = 1; n <= 2; ++n) {
      testing::BruteCounts c = testing::BruteNgram(cand, {ref}, n);
      RougeScore s = RougeN(cand, ref, n);
      double p = c.candidate > 0 && c.reference > 0 ? c.matches / c.candidate : 0.0;
      double r = c.candidate > 0 && c.reference > 0 ? c.matches / c.reference : 0.0;
      CHECK(std::abs(s.precision - p) <= 1e-9);
      CHECK(std::abs(s.recall - r) <= 1e-9);
      CHECK(std::abs(s.f1 - testing::F1(p, r)) <= 1e-9);
    }
    CHECK(LcsLength(cand, ref) == testing::BruteLcs(cand, ref));
  }
}

TEST_CASE("property: scores are bounded, symmetric in relabeling, recall grows with candidate") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    Words cand = testing::RandomWords(rng, testing::Uniform(rng, 1, 10), 6);
    Words ref = testing::RandomWords(rng, testing::Uniform(rng, 1, 10), 6);
    RougeScore s1 = RougeN(cand, ref, 1);
    CHECK(s1.f1 >= 0.0);
    CHECK(s1.f1 <= 1.0);
    CHECK(RougeN(ref, ref, 2).f1 == doctest::Approx(ref.size() > 1 ? 1.0 : 0.0));

    Words extended = cand;
    extended.push_back("w" + std::to_string(testing::Uniform(rng, 0, 5)));
    CHECK(RougeN(extended, ref, 1).recall >= s1.recall);
    CHECK(RougeL(extended, ref).recall >= RougeL(cand, ref).recall);

    auto relabel = [](Words w) {
      for (auto &t : w) t = "x" + t;
      return w;
    };
    CHECK(RougeN(relabel(cand), relabel(ref), 2).f1 == RougeN(cand, ref, 2).f1);
    CHECK(RougeL(relabel(cand), relabel(ref)).f1 == RougeL(cand, ref).f1);
  }
}

}  // namespace
}  // namespace compsum
