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

// Shared fixtures and brute-force reference computations for the tests.

#ifndef COMPSUM_TESTS_SUPPORT_TEST_SUPPORT_H_
#define COMPSUM_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "compsum/document.h"
#include "compsum/rules.h"
#include "compsum/treebank.h"

namespace compsum::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(COMPSUM_TEST_DATA_DIR) + "/" + name;
}

// Flat tree "(S (NN w0) (NN w1) ...)" over the given words.
inline SentenceTree FlatSentence(const std::vector<std::string> &words) {
  std::string text = "(S";
  for (const std::string &w : words) text += " (NN " + EscapeToken(w) + ")";
  text += ")";
  return ParsePtb(text);
}

inline Document MakeDocument(const std::string &id,
                             const std::vector<std::vector<std::string>> &sentences,
                             const std::vector<std::vector<std::string>> &reference) {
  Document doc;
  doc.id = id;
  for (const auto &s : sentences) doc.sentences.push_back(FlatSentence(s));
  doc.reference = reference;
  return doc;
}

inline int Uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<std::string> RandomWords(std::mt19937_64 &rng, int length, int vocab) {
  std::vector<std::string> out;
  for (int i = 0; i < length; ++i) out.push_back("w" + std::to_string(Uniform(rng, 0, vocab - 1)));
  return out;
}

// Document of n flat sentences over a small vocabulary, with a reference
// drawn from the same vocabulary.
inline Document RandomDocument(std::mt19937_64 &rng, int n, int vocab = 12,
                               const std::string &id = "rand") {
  std::vector<std::vector<std::string>> sents;
  for (int i = 0; i < n; ++i) sents.push_back(RandomWords(rng, Uniform(rng, 3, 9), vocab));
  std::vector<std::vector<std::string>> ref = {RandomWords(rng, Uniform(rng, 6, 14), vocab)};
  return MakeDocument(id, sents, ref);
}

// Clipped n-gram matches by direct position comparison.
struct BruteCounts {
  double matches = 0;
  double candidate = 0;
  double reference = 0;
};

inline bool SameGram(const std::vector<std::string> &a, std::size_t i,
                     const std::vector<std::string> &b, std::size_t j, int n) {
  for (int t = 0; t < n; ++t) {
    if (a[i + t] != b[j + t]) return false;
  }
  return true;
}

inline std::size_t GramCount(const std::vector<std::string> &seq, int n) {
  return seq.size() >= static_cast<std::size_t>(n) ? seq.size() - n + 1 : 0;
}

inline BruteCounts BruteNgram(const std::vector<std::string> &cand,
                              const std::vector<std::vector<std::string>> &refs, int n) {
  BruteCounts out;
  out.candidate = static_cast<double>(GramCount(cand, n));
  for (const auto &r : refs) out.reference += static_cast<double>(GramCount(r, n));
  for (std::size_t i = 0; i < GramCount(cand, n); ++i) {
    bool first = true;
    for (std::size_t p = 0; p < i; ++p) {
      if (SameGram(cand, p, cand, i, n)) first = false;
    }
    if (!first) continue;
    int in_cand = 0;
    for (std::size_t p = 0; p < GramCount(cand, n); ++p) in_cand += SameGram(cand, p, cand, i, n);
    int best_ref = 0;
    for (const auto &r : refs) {
      int c = 0;
      for (std::size_t p = 0; p < GramCount(r, n); ++p) c += SameGram(r, p, cand, i, n);
      best_ref = std::max(best_ref, c);
    }
    out.matches += std::min(in_cand, best_ref);
  }
  return out;
}

inline bool IsSubsequence(const std::vector<std::string> &sub, const std::vector<std::string> &seq) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < seq.size() && j < sub.size(); ++i) {
    if (seq[i] == sub[j]) ++j;
  }
  return j == sub.size();
}

// Longest common subsequence by enumerating every subsequence of `a`.
inline std::size_t BruteLcs(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::size_t best = 0;
  const std::uint32_t limit = 1u << a.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (sub.size() > best && IsSubsequence(sub, b)) best = sub.size();
  }
  return best;
}

inline double F1(double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; }

// Random parse trees from a small grammar that exercises every rule.
class TreeGrammar {
 public:
  explicit TreeGrammar(std::uint64_t seed) : rng_(seed) {}

  std::string Sentence() {
    std::string s = "(S ";
    if (Chance(0.25)) s += Sbar(true) + " (, ,) ";
    if (Chance(0.2)) s += Pp(true) + " (, ,) ";
    s += Np(2);
    if (Chance(0.2)) s += " (ADVP (RB " + Pick(adverbs_) + "))";
    s += " " + Vp(2);
    if (Chance(0.7)) s += " (. .)";
    return s + ")";
  }

 private:
  bool Chance(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }
  const std::string &Pick(const std::vector<std::string> &v) {
    return v[Uniform(rng_, 0, static_cast<int>(v.size()) - 1)];
  }

  std::string BaseNp() {
    std::string s = "(NP";
    if (Chance(0.6)) s += " (DT " + Pick(dets_) + ")";
    if (Chance(0.3)) s += " (JJ " + Pick(adjs_) + ")";
    if (Chance(0.15)) s += " (ADJP (RB very) (JJ " + Pick(adjs_) + "))";
    s += " (NN " + Pick(nouns_) + "))";
    return s;
  }

  std::string Np(int depth) {
    if (depth <= 0) return BaseNp();
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (r < 0.45) return BaseNp();
    if (r < 0.55) return "(NP " + BaseNp() + " (, ,) " + BaseNp() + " (, ,))";
    if (r < 0.65) return "(NP " + BaseNp() + " " + Sbar(false) + ")";
    if (r < 0.75) return "(NP " + BaseNp() + " (VP (VBG " + Pick(gerunds_) + ") " + Np(depth - 1) + "))";
    if (r < 0.85) return "(NP " + BaseNp() + " " + Pp(false, depth - 1) + ")";
    if (r < 0.93) {
      return "(NP " + BaseNp() + " (PRN (-LRB- -LRB-) " + Np(depth - 1) + " (-RRB- -RRB-)))";
    }
    return "(NP " + BaseNp() + " (CC and) " + BaseNp() + ")";
  }

  std::string Pp(bool adjunct, int depth = 1) {
    const std::string &p = adjunct ? Pick(adjunct_preps_) : Pick(preps_);
    return "(PP (IN " + p + ") " + Np(depth) + ")";
  }

  std::string Sbar(bool adverbial) {
    if (adverbial) {
      return "(SBAR (IN " + Pick(subords_) + ") (S " + BaseNp() + " (VP (VBD " + Pick(verbs_) + "))))";
    }
    return "(SBAR (WHNP (WDT which)) (S (VP (VBD " + Pick(verbs_) + ") " + BaseNp() + ")))";
  }

  std::string Vp(int depth) {
    std::string s = "(VP";
    if (Chance(0.2)) s += " (RB " + Pick(adverbs_) + ")";
    s += " (VBD " + Pick(verbs_) + ")";
    if (Chance(0.7)) s += " " + Np(depth - 1);
    if (Chance(0.4)) s += " " + Pp(Chance(0.5), depth - 1);
    if (Chance(0.15)) s += " (SBAR (IN that) (S " + BaseNp() + " (VP (VBD won))))";
    return s + ")";
  }

  std::mt19937_64 rng_;
  std::vector<std::string> dets_ = {"the", "a", "this"};
  std::vector<std::string> adjs_ = {"old", "red", "quiet", "large"};
  std::vector<std::string> nouns_ = {"dog", "city", "report", "man", "market", "river"};
  std::vector<std::string> verbs_ = {"saw", "left", "built", "sold"};
  std::vector<std::string> gerunds_ = {"holding", "waving", "selling"};
  std::vector<std::string> adverbs_ = {"quickly", "also", "often"};
  std::vector<std::string> preps_ = {"with", "of", "for", "to"};
  std::vector<std::string> adjunct_preps_ = {"on", "in", "after", "during"};
  std::vector<std::string> subords_ = {"because", "although", "while"};
};

struct GoldOption {
  int start;
  int end;
  RuleId rule;
};

struct RuleFixture {
  const char *name;
  const char *ptb;
  std::vector<GoldOption> gold;
};

// Hand-annotated trees with every expected option, sorted by start then
// longest first.
inline const std::vector<RuleFixture> &RuleFixtures() {
  using R = RuleId;
  static const std::vector<RuleFixture> fixtures = {
      {"portrait collection",
       "(NP (NP (DT a) (NN collection)) (PP (IN of) (NP (NP (JJ intimate) (NNS portraits)) "
       "(VP (VBG featuring) (NP (ADJP (JJ well-known)) (NNS artists)) (PP (IN with) "
       "(NP (PRP$ their) (JJ furry) (NNS friends)))))))",
       {{3, 4, R::kAdjpInNp}, {5, 12, R::kGerundiveVpInNp}, {6, 7, R::kAdjpInNp},
        {8, 12, R::kPpConfig}, {10, 11, R::kAdjpInNp}}},
      {"appositive under clause",
       "(S (NP (NN John)) (, ,) (NP (DT a) (NN doctor)) (, ,) (VP (VBD spoke)))",
       {{1, 5, R::kAppositiveNp}}},
      {"appositive inside np",
       "(S (NP (NP (NNP Smith)) (, ,) (NP (DT the) (NN mayor)) (, ,)) (VP (VBD resigned)) (. .))",
       {{1, 5, R::kAppositiveNp}}},
      {"restrictive relative",
       "(S (NP (NP (DT the) (NN man)) (SBAR (WHNP (WP who)) (S (VP (VBD called))))) "
       "(VP (VBD left)) (. .))",
       {{2, 4, R::kRelativeClause}}},
      {"relative with commas",
       "(S (NP (NP (NNP Paris)) (, ,) (SBAR (WHNP (WDT which)) (S (VP (VBZ is) (ADJP (JJ old))))) "
       "(, ,)) (VP (VBZ shines)) (. .))",
       {{1, 5, R::kRelativeClause}}},
      {"adverbial clause",
       "(S (SBAR (IN because) (S (NP (PRP it)) (VP (VBD rained)))) (, ,) (NP (PRP we)) "
       "(VP (VBD stayed)) (. .))",
       {{0, 4, R::kAdverbialClause}}},
      {"advp and complement clause",
       "(S (NP (PRP He)) (ADVP (RB also)) (VP (VBD said) (SBAR (IN that) (S (NP (PRP she)) "
       "(VP (VBD won))))) (. .))",
       {{1, 2, R::kAdvp}}},
      {"adverb in verb phrase",
       "(S (NP (PRP She)) (VP (RB quickly) (VBD left) (NP (DT the) (NN room))) (. .))",
       {{1, 2, R::kAdvp}}},
      {"temporal pp",
       "(S (NP (PRP They)) (VP (VBD met) (PP (IN on) (NP (NNP Monday)))) (. .))",
       {{2, 4, R::kPpConfig}}},
      {"argument pp",
       "(S (NP (PRP He)) (VP (VBD gave) (PP (TO to) (NP (PRP her))) (NP (DT a) (NN book))) (. .))",
       {}},
      {"fronted pp",
       "(S (PP (IN In) (NP (NNP May))) (, ,) (NP (PRP we)) (VP (VBD sold) (NP (DT the) "
       "(NN house))) (. .))",
       {{0, 3, R::kPpConfig}}},
      {"prn node",
       "(S (NP (NP (DT the) (NN company)) (PRN (-LRB- -LRB-) (NP (NNP ACME)) (-RRB- -RRB-))) "
       "(VP (VBD grew)) (. .))",
       {{2, 5, R::kParenthetical}}},
      {"bare brackets",
       "(S (NP (NNP Bob)) (-LRB- -LRB-) (NP (CD 42)) (-RRB- -RRB-) (VP (VBD won)) (. .))",
       {{1, 4, R::kParenthetical}}},
      {"gerundive",
       "(S (NP (NP (NNS fans)) (VP (VBG waving) (NP (NNS flags)))) (VP (VBD cheered)) (. .))",
       {{1, 3, R::kGerundiveVpInNp}}},
      {"adjective phrase",
       "(S (NP (DT a) (ADJP (RB very) (JJ tall)) (NN tree)) (VP (VBD fell)) (. .))",
       {{1, 3, R::kAdjpInNp}}},
      {"adjective head",
       "(S (NP (DT The) (JJ poor)) (VP (VBD suffered)) (. .))",
       {}},
      {"nested relative and pp",
       "(S (NP (NP (NNS people)) (SBAR (WHNP (WP who)) (S (VP (VBD arrived) (PP (IN on) "
       "(NP (NNP Friday))))))) (VP (VBD slept)) (. .))",
       {{1, 5, R::kRelativeClause}, {3, 5, R::kPpConfig}}},
  };
  return fixtures;
}

}  // namespace compsum::testing

#endif  // COMPSUM_TESTS_SUPPORT_TEST_SUPPORT_H_
