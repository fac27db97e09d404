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

#include "compsum/rouge.h"

#include <algorithm>
#include <cctype>
#include <utility>

namespace compsum {
namespace {

// Porter stemmer working buffer. Conditions follow the 1980 algorithm; no
// short-word guard and no later departures (e.g. "bli" -> "ble").
class PorterWord {
 public:
  explicit PorterWord(std::string_view w) : b_(w) {}

  std::string Run() {
    Step1a();
    Step1b();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5();
    return b_;
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && IsConsonant(len - 1);
  }

  // consonant-vowel-consonant ending, last consonant not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) || !IsConsonant(len - 1)) {
      return false;
    }
    char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view s) const {
    return b_.size() >= s.size() &&
           std::string_view(b_).substr(b_.size() - s.size()) == s;
  }

  std::size_t StemLength(std::string_view suffix) const {
    return b_.size() - suffix.size();
  }

  void Replace(std::string_view suffix, std::string_view with) {
    b_.resize(StemLength(suffix));
    b_.append(with);
  }

  // First matching suffix wins; it is replaced only when the stem measure
  // exceeds `min_measure`.
  void ReplaceFirst(
      std::initializer_list<std::pair<std::string_view, std::string_view>> rules,
      int min_measure) {
    for (const auto &[suffix, with] : rules) {
      if (EndsWith(suffix)) {
        if (Measure(StemLength(suffix)) > min_measure) Replace(suffix, with);
        return;
      }
    }
  }

  void Step1a() {
    if (EndsWith("sses")) {
      Replace("sses", "ss");
    } else if (EndsWith("ies")) {
      Replace("ies", "i");
    } else if (EndsWith("ss")) {
    } else if (EndsWith("s")) {
      Replace("s", "");
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(StemLength("eed")) > 0) Replace("eed", "ee");
      return;
    }
    bool stripped = false;
    for (std::string_view suffix : {"ed", "ing"}) {
      if (EndsWith(suffix) && HasVowel(StemLength(suffix))) {
        Replace(suffix, "");
        stripped = true;
        break;
      }
    }
    if (!stripped) return;
    if (EndsWith("at") || EndsWith("bl") || EndsWith("iz")) {
      b_.push_back('e');
    } else if (EndsDoubleConsonant(b_.size())) {
      char c = b_.back();
      if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
    } else if (Measure(b_.size()) == 1 && EndsCvc(b_.size())) {
      b_.push_back('e');
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(StemLength("y"))) Replace("y", "i");
  }

  void Step2() {
    ReplaceFirst({{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                  {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                  {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                  {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                  {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                  {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                  {"iviti", "ive"},   {"biliti", "ble"}},
                 0);
  }

  void Step3() {
    ReplaceFirst({{"icate", "ic"},
                  {"ative", ""},
                  {"alize", "al"},
                  {"iciti", "ic"},
                  {"ical", "ic"},
                  {"ful", ""},
                  {"ness", ""}},
                 0);
  }

  void Step4() {
    static constexpr std::string_view kSuffixes[] = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant",
        "ement", "ment", "ent", "ion", "ou", "ism", "ate",  "iti",
        "ous", "ive",  "ize"};
    // Longest match first among suffixes sharing an ending.
    std::string_view match;
    for (std::string_view s : kSuffixes) {
      if (EndsWith(s) && s.size() > match.size()) match = s;
    }
    if (match.empty()) return;
    std::size_t stem = StemLength(match);
    if (Measure(stem) <= 1) return;
    if (match == "ion" && !(stem > 0 && (b_[stem - 1] == 's' || b_[stem - 1] == 't'))) {
      return;
    }
    b_.resize(stem);
  }

  void Step5() {
    if (EndsWith("e")) {
      std::size_t stem = StemLength("e");
      int m = Measure(stem);
      if (m > 1 || (m == 1 && !EndsCvc(stem))) b_.pop_back();
    }
    if (Measure(b_.size()) > 1 && EndsDoubleConsonant(b_.size()) &&
        b_.back() == 'l') {
      b_.pop_back();
    }
  }

  std::string b_;
};

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

template <typename Key>
using CountMap = std::map<Key, int, std::less<>>;

using Bigram = std::pair<std::string_view, std::string_view>;

CountMap<std::vector<std::string_view>> CountNgrams(
    std::span<const std::string> tokens, int n) {
  CountMap<std::vector<std::string_view>> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

double MeanF1(double m1, double c1, double r1, double m2, double c2, double r2) {
  return 0.5 * (RougeScore::FromCounts(m1, c1, r1).f1 +
                RougeScore::FromCounts(m2, c2, r2).f1);
}

}  // namespace

RougeScore RougeScore::FromCounts(double matches, double candidate_total,
                                  double reference_total) {
  RougeScore s;
  if (candidate_total <= 0 || reference_total <= 0) return s;
  s.precision = matches / candidate_total;
  s.recall = matches / reference_total;
  if (s.precision + s.recall > 0) {
    s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

const std::set<std::string> &DefaultStopwords() {
  static const std::set<std::string> kStopwords = {
      "a",       "about",  "above",   "after",   "again",  "against", "all",
      "am",      "an",     "and",     "any",     "are",    "as",      "at",
      "be",      "because", "been",   "before",  "being",  "below",   "between",
      "both",    "but",    "by",      "can",     "could",  "did",     "do",
      "does",    "doing",  "down",    "during",  "each",   "few",     "for",
      "from",    "further", "had",    "has",     "have",   "having",  "he",
      "her",     "here",   "hers",    "herself", "him",    "himself", "his",
      "how",     "i",      "if",      "in",      "into",   "is",      "it",
      "its",     "itself", "just",    "me",      "more",   "most",    "my",
      "myself",  "no",     "nor",     "not",     "now",    "of",      "off",
      "on",      "once",   "only",    "or",      "other",  "our",     "ours",
      "ourselves", "out",  "over",    "own",     "s",      "same",    "she",
      "should",  "so",     "some",    "such",    "than",   "that",    "the",
      "their",   "theirs", "them",    "themselves", "then", "there",  "these",
      "they",    "this",   "those",   "through", "to",     "too",     "under",
      "until",   "up",     "very",    "was",     "we",     "were",    "what",
      "when",    "where",  "which",   "while",   "who",    "whom",    "why",
      "will",    "with",   "would",   "you",     "your",   "yours",   "yourself",
      "yourselves", "'s",  "n't",     "'re",     "'ve",    "'ll",     "'d",
      "'m",      "said",   "says",    "also",    "may",    "might",   "must"};
  return kStopwords;
}

PreprocessConfig PreprocessConfig::Oracle() {
  PreprocessConfig c;
  c.remove_stopwords = true;
  c.stem = true;
  return c;
}

PreprocessConfig PreprocessConfig::Evaluation() {
  PreprocessConfig c;
  c.stem = true;
  return c;
}

std::string PorterStem(std::string_view word) {
  return PorterWord(word).Run();
}

bool IsPunctuation(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  });
}

TokenList PreprocessTokens(std::span<const std::string> tokens,
                           const PreprocessConfig &config) {
  TokenList out;
  out.reserve(tokens.size());
  for (const std::string &raw : tokens) {
    std::string t = config.lowercase ? Lowercase(raw) : raw;
    if (config.remove_stopwords &&
        (IsPunctuation(t) || config.stopword_list.contains(t))) {
      continue;
    }
    if (config.stem) t = PorterStem(t);
    out.push_back(std::move(t));
  }
  return out;
}

RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const TokenList> references, int n) {
  auto cand = CountNgrams(candidate, n);
  std::vector<CountMap<std::vector<std::string_view>>> refs;
  double reference_total = 0;
  for (const TokenList &r : references) {
    refs.push_back(CountNgrams(r, n));
    reference_total += std::max<double>(0, static_cast<double>(r.size()) - n + 1);
  }
  double candidate_total = std::max<double>(0, static_cast<double>(candidate.size()) - n + 1);
  double matches = 0;
  for (const auto &[gram, count] : cand) {
    int best = 0;
    for (const auto &r : refs) {
      auto it = r.find(gram);
      if (it != r.end()) best = std::max(best, it->second);
    }
    matches += std::min(count, best);
  }
  return RougeScore::FromCounts(matches, candidate_total, reference_total);
}

RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::string> reference, int n) {
  std::vector<TokenList> refs{TokenList(reference.begin(), reference.end())};
  return RougeN(candidate, refs, n);
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const std::string> reference) {
  return RougeScore::FromCounts(static_cast<double>(LcsLength(candidate, reference)),
                                static_cast<double>(candidate.size()),
                                static_cast<double>(reference.size()));
}

double ApproxOracleScore(std::span<const std::string> candidate,
                         std::span<const std::string> reference,
                         const PreprocessConfig &config) {
  return ApproxScorer(reference, config).ScoreRaw(candidate);
}

ApproxScorer::ApproxScorer(std::span<const std::string> reference,
                           const PreprocessConfig &config)
    : config_(config) {
  TokenList ref = PreprocessTokens(reference, config_);
  for (const std::string &t : ref) ++unigrams_[t];
  for (std::size_t i = 0; i + 1 < ref.size(); ++i) ++bigrams_[{ref[i], ref[i + 1]}];
  unigram_total_ = static_cast<int>(ref.size());
  bigram_total_ = std::max(0, unigram_total_ - 1);
}

double ApproxScorer::Score(std::span<const std::string> cand) const {
  std::map<std::string_view, int> uni;
  std::map<Bigram, int> bi;
  for (const std::string &t : cand) ++uni[t];
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) ++bi[{cand[i], cand[i + 1]}];
  double m1 = 0, m2 = 0;
  for (const auto &[t, c] : uni) {
    auto it = unigrams_.find(t);
    if (it != unigrams_.end()) m1 += std::min(c, it->second);
  }
  for (const auto &[g, c] : bi) {
    auto it = bigrams_.find({std::string(g.first), std::string(g.second)});
    if (it != bigrams_.end()) m2 += std::min(c, it->second);
  }
  double c1 = static_cast<double>(cand.size());
  double c2 = std::max(0.0, c1 - 1);
  return MeanF1(m1, c1, unigram_total_, m2, c2, bigram_total_);
}

double ApproxScorer::ScoreRaw(std::span<const std::string> candidate) const {
  return Score(PreprocessTokens(candidate, config_));
}

}  // namespace compsum
