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

#include "compsum/summarize.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace compsum {
namespace {

std::string Lower(const std::string &s) {
  std::string out = s;
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsInside(const std::vector<Span> &spans, const Span &s) {
  return std::any_of(spans.begin(), spans.end(), [&](const Span &d) { return d.Contains(s); });
}

}  // namespace

void SummarizeConfig::Validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must be in [0, 1]");
}

std::string_view CauseName(DeletionCause cause) {
  return cause == DeletionCause::kDedup ? "DEDUP" : "MODEL";
}

std::vector<Span> SummarySentence::DeletedSpans() const {
  std::vector<Span> out;
  out.reserve(deletions.size());
  for (const AppliedDeletion &d : deletions) out.push_back(d.option.span);
  return out;
}

TokenList Summary::Tokens() const {
  TokenList out;
  for (const SummarySentence &s : sentences) out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  return out;
}

std::string Summary::Text() const {
  std::string out;
  for (const std::string &t : Tokens()) {
    if (!out.empty()) out.push_back(' ');
    out.append(t);
  }
  return out;
}

int Summary::tokens_after() const {
  int n = 0;
  for (const SummarySentence &s : sentences) n += static_cast<int>(s.tokens.size());
  return n;
}

bool ApplyThreshold(double p_del, double tau) {
  if (!(p_del >= 0.0 && p_del <= 1.0) || !(tau >= 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("threshold arguments must lie in [0, 1]");
  }
  return p_del > 1.0 - tau;
}

void RenderSummary(const Document &doc, Summary *summary) {
  for (SummarySentence &s : summary->sentences) {
    s.tokens = SurvivingTokens(doc.sentences.at(s.index), s.DeletedSpans());
  }
}

Summary DedupSummary(Summary summary, const Document &doc) {
  // Surviving unigram counts over the whole summary.
  std::unordered_map<std::string, int> counts;
  std::vector<std::vector<bool>> masks;
  std::vector<std::vector<std::string>> lowered;
  for (const SummarySentence &s : summary.sentences) {
    const SentenceTree &tree = doc.sentences.at(s.index);
    masks.push_back(DeletionMask(tree.size(), s.DeletedSpans()));
    std::vector<std::string> low;
    for (const Token &t : tree.tokens) low.push_back(Lower(t.text));
    for (int i = 0; i < tree.size(); ++i) {
      if (!masks.back()[i] && !IsPunctuation(low[i])) ++counts[low[i]];
    }
    lowered.push_back(std::move(low));
  }

  for (std::size_t si = 0; si < summary.sentences.size(); ++si) {
    SummarySentence &s = summary.sentences[si];
    std::vector<bool> &mask = masks[si];
    for (const CompressionOption &option : s.options) {
      std::vector<Span> deleted = s.DeletedSpans();
      if (IsInside(deleted, option.span)) continue;
      std::unordered_map<std::string, int> inside;
      for (int i = option.span.start; i < option.span.end; ++i) {
        if (!mask[i] && !IsPunctuation(lowered[si][i])) ++inside[lowered[si][i]];
      }
      if (inside.empty()) continue;
      bool covered = std::all_of(inside.begin(), inside.end(), [&](const auto &kv) {
        return counts[kv.first] > kv.second;
      });
      if (!covered) continue;
      for (const auto &[w, c] : inside) counts[w] -= c;
      for (int i = option.span.start; i < option.span.end; ++i) mask[i] = true;
      s.deletions.push_back({option, DeletionCause::kDedup});
    }
  }
  RenderSummary(doc, &summary);
  return summary;
}

Summary Summarize(const Model &model, const Document &doc, const SummarizeConfig &config) {
  config.Validate();
  DocumentContext context(doc, model.train_config.max_sents);
  const int k = std::min(config.k, context.num_candidates());
  std::vector<int> picks = DecodeGreedy(model, context, k);

  Summary summary;
  summary.doc_id = doc.id;
  summary.selected = picks;
  for (int t = 0; t < k; ++t) {
    const int index = picks[t];
    const SentenceTree &tree = doc.sentences[index];
    DecoderState state = context.State(std::vector<int>(picks.begin(), picks.begin() + t), k);
    SummarySentence s;
    s.index = index;
    s.options = ExtractOptions(tree, config.rules);
    for (const CompressionOption &option : s.options) {
      double p = ClassifyOption(model, context.Option(index, option, state));
      s.p_del.push_back(p);
      if (ApplyThreshold(p, config.tau)) s.deletions.push_back({option, DeletionCause::kModel});
    }
    summary.tokens_before += tree.size();
    summary.sentences.push_back(std::move(s));
  }
  std::sort(summary.sentences.begin(), summary.sentences.end(),
            [](const SummarySentence &a, const SummarySentence &b) { return a.index < b.index; });
  RenderSummary(doc, &summary);
  if (config.dedup) summary = DedupSummary(std::move(summary), doc);
  return summary;
}

Summary ExtractOnly(const Model &model, const Document &doc, int k) {
  DocumentContext context(doc, model.train_config.max_sents);
  k = std::min(k, context.num_candidates());
  Summary summary;
  summary.doc_id = doc.id;
  summary.selected = DecodeGreedy(model, context, k);
  std::vector<int> ordered = summary.selected;
  std::sort(ordered.begin(), ordered.end());
  for (int index : ordered) {
    SummarySentence s;
    s.index = index;
    summary.tokens_before += doc.sentences[index].size();
    summary.sentences.push_back(std::move(s));
  }
  RenderSummary(doc, &summary);
  return summary;
}

}  // namespace compsum
