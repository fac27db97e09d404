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

#include "compsum/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace compsum {
namespace {

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.0f%%", 100.0 * fraction);
  return buf;
}

std::string OneDecimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

struct Tally {
  std::int64_t options = 0;
  std::int64_t length = 0;
  std::int64_t del = 0;
  std::int64_t applied = 0;
  std::int64_t dedup = 0;
};

}  // namespace

StatsReport MakeStatsReport(std::span<const LabeledOption> labeled,
                            std::span<const Summary> summaries) {
  std::map<std::string, Tally> tallies;
  for (const LabeledOption &o : labeled) {
    Tally &t = tallies[o.option.node_label];
    ++t.options;
    t.length += o.option.span.length();
    if (o.label == CompressionLabel::kDel) ++t.del;
  }
  for (const Summary &s : summaries) {
    for (const SummarySentence &sent : s.sentences) {
      for (const AppliedDeletion &d : sent.deletions) {
        Tally &t = tallies[d.option.node_label];
        ++t.applied;
        if (d.cause == DeletionCause::kDedup) ++t.dedup;
      }
    }
  }

  StatsReport report;
  report.total_options = static_cast<std::int64_t>(labeled.size());
  for (const auto &[label, t] : tallies) {
    NodeTypeStats row;
    row.node_type = label;
    row.options = t.options;
    row.applied = t.applied;
    if (t.options > 0) {
      row.mean_length = static_cast<double>(t.length) / static_cast<double>(t.options);
      row.oracle_del_rate = static_cast<double>(t.del) / static_cast<double>(t.options);
    }
    if (report.total_options > 0) {
      row.share = static_cast<double>(t.options) / static_cast<double>(report.total_options);
    }
    if (!summaries.empty()) {
      row.dedup_share = t.applied > 0 ? static_cast<double>(t.dedup) / static_cast<double>(t.applied)
                                      : 0.0;
    }
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const NodeTypeStats &a, const NodeTypeStats &b) { return a.share > b.share; });
  return report;
}

std::string StatsReport::ToCsv() const {
  std::ostringstream out;
  out << "Node Type,Len,% of comps,Comp Acc,Dedup\n";
  for (const NodeTypeStats &r : rows) {
    out << r.node_type << ',' << OneDecimal(r.mean_length) << ',' << Percent(r.share) << ','
        << Percent(r.oracle_del_rate) << ',' << (r.dedup_share ? Percent(*r.dedup_share) : "-")
        << '\n';
  }
  return out.str();
}

std::string StatsReport::ToTable() const {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-10s %6s %11s %9s %6s\n", "Node Type", "Len", "% of comps",
                "Comp Acc", "Dedup");
  out << line;
  for (const NodeTypeStats &r : rows) {
    std::snprintf(line, sizeof(line), "%-10s %6s %11s %9s %6s\n", r.node_type.c_str(),
                  OneDecimal(r.mean_length).c_str(), Percent(r.share).c_str(),
                  Percent(r.oracle_del_rate).c_str(),
                  r.dedup_share ? Percent(*r.dedup_share).c_str() : "-");
    out << line;
  }
  return out.str();
}

}  // namespace compsum
