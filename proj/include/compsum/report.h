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

#ifndef COMPSUM_REPORT_H_
#define COMPSUM_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compsum/oracle.h"
#include "compsum/summarize.h"

namespace compsum {

// One node type of the compression statistics table.
struct NodeTypeStats {
  std::string node_type;
  double mean_length = 0.0;  // Len
  double share = 0.0;        // % of comps, in [0, 1]
  double oracle_del_rate = 0.0;   // Comp Acc, in [0, 1]
  std::optional<double> dedup_share;  // Dedup, present when summaries given
  std::int64_t options = 0;
  std::int64_t applied = 0;
};

struct StatsReport {
  std::vector<NodeTypeStats> rows;  // by share, descending
  std::int64_t total_options = 0;

  // Columns: Node Type, Len, % of comps, Comp Acc, Dedup.
  std::string ToCsv() const;
  std::string ToTable() const;
};

StatsReport MakeStatsReport(std::span<const LabeledOption> labeled,
                            std::span<const Summary> summaries = {});

}  // namespace compsum

#endif  // COMPSUM_REPORT_H_
