// Copyright 2026 The Accucheck Authors.
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

#ifndef ACCUCHECK_SCORER_H_
#define ACCUCHECK_SCORER_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "accucheck/annotation.h"
#include "accucheck/rational.h"

namespace accucheck {

struct MatchOptions {
  enum class Mode { kOverlap, kExact };
  // kOverlap: a submitted span detects a gold mistake when they share at
  // least one token. kExact: spans must be identical.
  Mode mode = Mode::kOverlap;
  // Require equal categories for the Overall pairing as well.
  bool category_strict = false;
};

// One-to-one pairing of gold and submitted mistakes. Indices refer to the
// lists passed to MatchMistakes.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (gold, submitted)
  std::vector<std::size_t> unmatched_gold;
  std::vector<std::size_t> unmatched_submitted;
};

class ScoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per document, pairs eligible (overlapping, same-doc) mistakes so that the
// number of pairs is maximal; among maximum pairings the total overlap is
// maximal. When `texts` is given, mistakes naming unknown documents raise
// ScoreError.
Matching MatchMistakes(const MistakeList &gold, const MistakeList &submitted,
                       const MatchOptions &options = {}, const TextIndex *texts = nullptr);

// Counts behind one report row; ratios are derived on demand.
struct ScoreRow {
  std::int64_t gold_mistakes = 0;
  std::int64_t submitted_mistakes = 0;
  std::int64_t matched_mistakes = 0;
  std::int64_t gold_tokens = 0;
  std::int64_t submitted_tokens = 0;
  std::int64_t common_tokens = 0;

  Ratio mistake_recall() const { return MakeRatio(matched_mistakes, gold_mistakes); }
  Ratio mistake_precision() const { return MakeRatio(matched_mistakes, submitted_mistakes); }
  Ratio token_recall() const { return MakeRatio(common_tokens, gold_tokens); }
  Ratio token_precision() const { return MakeRatio(common_tokens, submitted_tokens); }

  ScoreRow &operator+=(const ScoreRow &o);
};

struct ScoreReport {
  // Indexed by MistakeCategory.
  std::array<ScoreRow, 6> by_category{};
  ScoreRow overall;

  const ScoreRow &row(MistakeCategory c) const { return by_category[static_cast<int>(c)]; }
  ScoreReport &operator+=(const ScoreReport &o);
};

// Scores a submission against the gold list. The gold list must validate
// against `texts`; the submission is normalized (same-category overlaps
// merged) and validated. Validation failures raise ScoreError.
ScoreReport ComputeScores(const MistakeList &gold, const MistakeList &submitted,
                          const TextIndex &texts, const MatchOptions &options = {});

// Gold mistakes matched by none of the submissions.
MistakeList BlindSpot(const MistakeList &gold, std::span<const MistakeList> submissions,
                      const MatchOptions &options = {});

enum class ReportFormat { kTable, kCsv, kJson };

// Rows in fixed order (Name, Number, Word, Context, Not checkable, Other,
// Overall), three decimals, "-" for undefined ratios.
std::string RenderReport(const ScoreReport &report, ReportFormat format = ReportFormat::kTable);

}  // namespace accucheck

#endif  // ACCUCHECK_SCORER_H_
