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

#ifndef ACCUCHECK_ANALYSIS_H_
#define ACCUCHECK_ANALYSIS_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "accucheck/annotation.h"
#include "accucheck/game_data.h"
#include "accucheck/rational.h"
#include "accucheck/scorer.h"

namespace accucheck {

// Word lists for classifying the first token of a mistake. Built from game
// files so the classes work for any corpus, not only the shipped one.
class SurfaceLexicon {
 public:
  SurfaceLexicon();  // franchise names only
  explicit SurfaceLexicon(const std::map<std::string, GameData> &games);

  // NUM-DIGIT, NUM-WORD, DAY-WEEK, TEAM, PLAYER, else the lower-cased token.
  std::string Classify(std::string_view token) const;

 private:
  std::set<std::string> team_words_;
  std::set<std::string> player_words_;
};

struct FrequencyRow {
  std::string surface;
  MistakeCategory category;
  int count = 0;
};

// One row per (surface class, category), most frequent first. Ties are
// ordered by surface class, then category.
std::vector<FrequencyRow> FrequencyTable(const MistakeList &gold, const TextIndex &texts,
                                         const SurfaceLexicon &lexicon);

struct ErrorProfile {
  std::string system_id;
  int text_count = 0;
  std::array<int, std::size(kAllCategories)> counts{};

  Rational Mean(MistakeCategory c) const;
};

// Per-category mistakes per text for every system present in `texts`.
// Throws std::invalid_argument when a text has no system id or a mistake
// refers to an unknown text.
std::vector<ErrorProfile> SystemProfile(const MistakeList &gold, const TextIndex &texts);

struct PositionHistogram {
  std::array<long, 10> bins{};
  std::optional<MistakeCategory> filter;

  long total() const;
  int ArgMax() const;  // lowest index among the largest bins
};

// Bin = floor(10 * start / token_count), clamped to 9.
PositionHistogram BuildPositionHistogram(const MistakeList &gold, const TextIndex &texts,
                                         std::optional<MistakeCategory> filter = std::nullopt);

std::string RenderFrequencyTable(const std::vector<FrequencyRow> &rows, ReportFormat format,
                                 int min_count = 0);
std::string RenderProfiles(const std::vector<ErrorProfile> &profiles, ReportFormat format);
std::string RenderHistogram(const PositionHistogram &h, ReportFormat format);

// Category totals over the whole list, in kAllCategories order.
std::array<int, std::size(kAllCategories)> CategoryTotals(const MistakeList &gold);

}  // namespace accucheck

#endif  // ACCUCHECK_ANALYSIS_H_
