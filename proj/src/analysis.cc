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

#include "accucheck/analysis.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "accucheck/gsml.h"
#include "accucheck/numbers.h"
#include "accucheck/teams.h"

namespace accucheck {

namespace {

void AddWords(std::set<std::string> &set, std::string_view phrase) {
  for (const std::string &w : SplitWords(ToLower(phrase))) set.insert(w);
}

// Strips a trailing possessive so "Grizzlies'" and "Gasol's" classify like
// the bare name.
std::string Bare(std::string_view token) {
  std::string w = ToLower(token);
  if (w.ends_with("'s")) w.resize(w.size() - 2);
  else if (w.ends_with("'")) w.pop_back();
  return w;
}

}  // namespace

SurfaceLexicon::SurfaceLexicon() {
  for (const KnownTeam &t : KnownTeams()) {
    AddWords(team_words_, t.city);
    AddWords(team_words_, t.nickname);
  }
  for (std::string_view alias : {"sixers", "blazers", "cavs", "mavs", "wolves", "t-wolves"})
    team_words_.insert(std::string(alias));
}

SurfaceLexicon::SurfaceLexicon(const std::map<std::string, GameData> &games) : SurfaceLexicon() {
  for (const auto &[id, game] : games) {
    for (Side s : {Side::kHome, Side::kVisitor}) {
      AddWords(team_words_, game.Team(s).city);
      AddWords(team_words_, game.Team(s).nickname);
    }
    for (const PlayerLine &p : game.players) AddWords(player_words_, p.name);
  }
}

std::string SurfaceLexicon::Classify(std::string_view token) const {
  if (IsDigits(token)) return "NUM-DIGIT";
  if (SpelledNumber(token)) return "NUM-WORD";
  if (ParseWeekday(token)) return "DAY-WEEK";
  const std::string bare = Bare(token);
  if (team_words_.contains(bare)) return "TEAM";
  if (player_words_.contains(bare)) return "PLAYER";
  return ToLower(token);
}

std::vector<FrequencyRow> FrequencyTable(const MistakeList &gold, const TextIndex &texts,
                                         const SurfaceLexicon &lexicon) {
  std::map<std::pair<std::string, int>, int> counts;
  for (const Mistake &m : gold) {
    auto it = texts.find(m.doc_id);
    if (it == texts.end() || m.start < 0 || m.start >= it->second.size()) {
      throw std::invalid_argument("mistake on unknown text or token: " + m.doc_id);
    }
    ++counts[{lexicon.Classify(it->second.tokens[m.start]), static_cast<int>(m.category)}];
  }
  std::vector<FrequencyRow> rows;
  for (const auto &[key, n] : counts)
    rows.push_back({key.first, static_cast<MistakeCategory>(key.second), n});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FrequencyRow &a, const FrequencyRow &b) { return a.count > b.count; });
  return rows;
}

Rational ErrorProfile::Mean(MistakeCategory c) const {
  return Rational(counts[static_cast<int>(c)], text_count);
}

std::vector<ErrorProfile> SystemProfile(const MistakeList &gold, const TextIndex &texts) {
  std::map<std::string, ErrorProfile> by_system;
  for (const auto &[id, text] : texts) {
    if (text.system_id.empty()) throw std::invalid_argument("text '" + id + "' has no system id");
    ErrorProfile &p = by_system[text.system_id];
    p.system_id = text.system_id;
    ++p.text_count;
  }
  for (const Mistake &m : gold) {
    auto it = texts.find(m.doc_id);
    if (it == texts.end()) throw std::invalid_argument("mistake on unknown text: " + m.doc_id);
    ++by_system[it->second.system_id].counts[static_cast<int>(m.category)];
  }
  std::vector<ErrorProfile> out;
  for (auto &[id, p] : by_system) out.push_back(std::move(p));
  return out;
}

long PositionHistogram::total() const {
  long n = 0;
  for (long b : bins) n += b;
  return n;
}

int PositionHistogram::ArgMax() const {
  return static_cast<int>(std::max_element(bins.begin(), bins.end()) - bins.begin());
}

PositionHistogram BuildPositionHistogram(const MistakeList &gold, const TextIndex &texts,
                                         std::optional<MistakeCategory> filter) {
  PositionHistogram h;
  h.filter = filter;
  for (const Mistake &m : gold) {
    if (filter && m.category != *filter) continue;
    auto it = texts.find(m.doc_id);
    if (it == texts.end() || it->second.size() == 0) {
      throw std::invalid_argument("mistake on unknown text: " + m.doc_id);
    }
    const long bin = std::min<long>(9, 10L * m.start / it->second.size());
    ++h.bins[bin];
  }
  return h;
}

std::array<int, std::size(kAllCategories)> CategoryTotals(const MistakeList &gold) {
  std::array<int, std::size(kAllCategories)> totals{};
  for (const Mistake &m : gold) ++totals[static_cast<int>(m.category)];
  return totals;
}

std::string RenderFrequencyTable(const std::vector<FrequencyRow> &rows, ReportFormat format,
                                 int min_count) {
  std::string out;
  if (format == ReportFormat::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const FrequencyRow &r : rows) {
      if (r.count < min_count) continue;
      j.push_back({{"surface", r.surface}, {"category", CategoryLabel(r.category)}, {"count", r.count}});
    }
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::kCsv) {
    out = "SURFACE,CATEGORY,COUNT\n";
    for (const FrequencyRow &r : rows) {
      if (r.count < min_count) continue;
      out += CsvEscape(r.surface) + "," + std::string(CategoryLabel(r.category)) + "," +
             std::to_string(r.count) + "\n";
    }
    return out;
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %-14s %6s\n", "Surface", "Category", "Count");
  out += line;
  for (const FrequencyRow &r : rows) {
    if (r.count < min_count) continue;
    std::snprintf(line, sizeof line, "%-20s %-14s %6d\n", r.surface.c_str(),
                  std::string(CategoryTitle(r.category)).c_str(), r.count);
    out += line;
  }
  return out;
}

std::string RenderProfiles(const std::vector<ErrorProfile> &profiles, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const ErrorProfile &p : profiles) {
      nlohmann::json row{{"system", p.system_id}, {"texts", p.text_count}};
      for (MistakeCategory c : kAllCategories) row[std::string(CategoryLabel(c))] = p.Mean(c).ToFixed(1);
      j.push_back(row);
    }
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::kCsv) {
    out = "SYSTEM,TEXTS";
    for (MistakeCategory c : kAllCategories) out += "," + std::string(CategoryLabel(c));
    out += "\n";
    for (const ErrorProfile &p : profiles) {
      out += CsvEscape(p.system_id) + "," + std::to_string(p.text_count);
      for (MistakeCategory c : kAllCategories) out += "," + p.Mean(c).ToFixed(1);
      out += "\n";
    }
    return out;
  }
  char cell[64];
  std::snprintf(cell, sizeof cell, "%-16s %5s", "System", "Texts");
  out += cell;
  for (MistakeCategory c : kAllCategories) {
    std::snprintf(cell, sizeof cell, " %13s", std::string(CategoryTitle(c)).c_str());
    out += cell;
  }
  out += "\n";
  for (const ErrorProfile &p : profiles) {
    std::snprintf(cell, sizeof cell, "%-16s %5d", p.system_id.c_str(), p.text_count);
    out += cell;
    for (MistakeCategory c : kAllCategories) {
      std::snprintf(cell, sizeof cell, " %13s", p.Mean(c).ToFixed(1).c_str());
      out += cell;
    }
    out += "\n";
  }
  return out;
}

std::string RenderHistogram(const PositionHistogram &h, ReportFormat format) {
  const std::string scope = h.filter ? std::string(CategoryLabel(*h.filter)) : "ALL";
  if (format == ReportFormat::kJson) {
    nlohmann::json j{{"category", scope}, {"bins", h.bins}, {"total", h.total()}};
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == ReportFormat::kCsv) {
    out = "CATEGORY,BIN,COUNT\n";
    for (int b = 0; b < 10; ++b) out += scope + "," + std::to_string(b) + "," + std::to_string(h.bins[b]) + "\n";
    return out;
  }
  char line[96];
  for (int b = 0; b < 10; ++b) {
    std::snprintf(line, sizeof line, "%s bin %d  %6ld\n", scope.c_str(), b, h.bins[b]);
    out += line;
  }
  return out;
}

}  // namespace accucheck
