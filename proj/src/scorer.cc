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

#include "accucheck/scorer.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace accucheck {

namespace {

using Weights = std::vector<std::vector<std::int64_t>>;

// Maximum-weight assignment on a dense rows x cols matrix of non-negative
// weights (Kuhn-Munkres, potentials form). Returns the column assigned to
// each row; rows may be assigned a zero-weight column.
std::vector<int> MaxWeightAssignment(const Weights &w) {
  const int rows = static_cast<int>(w.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(w[0].size());
  if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);
  if (rows > cols) {
    Weights t(cols, std::vector<std::int64_t>(rows));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t[c][r] = w[r][c];
    const std::vector<int> by_col = MaxWeightAssignment(t);
    std::vector<int> out(rows, -1);
    for (int c = 0; c < cols; ++c)
      if (by_col[c] >= 0) out[by_col[c]] = c;
    return out;
  }
  std::int64_t top = 0;
  for (const auto &row : w) top = std::max(top, *std::max_element(row.begin(), row.end()));
  const std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based arrays; cost = top - weight turns maximization into minimization.
  std::vector<std::int64_t> u(rows + 1), v(cols + 1);
  std::vector<int> p(cols + 1), way(cols + 1);
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = (top - w[i0 - 1][j - 1]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> out(rows, -1);
  for (int j = 1; j <= cols; ++j)
    if (p[j] > 0) out[p[j] - 1] = j - 1;
  return out;
}

bool Eligible(const Mistake &g, const Mistake &s, const MatchOptions &options) {
  if (options.category_strict && g.category != s.category) return false;
  if (options.mode == MatchOptions::Mode::kExact) {
    return g.doc_id == s.doc_id && g.start == s.start && g.end == s.end;
  }
  return g.Overlaps(s);
}

using TokenSet = std::set<std::pair<std::string, int>>;

TokenSet CoveredTokens(const MistakeList &list, std::optional<MistakeCategory> only) {
  TokenSet tokens;
  for (const Mistake &m : list) {
    if (only && m.category != *only) continue;
    for (int t = m.start; t <= m.end; ++t) tokens.emplace(m.doc_id, t);
  }
  return tokens;
}

std::int64_t IntersectionSize(const TokenSet &a, const TokenSet &b) {
  std::int64_t n = 0;
  for (const auto &t : a) n += b.count(t);
  return n;
}

MistakeList OnlyCategory(const MistakeList &list, MistakeCategory c) {
  MistakeList out;
  for (const Mistake &m : list)
    if (m.category == c) out.push_back(m);
  return out;
}

}  // namespace

Matching MatchMistakes(const MistakeList &gold, const MistakeList &submitted,
                       const MatchOptions &options, const TextIndex *texts) {
  if (texts != nullptr) {
    for (const MistakeList *list : {&gold, &submitted}) {
      for (const Mistake &m : *list) {
        if (!texts->contains(m.doc_id)) throw ScoreError("unknown document " + m.doc_id);
      }
    }
  }
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> docs;
  for (std::size_t i = 0; i < gold.size(); ++i) docs[gold[i].doc_id].first.push_back(i);
  for (std::size_t i = 0; i < submitted.size(); ++i) docs[submitted[i].doc_id].second.push_back(i);

  Matching matching;
  std::vector<char> gold_used(gold.size(), false), sub_used(submitted.size(), false);
  for (auto &[doc, members] : docs) {
    auto &[g_idx, s_idx] = members;
    // Earlier gold first so equal-weight alternatives resolve towards it.
    std::stable_sort(g_idx.begin(), g_idx.end(),
                     [&](std::size_t a, std::size_t b) { return gold[a].start < gold[b].start; });
    std::stable_sort(s_idx.begin(), s_idx.end(), [&](std::size_t a, std::size_t b) {
      return submitted[a].start < submitted[b].start;
    });
    if (g_idx.empty() || s_idx.empty()) continue;
    // Lexicographic objective: each pair is worth more than the total
    // overlap of any pairing, so cardinality dominates overlap.
    std::int64_t total_overlap = 0;
    for (std::size_t g : g_idx)
      for (std::size_t s : s_idx)
        if (Eligible(gold[g], submitted[s], options))
          total_overlap += gold[g].OverlapSize(submitted[s]);
    const std::int64_t pair_bonus = total_overlap + 1;
    Weights w(g_idx.size(), std::vector<std::int64_t>(s_idx.size(), 0));
    for (std::size_t r = 0; r < g_idx.size(); ++r)
      for (std::size_t c = 0; c < s_idx.size(); ++c)
        if (Eligible(gold[g_idx[r]], submitted[s_idx[c]], options))
          w[r][c] = pair_bonus + gold[g_idx[r]].OverlapSize(submitted[s_idx[c]]);
    const std::vector<int> assigned = MaxWeightAssignment(w);
    for (std::size_t r = 0; r < assigned.size(); ++r) {
      const int c = assigned[r];
      if (c < 0 || w[r][c] == 0) continue;
      matching.pairs.emplace_back(g_idx[r], s_idx[c]);
      gold_used[g_idx[r]] = true;
      sub_used[s_idx[c]] = true;
    }
  }
  std::sort(matching.pairs.begin(), matching.pairs.end());
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (!gold_used[i]) matching.unmatched_gold.push_back(i);
  for (std::size_t i = 0; i < submitted.size(); ++i)
    if (!sub_used[i]) matching.unmatched_submitted.push_back(i);
  return matching;
}

ScoreRow &ScoreRow::operator+=(const ScoreRow &o) {
  gold_mistakes += o.gold_mistakes;
  submitted_mistakes += o.submitted_mistakes;
  matched_mistakes += o.matched_mistakes;
  gold_tokens += o.gold_tokens;
  submitted_tokens += o.submitted_tokens;
  common_tokens += o.common_tokens;
  return *this;
}

ScoreReport &ScoreReport::operator+=(const ScoreReport &o) {
  for (std::size_t i = 0; i < by_category.size(); ++i) by_category[i] += o.by_category[i];
  overall += o.overall;
  return *this;
}

ScoreReport ComputeScores(const MistakeList &gold, const MistakeList &submitted,
                          const TextIndex &texts, const MatchOptions &options) {
  if (auto report = ValidateMistakes(gold, texts); !report.ok()) {
    throw ScoreError("invalid gold list:\n" + report.Summary());
  }
  MistakeList sub;
  try {
    sub = NormalizeSubmission(submitted);
  } catch (const AnnotationError &e) {
    throw ScoreError(std::string("invalid submission: ") + e.what());
  }
  if (auto report = ValidateMistakes(sub, texts); !report.ok()) {
    throw ScoreError("invalid submission:\n" + report.Summary());
  }

  ScoreReport out;
  auto fill = [&](ScoreRow &row, const MistakeList &g, const MistakeList &s,
                  std::optional<MistakeCategory> only) {
    const Matching m = MatchMistakes(g, s, options);
    row.gold_mistakes = static_cast<std::int64_t>(g.size());
    row.submitted_mistakes = static_cast<std::int64_t>(s.size());
    row.matched_mistakes = static_cast<std::int64_t>(m.pairs.size());
    const TokenSet gt = CoveredTokens(gold, only);
    const TokenSet st = CoveredTokens(sub, only);
    row.gold_tokens = static_cast<std::int64_t>(gt.size());
    row.submitted_tokens = static_cast<std::int64_t>(st.size());
    row.common_tokens = IntersectionSize(gt, st);
  };
  fill(out.overall, gold, sub, std::nullopt);
  for (MistakeCategory c : kAllCategories) {
    fill(out.by_category[static_cast<int>(c)], OnlyCategory(gold, c), OnlyCategory(sub, c), c);
  }
  return out;
}

MistakeList BlindSpot(const MistakeList &gold, std::span<const MistakeList> submissions,
                      const MatchOptions &options) {
  std::vector<char> detected(gold.size(), false);
  for (const MistakeList &sub : submissions) {
    const Matching m = MatchMistakes(gold, sub, options);
    for (const auto &[g, s] : m.pairs) detected[g] = true;
  }
  MistakeList out;
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (!detected[i]) out.push_back(gold[i]);
  return out;
}

std::string RenderReport(const ScoreReport &report, ReportFormat format) {
  struct Line {
    std::string title;
    const ScoreRow *row;
  };
  std::vector<Line> lines;
  for (MistakeCategory c : kAllCategories) lines.push_back({std::string(CategoryTitle(c)), &report.row(c)});
  lines.push_back({"Overall", &report.overall});

  std::ostringstream out;
  switch (format) {
    case ReportFormat::kTable: {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-15s %-17s %-17s\n", "", "Mistake", "Token");
      out << buf;
      std::snprintf(buf, sizeof buf, "%-15s %-8s %-8s %-8s %-8s\n", "Category", "recall",
                    "precision", "recall", "precision");
      out << buf;
      for (const Line &l : lines) {
        if (l.title == "Overall") out << std::string(51, '-') << "\n";
        std::snprintf(buf, sizeof buf, "%-15s %-8s %-8s %-8s %-8s\n", l.title.c_str(),
                      RenderRatio(l.row->mistake_recall()).c_str(),
                      RenderRatio(l.row->mistake_precision()).c_str(),
                      RenderRatio(l.row->token_recall()).c_str(),
                      RenderRatio(l.row->token_precision()).c_str());
        out << buf;
      }
      break;
    }
    case ReportFormat::kCsv:
      out << "CATEGORY,MISTAKE_RECALL,MISTAKE_PRECISION,TOKEN_RECALL,TOKEN_PRECISION\n";
      for (const Line &l : lines) {
        out << l.title << "," << RenderRatio(l.row->mistake_recall()) << ","
            << RenderRatio(l.row->mistake_precision()) << ","
            << RenderRatio(l.row->token_recall()) << ","
            << RenderRatio(l.row->token_precision()) << "\n";
      }
      break;
    case ReportFormat::kJson: {
      auto ratio = [](const Ratio &r) -> nlohmann::json {
        if (!r) return nullptr;
        return {{"value", r->ToDouble()}, {"num", r->num()}, {"den", r->den()}};
      };
      nlohmann::json rows = nlohmann::json::array();
      for (const Line &l : lines) {
        rows.push_back({{"category", l.title},
                        {"mistake_recall", ratio(l.row->mistake_recall())},
                        {"mistake_precision", ratio(l.row->mistake_precision())},
                        {"token_recall", ratio(l.row->token_recall())},
                        {"token_precision", ratio(l.row->token_precision())},
                        {"gold_mistakes", l.row->gold_mistakes},
                        {"submitted_mistakes", l.row->submitted_mistakes},
                        {"matched_mistakes", l.row->matched_mistakes},
                        {"gold_tokens", l.row->gold_tokens},
                        {"submitted_tokens", l.row->submitted_tokens},
                        {"common_tokens", l.row->common_tokens}});
      }
      out << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace accucheck
