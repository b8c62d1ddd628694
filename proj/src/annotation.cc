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

#include "accucheck/annotation.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>

#include "accucheck/teams.h"

namespace accucheck {

namespace {

struct CategoryInfo {
  MistakeCategory category;
  std::string_view label;
  std::string_view title;
  int priority;
};

constexpr std::array<CategoryInfo, 6> kCategories = {{
    {MistakeCategory::kName, "NAME", "Name", 0},
    {MistakeCategory::kNumber, "NUMBER", "Number", 1},
    {MistakeCategory::kWord, "WORD", "Word", 2},
    {MistakeCategory::kContext, "CONTEXT", "Context", 3},
    {MistakeCategory::kNotCheckable, "NOT_CHECKABLE", "Not checkable", 5},
    {MistakeCategory::kOther, "OTHER", "Other", 4},
}};

const CategoryInfo &Info(MistakeCategory c) {
  return kCategories[static_cast<int>(c)];
}

}  // namespace

TokenizedText MakeText(std::string doc_id, std::string_view content,
                       std::string system_id) {
  TokenizedText text;
  text.doc_id = std::move(doc_id);
  text.system_id = std::move(system_id);
  std::size_t i = 0;
  while (i < content.size()) {
    while (i < content.size() && std::isspace(static_cast<unsigned char>(content[i]))) ++i;
    std::size_t j = i;
    while (j < content.size() && !std::isspace(static_cast<unsigned char>(content[j]))) ++j;
    if (j > i) text.tokens.emplace_back(content.substr(i, j - i));
    i = j;
  }
  if (text.tokens.empty()) {
    throw std::invalid_argument("text '" + text.doc_id + "' has no tokens");
  }
  return text;
}

std::string_view CategoryLabel(MistakeCategory c) { return Info(c).label; }
std::string_view CategoryTitle(MistakeCategory c) { return Info(c).title; }
int CategoryPriority(MistakeCategory c) { return Info(c).priority; }

std::optional<MistakeCategory> ParseCategoryLabel(std::string_view label) {
  // Labels are written upper-case but read case-insensitively.
  std::string upper(label);
  for (char &ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (const CategoryInfo &info : kCategories) {
    if (upper == info.label) return info.category;
  }
  return std::nullopt;
}

int Mistake::OverlapSize(const Mistake &o) const {
  if (!Overlaps(o)) return 0;
  return std::min(end, o.end) - std::max(start, o.start) + 1;
}

void SortMistakes(MistakeList &list) {
  std::stable_sort(list.begin(), list.end(), [](const Mistake &a, const Mistake &b) {
    return std::tie(a.doc_id, a.start, a.end, a.category) <
           std::tie(b.doc_id, b.start, b.end, b.category);
  });
}

std::string ValidationReport::Summary() const {
  std::string out;
  for (const auto &f : findings) out += f.message + "\n";
  return out;
}

ValidationReport ValidateMistakes(const MistakeList &list, const TextIndex &texts) {
  using Kind = ValidationFinding::Kind;
  ValidationReport report;
  auto where = [&](std::size_t i) {
    const Mistake &m = list[i];
    return "entry " + std::to_string(i) + " (" + m.doc_id + " [" +
           std::to_string(m.start) + "," + std::to_string(m.end) + "])";
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Mistake &m = list[i];
    if (m.start < 0 || m.start > m.end) {
      report.findings.push_back({Kind::kBadSpan, i, i, where(i) + ": start > end or negative"});
      continue;
    }
    auto it = texts.find(m.doc_id);
    if (it == texts.end()) {
      report.findings.push_back({Kind::kUnknownDoc, i, i, where(i) + ": unknown doc id"});
      continue;
    }
    if (m.end >= it->second.size()) {
      report.findings.push_back(
          {Kind::kOutOfRange, i, i,
           where(i) + ": end beyond last token (" + std::to_string(it->second.size()) +
               " tokens)"});
    }
  }
  // Overlaps: sweep each document's spans in start order.
  std::vector<std::size_t> order(list.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(list[a].doc_id, list[a].start) < std::tie(list[b].doc_id, list[b].start);
  });
  for (std::size_t x = 0; x < order.size(); ++x) {
    const Mistake &a = list[order[x]];
    if (a.start > a.end) continue;
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const Mistake &b = list[order[y]];
      if (b.doc_id != a.doc_id || b.start > a.end) break;
      if (b.start > b.end) continue;
      const auto lo = std::min(order[x], order[y]);
      const auto hi = std::max(order[x], order[y]);
      report.findings.push_back({Kind::kOverlap, lo, hi, where(lo) + " overlaps " + where(hi)});
    }
  }
  return report;
}

MistakeList NormalizeSubmission(MistakeList list) {
  SortMistakes(list);
  MistakeList out;
  for (Mistake &m : list) {
    if (!out.empty() && out.back().Overlaps(m)) {
      Mistake &prev = out.back();
      if (prev.category != m.category) {
        throw AnnotationError("overlapping spans with different categories in " +
                              m.doc_id + ": [" + std::to_string(prev.start) + "," +
                              std::to_string(prev.end) + "] " +
                              std::string(CategoryLabel(prev.category)) + " vs [" +
                              std::to_string(m.start) + "," + std::to_string(m.end) +
                              "] " + std::string(CategoryLabel(m.category)));
      }
      prev.end = std::max(prev.end, m.end);
      if (!m.note.empty() && m.note != prev.note) {
        prev.note = prev.note.empty() ? m.note : prev.note + "; " + m.note;
      }
      continue;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t SelectMinimalAnnotationIndex(std::span<const AnnotationCandidate> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no annotation candidates");
  auto key = [](const AnnotationCandidate &c) {
    std::vector<int> priorities;
    for (const Mistake &m : c.mistakes) priorities.push_back(CategoryPriority(m.category));
    std::sort(priorities.begin(), priorities.end());
    return std::make_pair(c.mistakes.size(), std::move(priorities));
  };
  std::size_t best = 0;
  auto best_key = key(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    auto k = key(candidates[i]);
    if (k < best_key) {
      best = i;
      best_key = std::move(k);
    }
  }
  return best;
}

const AnnotationCandidate &SelectMinimalAnnotation(
    std::span<const AnnotationCandidate> candidates) {
  return candidates[SelectMinimalAnnotationIndex(candidates)];
}

MistakeList MergeAnnotatorLists(const MistakeList &a, const MistakeList &b,
                                const MistakeList &c, const TextIndex &texts) {
  constexpr int kCategoryCount = 6;
  // votes[doc][token][category]
  std::map<std::string, std::vector<std::array<int, kCategoryCount>>> votes;
  auto tally = [&](const MistakeList &list) {
    for (const Mistake &m : list) {
      auto it = texts.find(m.doc_id);
      if (it == texts.end()) continue;
      auto &doc = votes[m.doc_id];
      doc.resize(it->second.size(), {});
      const int last = std::min(m.end, it->second.size() - 1);
      for (int t = std::max(m.start, 0); t <= last; ++t) {
        ++doc[t][static_cast<int>(m.category)];
      }
    }
  };
  tally(a);
  tally(b);
  tally(c);

  MistakeList gold;
  for (const auto &[doc_id, tokens] : votes) {
    std::optional<MistakeCategory> run;
    int run_start = 0;
    auto close = [&](int end) {
      if (run) gold.push_back({doc_id, run_start, end, *run, ""});
      run.reset();
    };
    for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
      std::optional<MistakeCategory> winner;
      for (int k = 0; k < kCategoryCount; ++k) {
        if (tokens[t][k] >= 2) winner = static_cast<MistakeCategory>(k);
      }
      if (winner != run) {
        close(t - 1);
        if (winner) {
          run = winner;
          run_start = t;
        }
      }
    }
    close(static_cast<int>(tokens.size()) - 1);
  }
  SortMistakes(gold);
  return gold;
}

}  // namespace accucheck
