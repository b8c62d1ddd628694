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

#ifndef ACCUCHECK_ANNOTATION_H_
#define ACCUCHECK_ANNOTATION_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace accucheck {

// A pre-tokenized summary. Tokens are the whitespace-separated pieces of
// the shipped token file; this toolkit never re-tokenizes prose.
struct TokenizedText {
  std::string doc_id;
  std::string system_id;
  std::vector<std::string> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
};

// Parses a token file body. Throws std::invalid_argument if it holds no
// tokens.
TokenizedText MakeText(std::string doc_id, std::string_view content,
                       std::string system_id = "");

using TextIndex = std::map<std::string, TokenizedText, std::less<>>;

enum class MistakeCategory { kName, kNumber, kWord, kContext, kNotCheckable, kOther };

inline constexpr MistakeCategory kAllCategories[] = {
    MistakeCategory::kName,    MistakeCategory::kNumber,
    MistakeCategory::kWord,    MistakeCategory::kContext,
    MistakeCategory::kNotCheckable, MistakeCategory::kOther};

// GSML label: NAME, NUMBER, WORD, CONTEXT, NOT_CHECKABLE, OTHER.
std::string_view CategoryLabel(MistakeCategory c);
std::optional<MistakeCategory> ParseCategoryLabel(std::string_view label);
// Report row title: "Name", ..., "Not checkable", "Other".
std::string_view CategoryTitle(MistakeCategory c);

// Annotation priority: Name, Number, Word, Context, Other, Not checkable.
// Lower is preferred.
int CategoryPriority(MistakeCategory c);

// A categorized token span. start and end are 0-based and inclusive.
struct Mistake {
  std::string doc_id;
  int start = 0;
  int end = 0;
  MistakeCategory category = MistakeCategory::kOther;
  std::string note;

  int length() const { return end - start + 1; }
  bool Overlaps(const Mistake &o) const {
    return doc_id == o.doc_id && start <= o.end && o.start <= end;
  }
  int OverlapSize(const Mistake &o) const;

  friend bool operator==(const Mistake &, const Mistake &) = default;
};

using MistakeList = std::vector<Mistake>;

// Sorts by doc id, then start, end, category.
void SortMistakes(MistakeList &list);

struct ValidationFinding {
  enum class Kind { kBadSpan, kUnknownDoc, kOutOfRange, kOverlap };
  Kind kind;
  std::size_t entry;        // index into the validated list
  std::size_t other_entry;  // second entry for overlaps, else == entry
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;
  bool ok() const { return findings.empty(); }
  std::string Summary() const;
};

// Reports every malformed or out-of-range span, unknown doc id and
// overlapping pair. Never throws.
ValidationReport ValidateMistakes(const MistakeList &list, const TextIndex &texts);

class AnnotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Merges overlapping same-category spans of a submission (notes are joined
// with "; "). Throws AnnotationError when spans of different categories
// overlap.
MistakeList NormalizeSubmission(MistakeList list);

// One hypothesis for correcting a sentence.
struct AnnotationCandidate {
  std::vector<Mistake> mistakes;
};

// Picks the candidate with the fewest mistakes; ties prefer the candidate
// whose sorted category priorities are lexicographically smallest, then the
// earliest candidate. Throws std::invalid_argument on empty input.
std::size_t SelectMinimalAnnotationIndex(std::span<const AnnotationCandidate> candidates);
const AnnotationCandidate &SelectMinimalAnnotation(
    std::span<const AnnotationCandidate> candidates);

// Token-level majority vote over three annotators: a token is gold with
// category C iff at least two annotators cover it with C. Maximal runs of
// consecutive gold tokens sharing a category become one mistake.
MistakeList MergeAnnotatorLists(const MistakeList &a, const MistakeList &b,
                                const MistakeList &c, const TextIndex &texts);

}  // namespace accucheck

#endif  // ACCUCHECK_ANNOTATION_H_
