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

#include "doctest.h"
#include "support/oracles.h"

using namespace accucheck;

namespace {

constexpr auto N = MistakeCategory::kName;
constexpr auto U = MistakeCategory::kNumber;
constexpr auto W = MistakeCategory::kWord;

Mistake M(int start, int end, MistakeCategory c, const std::string &doc = "d") {
  return {doc, start, end, c, ""};
}

// One sentence as three annotators marked it.
const char *kThreeAnnotatorSentence =
    "The only other Raptor to reach double figures in points was Dwyane Dragic , who came off the "
    "bench for 22 points ( 9 - 17 FG , 3 - 7 3Pt , 3 - 3 FT ) , six rebounds and five assists .";

}  // namespace

TEST_CASE("token files split on whitespace") {
  const TokenizedText t = MakeText("x", "The  Suns\nwon .\n", "sys");
  CHECK(t.size() == 4);
  CHECK(t.tokens[1] == "Suns");
  CHECK(t.system_id == "sys");
  CHECK_THROWS_AS(MakeText("x", "  \n"), std::invalid_argument);
}

TEST_CASE("category labels round-trip") {
  for (MistakeCategory c : kAllCategories) CHECK(ParseCategoryLabel(CategoryLabel(c)) == c);
  CHECK(ParseCategoryLabel("not_checkable") == MistakeCategory::kNotCheckable);
  CHECK_FALSE(ParseCategoryLabel("SPELLING"));
  CHECK(CategoryTitle(MistakeCategory::kNotCheckable) == "Not checkable");
  CHECK(CategoryPriority(N) < CategoryPriority(U));
  CHECK(CategoryPriority(MistakeCategory::kOther) < CategoryPriority(MistakeCategory::kNotCheckable));
}

TEST_CASE("validation reports every problem") {
  TextIndex texts;
  texts.emplace("d", testing::PlainText("d", 10));
  CHECK(ValidateMistakes({M(0, 1, U), M(9, 9, N)}, texts).ok());

  const auto out_of_range = ValidateMistakes({M(5, 10, U)}, texts);
  REQUIRE(out_of_range.findings.size() == 1);
  CHECK(out_of_range.findings[0].kind == ValidationFinding::Kind::kOutOfRange);

  const auto overlap = ValidateMistakes({M(6, 7, U), M(7, 7, W)}, texts);
  REQUIRE(overlap.findings.size() == 1);
  CHECK(overlap.findings[0].kind == ValidationFinding::Kind::kOverlap);
  CHECK(overlap.findings[0].other_entry == 1);

  const auto many = ValidateMistakes({M(3, 2, U), M(0, 0, U, "nope"), M(-1, 0, U)}, texts);
  CHECK(many.findings.size() == 3);
  CHECK_FALSE(many.Summary().empty());
}

TEST_CASE("normalizing a submission merges same-category overlaps") {
  Mistake a = M(2, 4, U);
  a.note = "x";
  Mistake b = M(4, 6, U);
  b.note = "y";
  const MistakeList merged = NormalizeSubmission({b, a, M(8, 8, W)});
  REQUIRE(merged.size() == 2);
  CHECK(merged[0].start == 2);
  CHECK(merged[0].end == 6);
  CHECK(merged[0].note == "x; y");
  CHECK_THROWS_AS(NormalizeSubmission({M(2, 4, U), M(3, 3, W)}), AnnotationError);
}

TEST_CASE("minimal annotation prefers fewer mistakes, then better categories") {
  const AnnotationCandidate one_name{{M(0, 1, N)}};
  const AnnotationCandidate three_numbers{{M(3, 3, U), M(5, 5, U), M(7, 7, U)}};
  const std::vector<AnnotationCandidate> a = {three_numbers, one_name};
  CHECK(SelectMinimalAnnotationIndex(a) == 1);

  // Seven mistakes beat nine.
  AnnotationCandidate seven, nine;
  for (int i = 0; i < 7; ++i) seven.mistakes.push_back(M(i, i, U));
  for (int i = 0; i < 9; ++i) nine.mistakes.push_back(M(i, i, N));
  const std::vector<AnnotationCandidate> b = {nine, seven};
  CHECK(SelectMinimalAnnotationIndex(b) == 1);

  // Equal counts: the Name candidate wins over the Number one.
  const std::vector<AnnotationCandidate> c = {{{M(1, 1, U)}}, {{M(0, 0, N)}}};
  CHECK(SelectMinimalAnnotationIndex(c) == 1);

  const std::vector<AnnotationCandidate> same = {one_name, one_name};
  CHECK(SelectMinimalAnnotationIndex(same) == 0);
  CHECK_THROWS_AS(SelectMinimalAnnotationIndex(std::vector<AnnotationCandidate>{}), std::invalid_argument);
}

TEST_CASE("majority merge of three annotators") {
  TextIndex texts;
  texts.emplace("d", testing::PlainText("d", 12));
  const MistakeList all = {M(4, 6, U)};
  CHECK(MergeAnnotatorLists(all, all, all, texts) == all);
  CHECK(MergeAnnotatorLists({M(4, 6, U)}, {}, {}, texts).empty());
}

TEST_CASE("majority merge keeps spans two of three annotators agree on") {
  TextIndex texts;
  texts.emplace("f2", MakeText("f2", kThreeAnnotatorSentence));
  auto f = [](int s, int e, MistakeCategory c) { return M(s, e, c, "f2"); };
  const MistakeList t1 = {f(1, 2, W), f(3, 3, N), f(11, 11, N), f(15, 18, W), f(23, 23, U), f(25, 25, U), f(39, 39, U)};
  const MistakeList t2 = {f(1, 2, W), f(3, 3, N), f(11, 12, N), f(16, 18, W), f(23, 23, U), f(25, 25, U), f(39, 39, U)};
  const MistakeList t3 = {f(1, 2, W),   f(11, 12, N), f(20, 20, U), f(25, 25, U), f(28, 28, U),
                          f(33, 33, U), f(35, 35, U), f(39, 39, U), f(42, 42, U)};
  const MistakeList gold = MergeAnnotatorLists(t1, t2, t3, texts);
  const MistakeList want = {f(1, 2, W), f(3, 3, N), f(11, 12, N), f(16, 18, W), f(23, 23, U), f(25, 25, U), f(39, 39, U)};
  CHECK(gold == want);
  CHECK(texts.at("f2").tokens[1] == "only");
  CHECK(texts.at("f2").tokens[11] == "Dwyane");

  // T1 and T2 used seven mistakes, T3 nine: the majority is also minimal.
  const std::vector<AnnotationCandidate> candidates = {{t3}, {t1}};
  CHECK(SelectMinimalAnnotationIndex(candidates) == 1);
}
