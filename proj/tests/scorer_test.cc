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

#include <random>

#include "accucheck/corpus.h"
#include "accucheck/gsml.h"
#include "doctest.h"
#include "support/oracles.h"

using namespace accucheck;

namespace {

constexpr auto N = MistakeCategory::kName;
constexpr auto U = MistakeCategory::kNumber;
constexpr auto W = MistakeCategory::kWord;

Mistake M(int start, int end, MistakeCategory c = U, const std::string &doc = "d") {
  return {doc, start, end, c, ""};
}

TextIndex OneText(int length) {
  TextIndex texts;
  texts.emplace("d", testing::PlainText("d", length));
  return texts;
}

std::string R(const Ratio &r) { return RenderRatio(r); }

}  // namespace

TEST_CASE("matching pairs overlapping spans one to one") {
  const MistakeList gold = {M(0, 1), M(5, 5), M(9, 10)};
  const MistakeList sub = {M(1, 2), M(9, 9), M(20, 20)};
  const Matching m = MatchMistakes(gold, sub);
  CHECK(m.pairs.size() == 2);
  CHECK(m.unmatched_gold == std::vector<std::size_t>{1});
  CHECK(m.unmatched_submitted == std::vector<std::size_t>{2});
  CHECK(testing::BruteForceMatch(gold, sub).pairs == 2);
}

TEST_CASE("identity and empty submissions") {
  const MistakeList gold = {M(0, 1), M(5, 5, N)};
  const Matching same = MatchMistakes(gold, gold);
  CHECK(same.pairs.size() == 2);
  CHECK(same.unmatched_gold.empty());
  const Matching none = MatchMistakes(gold, {});
  CHECK(none.pairs.empty());
  CHECK(none.unmatched_gold.size() == 2);
}

TEST_CASE("a greedy pairing would lose a pair") {
  // The first-come choice pairs [0,9] with [5,10] and strands [10,10].
  const MistakeList gold = {M(0, 9), M(10, 10)};
  const MistakeList sub = {M(5, 10), M(0, 1)};
  CHECK(MatchMistakes(gold, sub).pairs.size() == 2);
}

TEST_CASE("exact mode and category-strict overall") {
  const MistakeList gold = {M(0, 1, N), M(4, 4, U)};
  const MistakeList sub = {M(0, 0, N), M(4, 4, W)};
  MatchOptions exact;
  exact.mode = MatchOptions::Mode::kExact;
  CHECK(MatchMistakes(gold, sub, exact).pairs.size() == 1);
  MatchOptions strict;
  strict.category_strict = true;
  CHECK(MatchMistakes(gold, sub, strict).pairs.size() == 1);
  CHECK(MatchMistakes(gold, sub).pairs.size() == 2);
}

TEST_CASE("unknown documents raise with texts supplied") {
  const TextIndex texts = OneText(5);
  CHECK_THROWS_AS(MatchMistakes({M(0, 0, U, "zz")}, {}, {}, &texts), ScoreError);
}

TEST_CASE("maximum matching agrees with exhaustive search") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const MistakeList gold = testing::RandomMistakes(rng, "d", 20, 6);
    const MistakeList sub = testing::RandomMistakes(rng, "d", 20, 6);
    const Matching m = MatchMistakes(gold, sub);
    const testing::BruteMatch best = testing::BruteForceMatch(gold, sub);
    int overlap = 0;
    for (const auto &[g, s] : m.pairs) {
      REQUIRE(gold[g].Overlaps(sub[s]));
      overlap += gold[g].OverlapSize(sub[s]);
    }
    REQUIRE(static_cast<int>(m.pairs.size()) == best.pairs);
    REQUIRE(overlap == best.overlap);
    REQUIRE(m.pairs.size() + m.unmatched_gold.size() == gold.size());
    REQUIRE(m.pairs.size() + m.unmatched_submitted.size() == sub.size());
  }
}

TEST_CASE("score laws on random lists") {
  std::mt19937 rng(99);
  const TextIndex texts = OneText(30);
  for (int trial = 0; trial < 300; ++trial) {
    const MistakeList gold = testing::RandomMistakes(rng, "d", 30, 8);
    const MistakeList sub = testing::RandomMistakes(rng, "d", 30, 8);
    const ScoreReport same = ComputeScores(gold, gold, texts);
    if (!gold.empty()) {
      REQUIRE(R(same.overall.mistake_recall()) == "1.000");
      REQUIRE(R(same.overall.mistake_precision()) == "1.000");
      REQUIRE(R(same.overall.token_recall()) == "1.000");
    }
    const ScoreReport empty = ComputeScores(gold, {}, texts);
    REQUIRE_FALSE(empty.overall.mistake_precision());
    if (!gold.empty()) REQUIRE(R(empty.overall.mistake_recall()) == "0.000");

    const ScoreReport r = ComputeScores(gold, sub, texts);
    REQUIRE(r.overall.common_tokens <= std::min(r.overall.gold_tokens, r.overall.submitted_tokens));
    REQUIRE(r.overall.matched_mistakes <= std::min(r.overall.gold_mistakes, r.overall.submitted_mistakes));
    std::int64_t gold_sum = 0;
    for (MistakeCategory c : kAllCategories) {
      const ScoreRow &row = r.row(c);
      REQUIRE(row.common_tokens <= std::min(row.gold_tokens, row.submitted_tokens));
      gold_sum += row.gold_mistakes;
    }
    REQUIRE(gold_sum == r.overall.gold_mistakes);
  }
}

TEST_CASE("recap: the Number and Name mistakes alone") {
  const std::string dir = std::string(ACCUCHECK_FIXTURE_DIR) + "/memphis_phoenix";
  const TextIndex texts = LoadTexts(dir + "/texts");
  const MistakeList gold = ReadGsmlFile(dir + "/gold.csv");
  MistakeList names_numbers;
  for (const Mistake &m : gold)
    if (m.category == N || m.category == U) names_numbers.push_back(m);
  // "2", "Monday", the arena, "59" and "42".
  REQUIRE(names_numbers.size() == 5);
  const ScoreReport r = ComputeScores(gold, names_numbers, texts);
  CHECK(R(r.overall.mistake_recall()) == "0.500");
  CHECK(R(r.overall.mistake_precision()) == "1.000");
  CHECK(R(r.row(U).mistake_recall()) == "1.000");
  CHECK(R(r.row(W).mistake_recall()) == "0.000");
  CHECK(R(r.row(W).mistake_precision()) == "-");

  // Adding "leading" gives six of ten.
  MistakeList six = names_numbers;
  for (const Mistake &m : gold)
    if (texts.at("recap").tokens[m.start] == "leading") six.push_back(m);
  const ScoreReport r6 = ComputeScores(gold, six, texts);
  CHECK(R(r6.overall.mistake_recall()) == "0.600");
  CHECK(R(r6.overall.mistake_precision()) == "1.000");
}

TEST_CASE("category rows only pair equal categories") {
  const TextIndex texts = OneText(10);
  const ScoreReport r = ComputeScores({M(0, 1, N)}, {M(1, 2, U)}, texts);
  CHECK(R(r.overall.mistake_recall()) == "1.000");
  CHECK(R(r.row(N).mistake_recall()) == "0.000");
  CHECK(R(r.row(U).mistake_precision()) == "0.000");
  CHECK(r.overall.common_tokens == 1);
  CHECK(r.row(N).common_tokens == 0);
}

TEST_CASE("invalid inputs are refused") {
  const TextIndex texts = OneText(10);
  CHECK_THROWS_AS(ComputeScores({M(0, 1), M(1, 1)}, {}, texts), ScoreError);
  CHECK_THROWS_AS(ComputeScores({}, {M(0, 2, N), M(2, 3, U)}, texts), ScoreError);
  CHECK_THROWS_AS(ComputeScores({}, {M(9, 10)}, texts), ScoreError);
  // Same-category overlaps in a submission are merged, not refused.
  CHECK(ComputeScores({M(0, 3)}, {M(0, 1), M(1, 2)}, texts).overall.submitted_mistakes == 1);
}

TEST_CASE("blind spot keeps what no submission found") {
  const MistakeList gold = {M(0, 0), M(2, 2), M(4, 4), M(6, 6)};
  const MistakeList sub1 = {M(0, 0), M(2, 2)};
  const MistakeList sub2 = {M(2, 2), M(4, 4)};
  const std::vector<MistakeList> subs = {sub1, sub2};
  CHECK(BlindSpot(gold, subs) == MistakeList{M(6, 6)});
  const std::vector<MistakeList> perfect = {gold};
  CHECK(BlindSpot(gold, perfect).empty());
  const std::vector<MistakeList> nothing = {{}, {}};
  CHECK(BlindSpot(gold, nothing) == gold);
}

TEST_CASE("report rendering") {
  const TextIndex texts = OneText(10);
  const std::string all_one = RenderReport(ComputeScores({M(0, 0), M(3, 4, N)}, {M(0, 0), M(3, 4, N)}, texts));
  CHECK(all_one.find("1.000") != std::string::npos);
  CHECK(all_one.find("Overall") != std::string::npos);
  CHECK(all_one.find("Not checkable") != std::string::npos);

  const std::string two_thirds =
      RenderReport(ComputeScores({M(0, 0), M(2, 2), M(4, 4)}, {M(0, 0), M(2, 2)}, texts), ReportFormat::kCsv);
  CHECK(two_thirds.find("0.667") != std::string::npos);
  const std::string undefined = RenderReport(ComputeScores({M(0, 0)}, {}, texts), ReportFormat::kCsv);
  CHECK(undefined.find(",-") != std::string::npos);
  const std::string json = RenderReport(ComputeScores({M(0, 0)}, {}, texts), ReportFormat::kJson);
  CHECK(json.find("\"Overall\"") != std::string::npos);
}
