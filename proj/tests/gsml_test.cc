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

#include "accucheck/gsml.h"

#include <random>

#include "accucheck/corpus.h"
#include "doctest.h"
#include "support/oracles.h"

using namespace accucheck;

namespace {

const std::string kRecapDir = std::string(ACCUCHECK_FIXTURE_DIR) + "/memphis_phoenix";

}  // namespace

TEST_CASE("rows map directly onto mistakes") {
  const MistakeList list = ParseGsml("TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE\nG1,3,3,NUMBER,\"should be 0\"\n");
  REQUIRE(list.size() == 1);
  CHECK(list[0] == Mistake{"G1", 3, 3, MistakeCategory::kNumber, "should be 0"});
}

TEST_CASE("bad rows are rejected with their line number") {
  const std::string header = "TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE\n";
  try {
    ParseGsml(header + "G1,1,1,NAME,\nG1,5,2,WORD,\n");
    FAIL("expected GsmlError");
  } catch (const GsmlError &e) {
    CHECK(e.row() == 3);
  }
  CHECK_THROWS_AS(ParseGsml(header + "G1,1,1,SPELLING,\n"), GsmlError);
  CHECK_THROWS_AS(ParseGsml(header + "G1,-1,1,NAME,\n"), GsmlError);
  CHECK_THROWS_AS(ParseGsml(header + "G1,x,1,NAME,\n"), GsmlError);
  CHECK_THROWS_AS(ParseGsml(header + "G1,1,1,NAME,\nG1,1,1,NAME,\n"), GsmlError);
  CHECK_THROWS_AS(ParseGsml("A,B\n"), GsmlError);

  TextIndex texts;
  texts.emplace("G1", testing::PlainText("G1", 5));
  GsmlReadOptions opts;
  opts.texts = &texts;
  CHECK_THROWS_AS(ParseGsml(header + "G1,4,5,NAME,\n", opts), GsmlError);
  CHECK_THROWS_AS(ParseGsml(header + "G2,0,0,NAME,\n", opts), GsmlError);
  CHECK(ParseGsml(header + "G1,4,4,NAME,\n", opts).size() == 1);
}

TEST_CASE("empty list writes a header-only file") {
  CHECK(WriteGsml({}) == std::string(kGsmlHeader) + "\n");
  CHECK(ParseGsml(WriteGsml({})).empty());
}

TEST_CASE("notes with commas, quotes and newlines round-trip") {
  const MistakeList list = {{"a", 0, 2, MistakeCategory::kWord, "led, not \"scored\"\nsee box"},
                            {"b,c", 1, 1, MistakeCategory::kOther, ""}};
  CHECK(ParseGsml(WriteGsml(list)) == list);
}

TEST_CASE("write then parse is the identity on random lists") {
  std::mt19937 rng(7);
  const std::string notes[] = {"", "should be 46", "a,b", "\"quoted\"", "two\nlines", "ünïcode"};
  for (int trial = 0; trial < 300; ++trial) {
    MistakeList list;
    for (int d = 0; d < 3; ++d) {
      MistakeList part = testing::RandomMistakes(rng, "doc" + std::to_string(d), 40, 6);
      for (Mistake &m : part) m.note = notes[rng() % std::size(notes)];
      list.insert(list.end(), part.begin(), part.end());
    }
    SortMistakes(list);
    MistakeList back = ParseGsml(WriteGsml(list));
    SortMistakes(back);
    REQUIRE(back == list);
  }
}

TEST_CASE("published column layout and one-based indices") {
  const std::string published =
      "TEXT_ID,SENTENCE_ID,ANNOTATION_ID,TOKENS,SENT_TOKEN_START,SENT_TOKEN_END,DOC_TOKEN_START,"
      "DOC_TOKEN_END,TYPE,CORRECTION,COMMENT\n"
      "t1,1,1,Monday,18,18,18,18,NAME,Wednesday,\n";
  GsmlReadOptions opts;
  opts.index_base = 1;
  const MistakeList list = ParseGsml(published, opts);
  REQUIRE(list.size() == 1);
  CHECK(list[0].start == 17);
  CHECK(list[0].category == MistakeCategory::kName);
  CHECK(list[0].note == "Wednesday");
  CHECK(ParseGsml(published)[0].start == 18);
}

TEST_CASE("the recap gold file is valid against its text") {
  const TextIndex texts = LoadTexts(kRecapDir + "/texts");
  GsmlReadOptions opts;
  opts.texts = &texts;
  const MistakeList gold = ReadGsmlFile(kRecapDir + "/gold.csv", opts);
  CHECK(gold.size() == 10);
  CHECK(ValidateMistakes(gold, texts).ok());
  const auto &tokens = texts.at("recap").tokens;
  CHECK(tokens[gold[0].start] == "2");
  CHECK(tokens[gold[1].start] == "Monday");
  CHECK(tokens[gold[4].start] == "out-scored");
}

TEST_CASE("csv records keep quoted line breaks") {
  const auto records = ParseCsv("a,\"b\nc\",d\n\n\"e\"\"f\",g\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].fields[1] == "b\nc");
  CHECK(records[1].line == 4);
  CHECK(records[1].fields[0] == "e\"f");
  CHECK(CsvEscape("x,y") == "\"x,y\"");
  CHECK(CsvEscape("plain") == "plain");
}
