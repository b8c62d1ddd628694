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

#include "accucheck/numbers.h"

#include <string>
#include <vector>

#include "doctest.h"

using namespace accucheck;

namespace {

std::optional<NumberMatch> At(const std::string &text, int pos) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text + " ") {
    if (c == ' ') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return ParseNumberToken(tokens, pos);
}

}  // namespace

TEST_CASE("digits and spelled numbers") {
  CHECK(At("scored 22 points", 1)->value == 22);
  CHECK(At("grabbed six rebounds", 1)->value == 6);
  CHECK(At("Six rebounds", 0)->value == 6);
  CHECK(At("had nineteen points", 1)->value == 19);
  CHECK(At("had twenty-two points", 1)->value == 22);
  CHECK(At("had forty points", 1)->value == 40);
  CHECK_FALSE(At("scored points", 1));
  CHECK_FALSE(At("1234567", 0));
}

TEST_CASE("split compound numbers span three tokens") {
  auto m = At("scored twenty - two points", 1);
  REQUIRE(m);
  CHECK(m->value == 22);
  CHECK(m->start == 1);
  CHECK(m->end == 3);
}

TEST_CASE("a or an before a singular stat means one") {
  CHECK(At("added an assist", 1)->value == 1);
  CHECK(At("and a rebound", 1)->value == 1);
  CHECK_FALSE(At("a strong half", 0));
  auto h = At("a hundred points", 0);
  REQUIRE(h);
  CHECK(h->value == 100);
  CHECK(h->end == 1);
}

TEST_CASE("positions outside the token list") {
  CHECK_FALSE(At("one", 1));
  CHECK_FALSE(At("one", -1));
}
