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

#ifndef ACCUCHECK_NUMBERS_H_
#define ACCUCHECK_NUMBERS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace accucheck {

// A number found in a token stream. start/end are inclusive token indices.
struct NumberMatch {
  int value = 0;
  int start = 0;
  int end = 0;
};

// Recognizes a number beginning at `pos`:
//   digits                          "22"
//   spelled zero..ninety-nine        "six", "twenty-two", "twenty - two"
//   hundred                          "hundred", "one hundred", "a hundred"
//   a / an before a singular stat    "an assist", "a rebound"
// Never spans more than three tokens. Returns nullopt for anything else,
// including an out-of-range position.
std::optional<NumberMatch> ParseNumberToken(std::span<const std::string> tokens, int pos);

// Value of a single token that is a spelled number ("six", "twenty-two").
std::optional<int> SpelledNumber(std::string_view token);

bool IsDigits(std::string_view token);

}  // namespace accucheck

#endif  // ACCUCHECK_NUMBERS_H_
