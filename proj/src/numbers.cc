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

#include <array>
#include <charconv>

#include "accucheck/teams.h"

namespace accucheck {

namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 8> kTens = {
    "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

// Singular nouns after which "a"/"an" denotes the quantity one.
constexpr std::array<std::string_view, 12> kSingularQuantities = {
    "point",   "rebound", "assist", "steal", "block", "turnover",
    "board",   "three",   "three-pointer", "basket", "dime", "foul"};

std::optional<int> Units(std::string_view w) {
  for (std::size_t i = 0; i < kUnits.size(); ++i)
    if (w == kUnits[i]) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Tens(std::string_view w) {
  for (std::size_t i = 0; i < kTens.size(); ++i)
    if (w == kTens[i]) return static_cast<int>(20 + 10 * i);
  return std::nullopt;
}

}  // namespace

bool IsDigits(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<int> SpelledNumber(std::string_view token) {
  const std::string w = ToLower(token);
  if (auto u = Units(w)) return u;
  if (auto t = Tens(w)) return t;
  if (w == "hundred") return 100;
  if (auto dash = w.find('-'); dash != std::string::npos) {
    auto t = Tens(std::string_view(w).substr(0, dash));
    auto u = Units(std::string_view(w).substr(dash + 1));
    if (t && u && *u >= 1 && *u <= 9) return *t + *u;
  }
  return std::nullopt;
}

std::optional<NumberMatch> ParseNumberToken(std::span<const std::string> tokens, int pos) {
  const int n = static_cast<int>(tokens.size());
  if (pos < 0 || pos >= n) return std::nullopt;
  const std::string &tok = tokens[pos];
  if (IsDigits(tok)) {
    if (tok.size() > 6) return std::nullopt;
    int v = 0;
    std::from_chars(tok.data(), tok.data() + tok.size(), v);
    return NumberMatch{v, pos, pos};
  }
  const std::string lower = ToLower(tok);
  auto next_lower = [&](int k) { return pos + k < n ? ToLower(tokens[pos + k]) : std::string(); };

  if (lower == "a" || lower == "an" || lower == "one") {
    if (next_lower(1) == "hundred") return NumberMatch{100, pos, pos + 1};
  }
  if (lower == "a" || lower == "an") {
    const std::string next = next_lower(1);
    for (std::string_view q : kSingularQuantities)
      if (next == q) return NumberMatch{1, pos, pos};
    return std::nullopt;
  }
  if (auto tens = Tens(lower)) {
    // "twenty - two" split by the tokenizer.
    if (next_lower(1) == "-") {
      if (auto u = Units(next_lower(2)); u && *u >= 1 && *u <= 9) {
        return NumberMatch{*tens + *u, pos, pos + 2};
      }
    }
    return NumberMatch{*tens, pos, pos};
  }
  if (auto v = SpelledNumber(lower)) return NumberMatch{*v, pos, pos};
  return std::nullopt;
}

}  // namespace accucheck
