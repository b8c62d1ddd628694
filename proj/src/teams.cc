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

#include "accucheck/teams.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace accucheck {
namespace {

constexpr std::array<KnownTeam, 30> kTeams = {{
    {"Atlanta", "Hawks"},          {"Boston", "Celtics"},
    {"Brooklyn", "Nets"},          {"Charlotte", "Hornets"},
    {"Chicago", "Bulls"},          {"Cleveland", "Cavaliers"},
    {"Dallas", "Mavericks"},       {"Denver", "Nuggets"},
    {"Detroit", "Pistons"},        {"Golden State", "Warriors"},
    {"Houston", "Rockets"},        {"Indiana", "Pacers"},
    {"Los Angeles", "Clippers"},   {"Los Angeles", "Lakers"},
    {"Memphis", "Grizzlies"},      {"Miami", "Heat"},
    {"Milwaukee", "Bucks"},        {"Minnesota", "Timberwolves"},
    {"New Orleans", "Pelicans"},   {"New York", "Knicks"},
    {"Oklahoma City", "Thunder"},  {"Orlando", "Magic"},
    {"Philadelphia", "76ers"},     {"Phoenix", "Suns"},
    {"Portland", "Trail Blazers"}, {"Sacramento", "Kings"},
    {"San Antonio", "Spurs"},      {"Toronto", "Raptors"},
    {"Utah", "Jazz"},              {"Washington", "Wizards"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 11>
    kNicknameAliases = {{
        {"sixers", "76ers"},
        {"blazers", "trail blazers"},
        {"cavs", "cavaliers"},
        {"mavs", "mavericks"},
        {"wolves", "timberwolves"},
        {"t-wolves", "timberwolves"},
        {"pels", "pelicans"},
        {"knickerbockers", "knicks"},
        {"dubs", "warriors"},
        {"nugs", "nuggets"},
        {"raps", "raptors"},
    }};

constexpr std::array<std::pair<std::string_view, std::string_view>, 5>
    kCityAliases = {{
        {"philly", "philadelphia"},
        {"la", "los angeles"},
        {"l.a.", "los angeles"},
        {"okc", "oklahoma city"},
        {"ny", "new york"},
    }};

}  // namespace

std::span<const KnownTeam> KnownTeams() { return kTeams; }

std::string ToLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string CanonicalNickname(std::string_view nickname) {
  std::string lower = ToLower(nickname);
  for (const auto &[alias, canonical] : kNicknameAliases) {
    if (lower == alias) return std::string(canonical);
  }
  return lower;
}

std::string CanonicalCity(std::string_view city) {
  std::string lower = ToLower(city);
  for (const auto &[alias, canonical] : kCityAliases) {
    if (lower == alias) return std::string(canonical);
  }
  return lower;
}

}  // namespace accucheck
