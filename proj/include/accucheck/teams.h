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

#ifndef ACCUCHECK_TEAMS_H_
#define ACCUCHECK_TEAMS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accucheck {

struct KnownTeam {
  std::string_view city;
  std::string_view nickname;
};

// The league's franchises at the time of the Rotowire corpus.
std::span<const KnownTeam> KnownTeams();

// Lower-cased canonical nickname for an alias ("sixers" -> "76ers"), or the
// lower-cased input when it has no alias.
std::string CanonicalNickname(std::string_view nickname);
// Same for cities ("philly" -> "philadelphia").
std::string CanonicalCity(std::string_view city);

std::string ToLower(std::string_view s);
// Splits on ASCII spaces, dropping empty pieces.
std::vector<std::string> SplitWords(std::string_view s);

}  // namespace accucheck

#endif  // ACCUCHECK_TEAMS_H_
