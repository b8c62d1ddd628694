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

#ifndef ACCUCHECK_CORPUS_H_
#define ACCUCHECK_CORPUS_H_

#include <filesystem>
#include <map>
#include <string>

#include "accucheck/annotation.h"
#include "accucheck/game_data.h"

namespace accucheck {

// Loads every *.txt token file under `dir` (recursively). The file stem is
// the text id. A file inside a sub-directory takes the sub-directory name as
// its system id.
TextIndex LoadTexts(const std::filesystem::path &dir);

// Reads a two-column CSV (header row first) into a key -> value map. Used for
// text-id -> game-id and text-id -> system-id maps.
std::map<std::string, std::string> ReadKeyValueCsv(const std::filesystem::path &path);

// Overrides system ids from a text-id -> system-id map.
void AssignSystems(TextIndex &texts, const std::map<std::string, std::string> &systems);

// Loads every *.json game under `dir`, keyed by game id.
std::map<std::string, GameData> LoadGames(const std::filesystem::path &dir);

std::string ReadFile(const std::filesystem::path &path);

}  // namespace accucheck

#endif  // ACCUCHECK_CORPUS_H_
