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

#include "accucheck/corpus.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "accucheck/gsml.h"

namespace accucheck {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TextIndex LoadTexts(const fs::path &dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  TextIndex texts;
  for (const auto &entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const fs::path parent = entry.path().parent_path();
    std::string system = fs::equivalent(parent, dir) ? "" : parent.filename().string();
    TokenizedText text =
        MakeText(entry.path().stem().string(), ReadFile(entry.path()), std::move(system));
    const std::string id = text.doc_id;
    if (!texts.emplace(id, std::move(text)).second) {
      throw std::runtime_error("duplicate text id " + id);
    }
  }
  return texts;
}

std::map<std::string, std::string> ReadKeyValueCsv(const fs::path &path) {
  const auto records = ParseCsv(ReadFile(path));
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto &rec = records[i];
    if (rec.fields.size() < 2) {
      throw std::runtime_error(path.string() + ":" + std::to_string(rec.line) +
                               ": expected two columns");
    }
    out[rec.fields[0]] = rec.fields[1];
  }
  return out;
}

void AssignSystems(TextIndex &texts, const std::map<std::string, std::string> &systems) {
  for (auto &[id, text] : texts) {
    if (auto it = systems.find(id); it != systems.end()) text.system_id = it->second;
  }
}

std::map<std::string, GameData> LoadGames(const fs::path &dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::map<std::string, GameData> games;
  for (const auto &entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    GameData game = LoadGameFile(entry.path());
    const std::string id = game.game_id;
    games.emplace(id, std::move(game));
  }
  return games;
}

}  // namespace accucheck
