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

// accucheck: command-line front end for the accuracy-evaluation toolkit.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "accucheck/analysis.h"
#include "accucheck/annotation.h"
#include "accucheck/corpus.h"
#include "accucheck/fact_checker.h"
#include "accucheck/game_data.h"
#include "accucheck/gsml.h"
#include "accucheck/scorer.h"
#include "accucheck/service.h"
#include "accucheck/session.h"
#include "json.hpp"

namespace {

using namespace accucheck;

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

ReportFormat ParseFormat(const std::string &s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  return ReportFormat::kTable;
}

MistakeList ReadList(const std::string &path, const TextIndex *texts, int index_base) {
  GsmlReadOptions opts;
  opts.texts = texts;
  opts.index_base = index_base;
  return ReadGsmlFile(path, opts);
}

int ValidateGame(const std::string &file) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(ReadFile(file));
    GameData game;
    const auto failures = CheckGameDocument(doc, &game);
    if (failures.empty()) {
      std::cout << file << ": ok (" << game.players.size() << " players, "
                << game.home.FullName() << " " << game.home.total_points << ", "
                << game.visitor.FullName() << " " << game.visitor.total_points << ")\n";
      return 0;
    }
    for (const std::string &f : failures) std::cout << file << ": " << f << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cout << file << ": " << e.what() << "\n";
    return 1;
  }
}

int ValidateGsml(const std::string &gsml, const std::string &texts_dir, int index_base) {
  const TextIndex texts = LoadTexts(texts_dir);
  MistakeList list;
  try {
    list = ReadList(gsml, &texts, index_base);
  } catch (const GsmlError &e) {
    std::cout << gsml << ": " << e.what() << "\n";
    return 1;
  }
  const ValidationReport report = ValidateMistakes(list, texts);
  if (report.ok()) {
    std::cout << gsml << ": ok (" << list.size() << " mistakes)\n";
    return 0;
  }
  std::cout << report.Summary();
  return 1;
}

struct ScoreArgs {
  std::string gold, submitted, texts, per_system, format = "table", match = "overlap";
  bool category_strict = false;
};

int Score(const ScoreArgs &a, int index_base) {
  TextIndex texts = LoadTexts(a.texts);
  const MistakeList gold = ReadList(a.gold, &texts, index_base);
  const MistakeList sub = ReadList(a.submitted, &texts, index_base);
  MatchOptions opts;
  opts.mode = a.match == "exact" ? MatchOptions::Mode::kExact : MatchOptions::Mode::kOverlap;
  opts.category_strict = a.category_strict;
  const ReportFormat format = ParseFormat(a.format);
  try {
    if (a.per_system.empty()) {
      std::cout << RenderReport(ComputeScores(gold, sub, texts, opts), format);
      return 0;
    }
    AssignSystems(texts, ReadKeyValueCsv(a.per_system));
    std::map<std::string, std::pair<MistakeList, MistakeList>> split;
    for (const auto &[id, t] : texts) split[t.system_id];
    for (const Mistake &m : gold) split[texts.at(m.doc_id).system_id].first.push_back(m);
    for (const Mistake &m : sub) split[texts.at(m.doc_id).system_id].second.push_back(m);
    for (const auto &[system, lists] : split) {
      std::cout << "== " << (system.empty() ? "(no system)" : system) << "\n"
                << RenderReport(ComputeScores(lists.first, lists.second, texts, opts), format);
    }
    return 0;
  } catch (const ScoreError &e) {
    std::cerr << "score: " << e.what() << "\n";
    return 1;
  }
}

int BlindSpotCmd(const std::string &gold_path, const std::vector<std::string> &subs,
                 const std::string &texts_dir, const std::string &out, int index_base) {
  TextIndex texts;
  if (!texts_dir.empty()) texts = LoadTexts(texts_dir);
  const TextIndex *tp = texts_dir.empty() ? nullptr : &texts;
  const MistakeList gold = ReadList(gold_path, tp, index_base);
  std::vector<MistakeList> lists;
  for (const std::string &s : subs) lists.push_back(ReadList(s, tp, index_base));
  const MistakeList missed = BlindSpot(gold, lists);
  if (out.empty()) {
    std::cout << WriteGsml(missed);
  } else {
    WriteGsmlFile(out, missed);
  }
  return 0;
}

// Runs the checker over every mapped text.
MistakeList RunChecker(const TextIndex &texts, const std::map<std::string, GameData> &games,
                       const std::map<std::string, std::string> &map, const CheckOptions &opts) {
  MistakeList all;
  for (const auto &[text_id, game_id] : map) {
    auto t = texts.find(text_id);
    auto g = games.find(game_id);
    if (t == texts.end() || g == games.end()) {
      std::cerr << "check: skipping " << text_id << " (" << (t == texts.end() ? "no text" : "no game " + game_id)
                << ")\n";
      continue;
    }
    const MistakeList found = CheckDocument(t->second, g->second, opts);
    all.insert(all.end(), found.begin(), found.end());
  }
  return all;
}

int Check(const std::string &texts_dir, const std::string &games_dir, const std::string &map_path,
          const std::string &out, bool led_strict) {
  const TextIndex texts = LoadTexts(texts_dir);
  const auto games = LoadGames(games_dir);
  CheckOptions opts;
  opts.led_strict = led_strict;
  const MistakeList all = RunChecker(texts, games, ReadKeyValueCsv(map_path), opts);
  if (out.empty() || out == "-") {
    std::cout << WriteGsml(all);
  } else {
    WriteGsmlFile(out, all);
    std::cerr << "check: " << all.size() << " mistakes written to " << out << "\n";
  }
  return 0;
}

struct AnalyzeArgs {
  std::string gold, texts, games, systems, report = "freq", format = "table";
  std::vector<std::string> categories;
  int min_count = 0;
};

int Analyze(const AnalyzeArgs &a, int index_base) {
  TextIndex texts = LoadTexts(a.texts);
  if (!a.systems.empty()) AssignSystems(texts, ReadKeyValueCsv(a.systems));
  const MistakeList gold = ReadList(a.gold, &texts, index_base);
  const ReportFormat format = ParseFormat(a.format);
  if (a.report == "freq") {
    const SurfaceLexicon lexicon = a.games.empty() ? SurfaceLexicon() : SurfaceLexicon(LoadGames(a.games));
    std::cout << RenderFrequencyTable(FrequencyTable(gold, texts, lexicon), format, a.min_count);
  } else if (a.report == "systems") {
    std::cout << RenderProfiles(SystemProfile(gold, texts), format);
  } else if (a.report == "positions") {
    if (a.categories.empty()) {
      std::cout << RenderHistogram(BuildPositionHistogram(gold, texts), format);
    }
    for (const std::string &name : a.categories) {
      auto c = ParseCategoryLabel(name);
      if (!c) throw CLI::ValidationError("--category", "unknown category " + name);
      std::cout << RenderHistogram(BuildPositionHistogram(gold, texts, c), format);
    }
  } else if (a.report == "totals") {
    const auto totals = CategoryTotals(gold);
    std::cout << (format == ReportFormat::kCsv ? "CATEGORY,COUNT\n" : "");
    for (MistakeCategory c : kAllCategories) {
      if (format == ReportFormat::kCsv) {
        std::cout << CategoryLabel(c) << "," << totals[static_cast<int>(c)] << "\n";
      } else {
        std::printf("%-14s %6d\n", std::string(CategoryTitle(c)).c_str(), totals[static_cast<int>(c)]);
      }
    }
  }
  return 0;
}

struct ServeArgs {
  std::string texts, games, map, pre, state, host = "127.0.0.1", token;
  int port = 8080;
};

int Serve(const ServeArgs &a, int index_base) {
  const TextIndex texts = LoadTexts(a.texts);
  ServiceOptions opts;
  opts.token = a.token;
  if (!a.pre.empty()) {
    opts.pre_annotations = ReadList(a.pre, &texts, index_base);
  } else if (!a.games.empty() && !a.map.empty()) {
    opts.pre_annotations = RunChecker(texts, LoadGames(a.games), ReadKeyValueCsv(a.map), {});
  }
  SessionStore store(a.state, texts);
  AnnotationService service(store, opts);
  if (!service.Bind(a.host, a.port)) {
    std::cerr << "serve: cannot bind " << a.host << ":" << a.port << "\n";
    return 1;
  }
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  std::thread watcher([&] {
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    service.Stop();
  });
  std::cerr << "serve: listening on " << a.host << ":" << service.port() << " ("
            << opts.pre_annotations.size() << " suggestions, " << texts.size() << " texts)\n";
  service.Serve();
  g_stop = true;
  watcher.join();
  store.Close();
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"accucheck: accuracy evaluation of generated sports summaries"};
  app.require_subcommand(1);
  int index_base = 0;
  app.add_option("--index-base", index_base, "base of token indices in input GSML files")
      ->check(CLI::IsMember({0, 1}));

  std::string game_file;
  auto *vg = app.add_subcommand("validate-game", "check a box-score JSON file");
  vg->add_option("file", game_file)->required()->check(CLI::ExistingFile);

  std::string gsml, texts_dir;
  auto *vs = app.add_subcommand("validate-gsml", "check a GSML file against its texts");
  vs->add_option("--gsml", gsml)->required()->check(CLI::ExistingFile);
  vs->add_option("--texts", texts_dir)->required()->check(CLI::ExistingDirectory);

  ScoreArgs sa;
  auto *sc = app.add_subcommand("score", "score a submission against gold");
  sc->add_option("--gold", sa.gold)->required()->check(CLI::ExistingFile);
  sc->add_option("--submitted", sa.submitted)->required()->check(CLI::ExistingFile);
  sc->add_option("--texts", sa.texts)->required()->check(CLI::ExistingDirectory);
  sc->add_option("--per-system", sa.per_system, "text-id,system-id map")->check(CLI::ExistingFile);
  sc->add_option("--format", sa.format)->check(CLI::IsMember({"table", "csv", "json"}));
  sc->add_option("--match", sa.match)->check(CLI::IsMember({"overlap", "exact"}));
  sc->add_flag("--category-strict", sa.category_strict, "require equal categories for Overall");

  std::string bs_gold, bs_texts, bs_out;
  std::vector<std::string> bs_subs;
  auto *bs = app.add_subcommand("blind-spot", "gold mistakes missed by every submission");
  bs->add_option("--gold", bs_gold)->required()->check(CLI::ExistingFile);
  bs->add_option("--submitted", bs_subs)->required()->check(CLI::ExistingFile);
  bs->add_option("--texts", bs_texts)->check(CLI::ExistingDirectory);
  bs->add_option("--out", bs_out);

  std::string ck_texts, ck_games, ck_map, ck_out;
  bool led_strict = false;
  auto *ck = app.add_subcommand("check", "run the rule-based checker");
  ck->add_option("--texts", ck_texts)->required()->check(CLI::ExistingDirectory);
  ck->add_option("--games", ck_games)->required()->check(CLI::ExistingDirectory);
  ck->add_option("--map", ck_map, "text-id,game-id map")->required()->check(CLI::ExistingFile);
  ck->add_option("--out", ck_out, "output GSML (default stdout)");
  ck->add_flag("--led-strict", led_strict, "report refuted led claims as warnings only");

  AnalyzeArgs aa;
  auto *an = app.add_subcommand("analyze", "corpus statistics over a gold GSML");
  an->add_option("--gold", aa.gold)->required()->check(CLI::ExistingFile);
  an->add_option("--texts", aa.texts)->required()->check(CLI::ExistingDirectory);
  an->add_option("--games", aa.games)->check(CLI::ExistingDirectory);
  an->add_option("--systems", aa.systems, "text-id,system-id map")->check(CLI::ExistingFile);
  an->add_option("--report", aa.report)->check(CLI::IsMember({"freq", "systems", "positions", "totals"}));
  an->add_option("--category", aa.categories, "category filter for positions");
  an->add_option("--format", aa.format)->check(CLI::IsMember({"table", "csv", "json"}));
  an->add_option("--min-count", aa.min_count, "hide frequency rows below this count");

  ServeArgs va;
  auto *sv = app.add_subcommand("serve", "run the annotation service");
  sv->add_option("--texts", va.texts)->required()->check(CLI::ExistingDirectory);
  sv->add_option("--games", va.games)->check(CLI::ExistingDirectory);
  sv->add_option("--map", va.map)->check(CLI::ExistingFile);
  sv->add_option("--pre", va.pre, "pre-annotation GSML")->check(CLI::ExistingFile);
  sv->add_option("--state", va.state)->required();
  sv->add_option("--port", va.port);
  sv->add_option("--host", va.host);
  sv->add_option("--token", va.token, "static bearer token");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vg) return ValidateGame(game_file);
    if (*vs) return ValidateGsml(gsml, texts_dir, index_base);
    if (*sc) return Score(sa, index_base);
    if (*bs) return BlindSpotCmd(bs_gold, bs_subs, bs_texts, bs_out, index_base);
    if (*ck) return Check(ck_texts, ck_games, ck_map, ck_out, led_strict);
    if (*an) return Analyze(aa, index_base);
    if (*sv) return Serve(va, index_base);
  } catch (const GsmlError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
