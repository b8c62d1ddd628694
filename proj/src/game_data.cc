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

#include "accucheck/game_data.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>

#include "accucheck/teams.h"

namespace accucheck {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Monday", "Tuesday",  "Wednesday", "Thursday",
    "Friday", "Saturday", "Sunday"};

std::string Join(const std::vector<std::string> &items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

bool IsMissing(const json &v) {
  if (v.is_null()) return true;
  if (!v.is_string()) return false;
  const auto &s = v.get_ref<const std::string &>();
  return s.empty() || s == "N/A" || s == "NA";
}

// Parses a non-negative integer held either as a JSON number or a string.
// Minutes may be given as "mm:ss"; seconds are truncated.
int ParseCount(const json &v, const std::string &field, bool minutes = false) {
  if (v.is_number_integer()) {
    const auto n = v.get<long long>();
    if (n < 0) throw ParseError(field, "must be non-negative");
    return static_cast<int>(n);
  }
  if (v.is_number_float() && minutes) {
    const double d = v.get<double>();
    if (d < 0) throw ParseError(field, "must be non-negative");
    return static_cast<int>(d);
  }
  if (!v.is_string()) throw ParseError(field, "expected an integer");
  std::string_view s = v.get_ref<const std::string &>();
  if (minutes) {
    if (auto colon = s.find(':'); colon != std::string_view::npos) {
      s = s.substr(0, colon);
    }
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(field, "expected an integer, got \"" + std::string(s) + "\"");
  }
  if (n < 0) throw ParseError(field, "must be non-negative");
  return n;
}

std::string ParseText(const json &obj, const std::string &key,
                      const std::string &where) {
  const std::string field = where + "." + key;
  if (!obj.contains(key)) throw ParseError(field, "missing");
  const json &v = obj.at(key);
  if (!v.is_string()) throw ParseError(field, "expected a string");
  return v.get<std::string>();
}

TeamLine ParseTeamLine(const json &doc, const std::string &key) {
  if (!doc.contains(key)) throw ParseError(key, "missing");
  const json &line = doc.at(key);
  if (!line.is_object()) throw ParseError(key, "expected an object");
  auto count = [&](const std::string &k) {
    if (!line.contains(k)) throw ParseError(key + "." + k, "missing");
    return ParseCount(line.at(k), key + "." + k);
  };
  TeamLine team;
  team.city = ParseText(line, "TEAM-CITY", key);
  team.nickname = ParseText(line, "TEAM-NAME", key);
  team.wins = count("TEAM-WINS");
  team.losses = count("TEAM-LOSSES");
  team.total_points = count("TEAM-PTS");
  for (int q = 0; q < 4; ++q) {
    team.quarter_points[q] = count("TEAM-PTS_QTR" + std::to_string(q + 1));
  }
  if (line.contains("TEAM-PTS_OT")) {
    const json &ot = line.at("TEAM-PTS_OT");
    if (!ot.is_array()) throw ParseError(key + ".TEAM-PTS_OT", "expected an array");
    for (std::size_t i = 0; i < ot.size(); ++i) {
      team.overtime_points.push_back(
          ParseCount(ot[i], key + ".TEAM-PTS_OT[" + std::to_string(i) + "]"));
    }
  } else {
    for (int p = 1; line.contains("TEAM-PTS_OT" + std::to_string(p)); ++p) {
      const std::string k = "TEAM-PTS_OT" + std::to_string(p);
      if (IsMissing(line.at(k))) break;
      team.overtime_points.push_back(ParseCount(line.at(k), key + "." + k));
    }
  }
  return team;
}

std::optional<Weekday> WeekdayFromDate(int year, unsigned month, unsigned day) {
  using namespace std::chrono;
  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                           std::chrono::day{day}};
  if (!ymd.ok()) return std::nullopt;
  const std::chrono::weekday wd{sys_days{ymd}};
  // iso_encoding: Monday = 1 ... Sunday = 7.
  return static_cast<Weekday>(wd.iso_encoding() - 1);
}

// Accepts a weekday name, "MM_DD_YY" (Rotowire), or "YYYY-MM-DD".
Weekday ParseDay(const json &doc) {
  if (!doc.contains("day")) throw ParseError("day", "missing");
  if (!doc.at("day").is_string()) throw ParseError("day", "expected a string");
  const std::string s = doc.at("day").get<std::string>();
  if (auto wd = ParseWeekday(s)) return *wd;
  auto number = [&](std::string_view part) {
    int n = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
    if (ec != std::errc() || ptr != part.data() + part.size()) return -1;
    return n;
  };
  std::optional<Weekday> wd;
  if (s.size() == 8 && s[2] == '_' && s[5] == '_') {
    const int m = number(std::string_view(s).substr(0, 2));
    const int d = number(std::string_view(s).substr(3, 2));
    const int y = number(std::string_view(s).substr(6, 2));
    if (m > 0 && d > 0 && y >= 0) wd = WeekdayFromDate(2000 + y, m, d);
  } else if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
    const int y = number(std::string_view(s).substr(0, 4));
    const int m = number(std::string_view(s).substr(5, 2));
    const int d = number(std::string_view(s).substr(8, 2));
    if (m > 0 && d > 0 && y >= 0) wd = WeekdayFromDate(y, m, d);
  }
  if (!wd) throw ParseError("day", "expected a weekday or date, got \"" + s + "\"");
  return *wd;
}

Side PlayerSide(const json &box, const std::string &idx, const TeamLine &home,
                const TeamLine &visitor) {
  const std::string field = "box_score.TEAM_CITY." + idx;
  const json &cities = box.at("TEAM_CITY");
  if (!cities.contains(idx) || !cities.at(idx).is_string()) {
    throw ParseError(field, "missing");
  }
  const std::string city = CanonicalCity(cities.at(idx).get<std::string>());
  const bool home_match = city == CanonicalCity(home.city);
  const bool vis_match = city == CanonicalCity(visitor.city);
  if (home_match && vis_match) {
    // Shared city; disambiguate with the optional per-player team name.
    if (box.contains("TEAM_NAME") && box.at("TEAM_NAME").contains(idx)) {
      const std::string nick =
          CanonicalNickname(box.at("TEAM_NAME").at(idx).get<std::string>());
      if (nick == CanonicalNickname(home.nickname)) return Side::kHome;
      if (nick == CanonicalNickname(visitor.nickname)) return Side::kVisitor;
    }
    throw ParseError(field, "both teams share this city; TEAM_NAME required");
  }
  if (home_match) return Side::kHome;
  if (vis_match) return Side::kVisitor;
  throw ParseError(field, "city \"" + cities.at(idx).get<std::string>() +
                              "\" matches neither team");
}

std::vector<PlayerLine> ParsePlayers(const json &doc, const TeamLine &home,
                                     const TeamLine &visitor) {
  if (!doc.contains("box_score")) throw ParseError("box_score", "missing");
  const json &box = doc.at("box_score");
  if (!box.is_object()) throw ParseError("box_score", "expected an object");
  static constexpr std::array<std::string_view, 16> kRequired = {
      "PLAYER_NAME", "TEAM_CITY", "START_POSITION", "MIN",  "PTS", "REB",
      "AST",         "STL",       "BLK",            "TO",   "FGM", "FGA",
      "FG3M",        "FG3A",      "FTM",            "FTA"};
  for (std::string_view k : kRequired) {
    const std::string key(k);
    if (!box.contains(key)) throw ParseError("box_score." + key, "missing");
    if (!box.at(key).is_object()) {
      throw ParseError("box_score." + key, "expected an object");
    }
  }

  // Player indices are string keys ("0", "1", ...); keep numeric order.
  std::vector<std::string> indices;
  for (const auto &[idx, _] : box.at("PLAYER_NAME").items()) indices.push_back(idx);
  std::sort(indices.begin(), indices.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<PlayerLine> players;
  for (const std::string &idx : indices) {
    auto value = [&](std::string_view stat) -> const json & {
      const json &column = box.at(std::string(stat));
      if (!column.contains(idx)) {
        throw ParseError("box_score." + std::string(stat) + "." + idx, "missing");
      }
      return column.at(idx);
    };
    auto count = [&](std::string_view stat) {
      return ParseCount(value(stat), "box_score." + std::string(stat) + "." + idx);
    };
    PlayerLine p;
    const json &name = value("PLAYER_NAME");
    if (!name.is_string()) {
      throw ParseError("box_score.PLAYER_NAME." + idx, "expected a string");
    }
    p.name = name.get<std::string>();
    p.side = PlayerSide(box, idx, home, visitor);
    p.starter = !IsMissing(value("START_POSITION"));
    p.played = !IsMissing(value("MIN"));
    if (p.played) {
      p.minutes = ParseCount(value("MIN"), "box_score.MIN." + idx, true);
      p.points = count("PTS");
      p.rebounds = count("REB");
      p.assists = count("AST");
      p.steals = count("STL");
      p.blocks = count("BLK");
      p.turnovers = count("TO");
      p.field_goals = {count("FGM"), count("FGA")};
      p.three_pointers = {count("FG3M"), count("FG3A")};
      p.free_throws = {count("FTM"), count("FTA")};
    }
    players.push_back(std::move(p));
  }
  return players;
}

}  // namespace

std::string_view SideName(Side s) {
  return s == Side::kHome ? "home" : "visitor";
}

std::string_view WeekdayName(Weekday d) {
  return kWeekdayNames[static_cast<int>(d)];
}

std::optional<Weekday> ParseWeekday(std::string_view text) {
  const std::string lower = ToLower(text);
  for (std::size_t i = 0; i < kWeekdayNames.size(); ++i) {
    if (lower == ToLower(kWeekdayNames[i])) return static_cast<Weekday>(i);
  }
  return std::nullopt;
}

std::string_view StatName(Stat s) {
  switch (s) {
    case Stat::kPoints: return "points";
    case Stat::kRebounds: return "rebounds";
    case Stat::kAssists: return "assists";
    case Stat::kSteals: return "steals";
    case Stat::kBlocks: return "blocks";
    case Stat::kTurnovers: return "turnovers";
  }
  return "?";
}

std::string_view PeriodName(Period p) {
  switch (p) {
    case Period::kQ1: return "Q1";
    case Period::kQ2: return "Q2";
    case Period::kQ3: return "Q3";
    case Period::kQ4: return "Q4";
    case Period::kH1: return "H1";
    case Period::kH2: return "H2";
    case Period::kGame: return "game";
  }
  return "?";
}

int PlayerLine::Get(Stat s) const {
  switch (s) {
    case Stat::kPoints: return points;
    case Stat::kRebounds: return rebounds;
    case Stat::kAssists: return assists;
    case Stat::kSteals: return steals;
    case Stat::kBlocks: return blocks;
    case Stat::kTurnovers: return turnovers;
  }
  return 0;
}

const PlayerLine *GameData::FindPlayer(std::string_view name) const {
  for (const PlayerLine &p : players) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

ValidationError::ValidationError(std::vector<std::string> failures)
    : DataError("invariant violations: " + Join(failures, "; ")),
      failures_(std::move(failures)) {}

std::vector<std::string> CheckInvariants(const GameData &game) {
  std::vector<std::string> failures;
  for (Side side : {Side::kHome, Side::kVisitor}) {
    const TeamLine &t = game.Team(side);
    int sum = 0;
    for (int q : t.quarter_points) sum += q;
    for (int ot : t.overtime_points) sum += ot;
    if (sum != t.total_points) {
      failures.push_back(std::string(SideName(side)) +
                         " team: total_points == sum of period points (" +
                         std::to_string(t.total_points) +
                         " != " + std::to_string(sum) + ")");
    }
  }
  if (game.home.total_points == game.visitor.total_points) {
    failures.push_back("game: exactly one team has more points (tied " +
                       std::to_string(game.home.total_points) + "-" +
                       std::to_string(game.visitor.total_points) + ")");
  }
  auto check = [&](const PlayerLine &p, int lhs, int rhs, std::string_view rule) {
    if (lhs > rhs) {
      failures.push_back("player '" + p.name + "': " + std::string(rule) + " (" +
                         std::to_string(lhs) + " > " + std::to_string(rhs) + ")");
    }
  };
  for (const PlayerLine &p : game.players) {
    if (!p.played) continue;
    check(p, p.field_goals.made, p.field_goals.attempted, "fgm <= fga");
    check(p, p.three_pointers.made, p.three_pointers.attempted, "tpm <= tpa");
    check(p, p.free_throws.made, p.free_throws.attempted, "ftm <= fta");
    check(p, p.three_pointers.made, p.field_goals.made, "tpm <= fgm");
  }
  return failures;
}

std::vector<std::string> CheckGameDocument(const json &doc, GameData *out) {
  if (!doc.is_object()) throw ParseError("<root>", "expected an object");
  GameData game;
  if (doc.contains("game_id") && doc.at("game_id").is_string()) {
    game.game_id = doc.at("game_id").get<std::string>();
  }
  game.home = ParseTeamLine(doc, "home_line");
  game.visitor = ParseTeamLine(doc, "vis_line");
  game.day_of_week = ParseDay(doc);
  game.players = ParsePlayers(doc, game.home, game.visitor);
  auto failures = CheckInvariants(game);
  if (out != nullptr) *out = std::move(game);
  return failures;
}

GameData LoadGame(const json &doc, std::string game_id) {
  GameData game;
  auto failures = CheckGameDocument(doc, &game);
  if (!failures.empty()) throw ValidationError(std::move(failures));
  if (!game_id.empty()) game.game_id = std::move(game_id);
  return game;
}

GameData LoadGameFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError("<document>", e.what());
  }
  std::string id;
  if (!(doc.is_object() && doc.contains("game_id"))) id = path.stem().string();
  return LoadGame(doc, id);
}

HalfScores HalftimeScores(const GameData &game) {
  return {PeriodPoints(game.home, Period::kH1),
          PeriodPoints(game.visitor, Period::kH1)};
}

int PeriodPoints(const TeamLine &team, Period period) {
  const auto &q = team.quarter_points;
  switch (period) {
    case Period::kQ1: return q[0];
    case Period::kQ2: return q[1];
    case Period::kQ3: return q[2];
    case Period::kQ4: return q[3];
    case Period::kH1: return q[0] + q[1];
    case Period::kH2: return q[2] + q[3];
    case Period::kGame: return team.total_points;
  }
  return 0;
}

std::string_view DoubleStatusName(DoubleStatus s) {
  switch (s) {
    case DoubleStatus::kNone: return "none";
    case DoubleStatus::kDoubleDouble: return "double-double";
    case DoubleStatus::kTripleDouble: return "triple-double";
    case DoubleStatus::kHigherDouble: return "higher-double";
  }
  return "?";
}

DoubleStatus DoubleDoubleStatus(const PlayerLine &player) {
  if (!player.played) {
    throw std::invalid_argument("player '" + player.name + "' did not play");
  }
  int n = 0;
  for (Stat s : {Stat::kPoints, Stat::kRebounds, Stat::kAssists, Stat::kSteals,
                 Stat::kBlocks}) {
    if (player.Get(s) >= 10) ++n;
  }
  if (n == 2) return DoubleStatus::kDoubleDouble;
  if (n == 3) return DoubleStatus::kTripleDouble;
  if (n >= 4) return DoubleStatus::kHigherDouble;
  return DoubleStatus::kNone;
}

std::vector<PlayerLine> TeamLeaders(const GameData &game, Side side, Stat stat,
                                    LeaderScope scope) {
  auto in_scope = [&](const PlayerLine &p) {
    if (!p.played || p.side != side) return false;
    if (scope == LeaderScope::kStarters) return p.starter;
    if (scope == LeaderScope::kBench) return !p.starter;
    return true;
  };
  int best = -1;
  for (const PlayerLine &p : game.players) {
    if (in_scope(p)) best = std::max(best, p.Get(stat));
  }
  if (best < 0) {
    throw std::invalid_argument("no player on the " + std::string(SideName(side)) +
                                " side played");
  }
  std::vector<PlayerLine> leaders;
  for (const PlayerLine &p : game.players) {
    if (in_scope(p) && p.Get(stat) == best) leaders.push_back(p);
  }
  return leaders;
}

Outcome GameOutcome(const GameData &game) {
  const int h = game.home.total_points;
  const int v = game.visitor.total_points;
  if (h == v) {
    throw TieError("game " + game.game_id + " is tied " + std::to_string(h) +
                   "-" + std::to_string(v));
  }
  if (h > v) return {Side::kHome, Side::kVisitor, h, v};
  return {Side::kVisitor, Side::kHome, v, h};
}

PeriodComparison ComparePeriod(const GameData &game, Period period) {
  const int h = PeriodPoints(game.home, period);
  const int v = PeriodPoints(game.visitor, period);
  using R = PeriodComparison::Result;
  const R r = h > v ? R::kHomeOutscored : (v > h ? R::kVisitorOutscored : R::kTied);
  return {r, h, v};
}

std::optional<Side> ResolveTeam(const GameData &game, std::string_view name) {
  const std::string lower = ToLower(name);
  std::optional<Side> found;
  bool ambiguous = false;
  for (Side side : {Side::kHome, Side::kVisitor}) {
    const TeamLine &t = game.Team(side);
    const std::string city = CanonicalCity(t.city);
    const std::string nick = CanonicalNickname(t.nickname);
    const bool hit = CanonicalNickname(lower) == nick ||
                     CanonicalCity(lower) == city || lower == city + " " + nick ||
                     [&] {
                       // "<city alias> <nickname alias>", e.g. "Philly Sixers".
                       auto words = SplitWords(lower);
                       for (std::size_t i = 1; i < words.size(); ++i) {
                         std::string c, n;
                         for (std::size_t j = 0; j < words.size(); ++j) {
                           std::string &dst = j < i ? c : n;
                           if (!dst.empty()) dst += ' ';
                           dst += words[j];
                         }
                         if (CanonicalCity(c) == city && CanonicalNickname(n) == nick) {
                           return true;
                         }
                       }
                       return false;
                     }();
    if (hit) {
      if (found) ambiguous = true;
      found = side;
    }
  }
  if (ambiguous) return std::nullopt;
  return found;
}

}  // namespace accucheck
