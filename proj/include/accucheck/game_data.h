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

#ifndef ACCUCHECK_GAME_DATA_H_
#define ACCUCHECK_GAME_DATA_H_

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace accucheck {

enum class Side { kHome, kVisitor };

inline Side Opponent(Side s) {
  return s == Side::kHome ? Side::kVisitor : Side::kHome;
}
std::string_view SideName(Side s);

enum class Weekday {
  kMonday,
  kTuesday,
  kWednesday,
  kThursday,
  kFriday,
  kSaturday,
  kSunday
};

std::string_view WeekdayName(Weekday d);
// Case-insensitive full weekday name ("monday", "Monday").
std::optional<Weekday> ParseWeekday(std::string_view text);

// The five counting stats used for leaders and double-doubles, plus
// turnovers which can be claimed but never count towards a double.
enum class Stat { kPoints, kRebounds, kAssists, kSteals, kBlocks, kTurnovers };

std::string_view StatName(Stat s);

enum class Period { kQ1, kQ2, kQ3, kQ4, kH1, kH2, kGame };

std::string_view PeriodName(Period p);

struct ShotPair {
  int made = 0;
  int attempted = 0;

  friend bool operator==(const ShotPair &, const ShotPair &) = default;
};

struct TeamLine {
  std::string city;
  std::string nickname;
  int wins = 0;
  int losses = 0;
  int total_points = 0;
  std::array<int, 4> quarter_points{};
  // Points per overtime period, in order. Empty for regulation games.
  std::vector<int> overtime_points;

  std::string FullName() const { return city + " " + nickname; }
};

struct PlayerLine {
  std::string name;
  Side side = Side::kHome;
  bool starter = false;
  bool played = false;  // false when the box score has no stats (N/A)
  int minutes = 0;
  int points = 0;
  int rebounds = 0;
  int assists = 0;
  int steals = 0;
  int blocks = 0;
  int turnovers = 0;
  ShotPair field_goals;
  ShotPair three_pointers;
  ShotPair free_throws;

  int Get(Stat s) const;
};

struct GameData {
  std::string game_id;
  Weekday day_of_week = Weekday::kMonday;
  TeamLine home;
  TeamLine visitor;
  std::vector<PlayerLine> players;

  const TeamLine &Team(Side s) const {
    return s == Side::kHome ? home : visitor;
  }
  // Exact (case-sensitive) full-name lookup.
  const PlayerLine *FindPlayer(std::string_view name) const;
};

// Base for errors raised while ingesting or querying game data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document. field() names the offending key.
class ParseError : public DataError {
 public:
  ParseError(std::string field, const std::string &what)
      : DataError("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

// Well-formed document whose values break one or more invariants.
class ValidationError : public DataError {
 public:
  explicit ValidationError(std::vector<std::string> failures);
  const std::vector<std::string> &failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

class TieError : public DataError {
 public:
  using DataError::DataError;
};

// Parses a Rotowire-style box-score record (see docs/box_score_schema.md).
// Throws ParseError for malformed input and ValidationError when any
// invariant fails. An empty game_id falls back to the "game_id" key.
GameData LoadGame(const nlohmann::json &doc, std::string game_id = "");
// Game id defaults to the file stem.
GameData LoadGameFile(const std::filesystem::path &path);

// Same parse as LoadGame but returns invariant failures instead of throwing
// on them. Still throws ParseError.
std::vector<std::string> CheckGameDocument(const nlohmann::json &doc,
                                           GameData *out = nullptr);
std::vector<std::string> CheckInvariants(const GameData &game);

struct HalfScores {
  int home = 0;
  int visitor = 0;
};

// Q1 + Q2 for each team.
HalfScores HalftimeScores(const GameData &game);

int PeriodPoints(const TeamLine &team, Period period);

enum class DoubleStatus { kNone, kDoubleDouble, kTripleDouble, kHigherDouble };

std::string_view DoubleStatusName(DoubleStatus s);

// Counts points, rebounds, assists, steals and blocks at ten or more.
// Throws std::invalid_argument for a player who did not play.
DoubleStatus DoubleDoubleStatus(const PlayerLine &player);

enum class LeaderScope { kAll, kStarters, kBench };

// Every player on `side` attaining the maximum of `stat` among players who
// played. Throws std::invalid_argument when nobody on that side played.
std::vector<PlayerLine> TeamLeaders(const GameData &game, Side side, Stat stat,
                                    LeaderScope scope = LeaderScope::kAll);

struct Outcome {
  Side winner;
  Side loser;
  int winner_points;
  int loser_points;
};

// Throws TieError on equal totals.
Outcome GameOutcome(const GameData &game);

struct PeriodComparison {
  enum class Result { kHomeOutscored, kVisitorOutscored, kTied };
  Result result;
  int home_points;
  int visitor_points;

  bool Outscored(Side s) const {
    return result == (s == Side::kHome ? Result::kHomeOutscored
                                       : Result::kVisitorOutscored);
  }
};

// H1 = Q1+Q2, H2 = Q3+Q4 (overtime excluded), kGame = final totals.
PeriodComparison ComparePeriod(const GameData &game, Period period);

// Which side of `game` a team name refers to. Accepts city, nickname,
// "city nickname" and common aliases, case-insensitively. Returns nullopt
// for unknown names and for a city shared by both teams.
std::optional<Side> ResolveTeam(const GameData &game, std::string_view name);

}  // namespace accucheck

#endif  // ACCUCHECK_GAME_DATA_H_
