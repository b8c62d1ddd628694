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

#ifndef ACCUCHECK_FACT_CHECKER_H_
#define ACCUCHECK_FACT_CHECKER_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "accucheck/annotation.h"
#include "accucheck/game_data.h"

namespace accucheck {

// Inclusive token range.
struct TokenRange {
  int start = 0;
  int end = -1;

  bool empty() const { return end < start; }
  bool Contains(const TokenRange &o) const { return start <= o.start && o.end <= end; }
  TokenRange Union(const TokenRange &o) const;
  friend bool operator==(const TokenRange &, const TokenRange &) = default;
};

struct EntityRef {
  enum class Kind { kPlayer, kTeam, kPronounUnresolved };
  Kind kind = Kind::kPronounUnresolved;
  std::optional<std::string> resolved_name;
  std::optional<Side> side;
  TokenRange span;  // the mention itself; empty when nothing was found
  // A player or team mention that matches neither roster / neither team.
  bool unknown_entity = false;
  // Set when the subject was reached through a pronoun ("he", "they").
  bool via_pronoun = false;
};

enum class Property {
  kPoints,
  kRebounds,
  kAssists,
  kSteals,
  kBlocks,
  kTurnovers,
  kFieldGoals,     // made-attempted pair
  kThreePointers,  // made-attempted pair
  kFreeThrows,     // made-attempted pair
  kTeamTotal,      // team points; a pair when written "X - Y"
  kQuarterScore,
  kHalfScore,
  kRecordWins,
  kRecordLosses,
  kDayOfWeek,
  kDefeated,
  kOutscored,
  kLed,
  kDoubleDouble,
  kTripleDouble,
  kHomeGame,
  kNextGame,
  kSeasonAverage,
};

std::string_view PropertyName(Property p);

using ClaimValue = std::variant<std::monostate, int, std::pair<int, int>, Weekday, bool>;

struct Claim {
  std::string doc_id;
  TokenRange span;  // covers the evidence and, once resolved, the subject
  EntityRef subject;
  std::optional<EntityRef> object;  // the other team in defeated/out-scored
  Property property = Property::kPoints;
  ClaimValue value;
  // Token range of each value element (one for scalars, two for pairs).
  std::vector<TokenRange> value_spans;
  TokenRange trigger;  // the word carrying a Word-type claim
  Period period = Period::kGame;
  LeaderScope scope = LeaderScope::kAll;
  Stat led_stat = Stat::kPoints;
  bool led_across_teams = false;  // "led all scorers"
  int sentence = 0;
};

struct Verdict {
  enum class Status { kSupported, kRefuted, kUncheckable };
  Claim claim;
  Status status = Status::kUncheckable;
  std::optional<std::string> expected;
  std::vector<Mistake> emitted;  // a score pair may flag both numbers
  // Refuted, but reported as a warning instead of a mistake (--led-strict).
  bool downgraded = false;
};

struct CheckOptions {
  // Report refuted "led" claims as warnings only.
  bool led_strict = false;
  // Emit Not-checkable mistakes for season-average and next-game clauses.
  bool emit_uncheckable = true;
};

// Sentence boundaries: tokens ".", "!" and "?" end a sentence.
std::vector<TokenRange> SplitSentences(const TokenizedText &text);

std::vector<Claim> ExtractClaims(const TokenizedText &text, const GameData &game);

// Attaches stat and Word claims to the nearest preceding player mention (same
// sentence, else the previous one), pronouns included; team-level claims to
// the nearest team mention. Unresolvable subjects stay kPronounUnresolved.
std::vector<Claim> ResolveClaimSubjects(std::vector<Claim> claims, const TokenizedText &text,
                                        const GameData &game);

std::vector<Verdict> VerifyClaims(const std::vector<Claim> &claims, const GameData &game,
                                  const CheckOptions &options = {});

// Extract, resolve and verify; returns the emitted mistakes with overlaps
// removed (same category merged, otherwise the higher-priority category
// kept), sorted by position.
MistakeList CheckDocument(const TokenizedText &text, const GameData &game,
                          const CheckOptions &options = {});

// Same pipeline, keeping the verdicts for reporting.
struct CheckResult {
  std::vector<Verdict> verdicts;
  MistakeList mistakes;
};
CheckResult CheckDocumentDetailed(const TokenizedText &text, const GameData &game,
                                  const CheckOptions &options = {});

}  // namespace accucheck

#endif  // ACCUCHECK_FACT_CHECKER_H_
