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

#include "accucheck/fact_checker.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

#include "accucheck/numbers.h"
#include "accucheck/teams.h"

namespace accucheck {

namespace {

// ---------------------------------------------------------------------------
// Lexical tables.

struct StatWord {
  std::string_view word;
  Stat stat;
};

constexpr std::array<StatWord, 20> kStatNouns = {{
    {"points", Stat::kPoints},       {"point", Stat::kPoints},
    {"pts", Stat::kPoints},          {"rebounds", Stat::kRebounds},
    {"rebound", Stat::kRebounds},    {"boards", Stat::kRebounds},
    {"board", Stat::kRebounds},      {"assists", Stat::kAssists},
    {"assist", Stat::kAssists},      {"dimes", Stat::kAssists},
    {"dime", Stat::kAssists},        {"steals", Stat::kSteals},
    {"steal", Stat::kSteals},        {"blocks", Stat::kBlocks},
    {"block", Stat::kBlocks},        {"turnovers", Stat::kTurnovers},
    {"turnover", Stat::kTurnovers},  {"scoring", Stat::kPoints},
    {"rebounding", Stat::kRebounds}, {"blocked", Stat::kBlocks},
}};

// Only the first 17 entries are count nouns ("scoring" etc. qualify "led").
constexpr std::size_t kCountNounCount = 17;

std::optional<Stat> StatNoun(std::string_view lower, bool count_nouns_only) {
  const std::size_t n = count_nouns_only ? kCountNounCount : kStatNouns.size();
  for (std::size_t i = 0; i < n; ++i)
    if (kStatNouns[i].word == lower) return kStatNouns[i].stat;
  return std::nullopt;
}

constexpr std::array<std::string_view, 16> kWinVerbs = {
    "defeated", "defeat", "defeats", "beat",    "beats",   "beating",
    "topped",   "tops",   "downed",  "downs",   "edged",   "edges",
    "routed",   "routs",  "outlasted", "dispatched"};

constexpr std::array<std::string_view, 4> kWinNouns = {"victory", "win", "triumph", "rout"};

constexpr std::array<std::string_view, 4> kLossVerbs = {"lost", "fell", "falls", "lose"};

constexpr std::array<std::string_view, 17> kPlayerVerbs = {
    "scored",  "added",   "had",     "recorded",    "finished", "posted",
    "tallied", "chipped", "totaled", "contributed", "notched",  "poured",
    "dropped", "grabbed", "pulled",  "dished",      "led"};

constexpr std::array<std::string_view, 8> kMultiGameMarkers = {
    "per", "consecutive", "straight", "streak", "last", "past", "previous", "seasons"};

constexpr std::array<std::string_view, 7> kHedges = {
    "near", "nearly", "almost", "missed", "shy", "short", "narrowly"};

constexpr std::array<std::string_view, 12> kGameWords = {
    "game", "games", "play", "plays", "face", "faces", "host", "hosts", "visit", "visits",
    "travel", "matchup"};

template <std::size_t N>
bool OneOf(std::string_view w, const std::array<std::string_view, N> &set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool IsCapitalized(std::string_view tok) {
  return !tok.empty() && std::isupper(static_cast<unsigned char>(tok[0])) &&
         std::all_of(tok.begin(), tok.end(), [](char c) {
           return std::isalpha(static_cast<unsigned char>(c)) || c == '.' || c == '\'' ||
                  c == '-';
         });
}

bool IsSentenceEnd(std::string_view tok) { return tok == "." || tok == "!" || tok == "?"; }
bool IsClauseBreak(std::string_view tok) { return tok == "," || tok == ";" || tok == ":"; }

// ---------------------------------------------------------------------------
// Per-document view: lower-cased tokens, sentences, clauses and mentions.

struct Mention {
  enum class Kind { kPlayer, kTeam, kHe, kThey };
  Kind kind;
  TokenRange span;
  std::string name;
  std::optional<Side> side;
  bool unknown = false;
  int sentence = 0;

  bool IsPlayerish() const { return kind == Kind::kPlayer || kind == Kind::kHe; }
  bool IsTeamish() const { return kind == Kind::kTeam || kind == Kind::kThey; }
};

struct Phrase {
  std::vector<std::string> words;  // lower-cased
  Mention::Kind kind;
  std::string name;
  std::optional<Side> side;
  bool unknown;
};

class DocView {
 public:
  DocView(const TokenizedText &text, const GameData &game) : text_(text), game_(game) {
    const int n = text.size();
    lower_.reserve(n);
    for (const auto &t : text.tokens) lower_.push_back(ToLower(t));
    sentence_of_.assign(n, 0);
    clause_of_.assign(n, 0);
    int s = 0, c = 0, start = 0;
    for (int i = 0; i < n; ++i) {
      sentence_of_[i] = s;
      clause_of_[i] = c;
      if (IsClauseBreak(text.tokens[i])) ++c;
      if (IsSentenceEnd(text.tokens[i]) || i == n - 1) {
        sentences_.push_back({start, i});
        start = i + 1;
        ++s;
        ++c;
      }
    }
    BuildPhrases();
    FindMentions();
  }

  int size() const { return text_.size(); }
  const std::string &tok(int i) const { return text_.tokens[i]; }
  // Lower-cased token, or "" out of range.
  std::string_view low(int i) const {
    return i >= 0 && i < size() ? std::string_view(lower_[i]) : std::string_view();
  }
  bool Is(int i, std::string_view w) const { return low(i) == w; }
  int sentence_of(int i) const { return sentence_of_[i]; }
  int clause_of(int i) const { return clause_of_[i]; }
  const std::vector<TokenRange> &sentences() const { return sentences_; }
  const TokenRange &sentence(int s) const { return sentences_[s]; }
  const std::vector<Mention> &mentions() const { return mentions_; }
  std::span<const std::string> tokens() const { return text_.tokens; }

  // Last token of the sentence excluding the terminal punctuation.
  int ContentEnd(int s) const {
    int e = sentences_[s].end;
    if (e > sentences_[s].start && IsSentenceEnd(text_.tokens[e])) --e;
    return e;
  }

  // Matches "first-second" as one token, "first - second" as three, or the
  // closed form "firstsecond". Returns the token count, 0 if absent.
  int Compound(int i, std::string_view first, std::string_view second) const {
    const std::string joined = std::string(first) + "-" + std::string(second);
    if (low(i) == joined) return 1;
    if (low(i) == std::string(first) + std::string(second)) return 1;
    if (low(i) == first && low(i + 1) == "-" && low(i + 2) == second) return 3;
    return 0;
  }

  bool SentenceHas(int s, std::string_view w) const {
    for (int i = sentences_[s].start; i <= sentences_[s].end; ++i)
      if (lower_[i] == w) return true;
    return false;
  }

  // Mention covering token i, if any.
  const Mention *MentionAt(int i) const {
    for (const Mention &m : mentions_)
      if (m.span.start <= i && i <= m.span.end) return &m;
    return nullptr;
  }

  // Nearest mention ending before `pos` in sentence `s` satisfying pred.
  template <typename Pred>
  const Mention *NearestBefore(int pos, int s, Pred pred) const {
    const Mention *best = nullptr;
    for (const Mention &m : mentions_) {
      if (m.sentence != s || m.span.end >= pos) continue;
      if (pred(m)) best = &m;
    }
    return best;
  }

  template <typename Pred>
  const Mention *FirstAfter(int pos, int limit, Pred pred) const {
    for (const Mention &m : mentions_) {
      if (m.span.start > pos && m.span.start <= limit && pred(m)) return &m;
    }
    return nullptr;
  }

  // Resolves a "he" mention to the nearest preceding player in its sentence,
  // else the last player mentioned in the previous sentence.
  const Mention *Antecedent(const Mention &pronoun, bool team) const {
    auto is_target = [&](const Mention &m) {
      return team ? m.kind == Mention::Kind::kTeam : m.kind == Mention::Kind::kPlayer;
    };
    if (const Mention *m = NearestBefore(pronoun.span.start, pronoun.sentence, is_target)) {
      return m;
    }
    if (pronoun.sentence == 0) return nullptr;
    return NearestBefore(size(), pronoun.sentence - 1, is_target);
  }

 private:
  void AddPhrase(std::string_view surface, Mention::Kind kind, std::string name,
                 std::optional<Side> side, bool unknown) {
    auto words = SplitWords(ToLower(surface));
    if (words.empty()) return;
    phrases_.push_back({std::move(words), kind, std::move(name), side, unknown});
  }

  void BuildPhrases() {
    // Players: full name, and the surname alone when it is unique.
    std::map<std::string, int> surname_count;
    auto surname = [](const std::string &name) {
      auto words = SplitWords(name);
      while (words.size() > 1) {
        const std::string last = ToLower(words.back());
        if (last == "jr." || last == "jr" || last == "sr." || last == "ii" || last == "iii" ||
            last == "iv") {
          words.pop_back();
        } else {
          break;
        }
      }
      return words.size() > 1 ? words.back() : std::string();
    };
    for (const PlayerLine &p : game_.players) ++surname_count[ToLower(surname(p.name))];
    for (const PlayerLine &p : game_.players) {
      AddPhrase(p.name, Mention::Kind::kPlayer, p.name, p.side, false);
      const std::string last = surname(p.name);
      if (!last.empty() && surname_count[ToLower(last)] == 1) {
        AddPhrase(last, Mention::Kind::kPlayer, p.name, p.side, false);
      }
    }
    // Teams: every franchise, so mentions of teams outside this game are
    // recognized too.
    auto add_team = [&](std::string_view city, std::string_view nickname) {
      const std::string full = std::string(city) + " " + std::string(nickname);
      const auto side = ResolveTeam(game_, full);
      const bool unknown = !side.has_value();
      AddPhrase(full, Mention::Kind::kTeam, full, side, unknown);
      AddPhrase(nickname, Mention::Kind::kTeam, full, side, unknown);
      // A city alone is ambiguous when two franchises share it.
      const auto city_side = ResolveTeam(game_, city);
      int sharing = 0;
      for (const KnownTeam &t : KnownTeams()) sharing += ToLower(t.city) == ToLower(city);
      if (city_side == side && (side || sharing == 1)) {
        AddPhrase(city, Mention::Kind::kTeam, full, side, unknown);
      }
    };
    for (const KnownTeam &t : KnownTeams()) add_team(t.city, t.nickname);
    for (Side s : {Side::kHome, Side::kVisitor}) add_team(game_.Team(s).city, game_.Team(s).nickname);
    for (std::string_view alias : {"Sixers", "Blazers", "Cavs", "Mavs", "Wolves", "T-Wolves"}) {
      const std::string canonical = CanonicalNickname(alias);
      for (const KnownTeam &t : KnownTeams()) {
        if (ToLower(t.nickname) == canonical) {
          const std::string full = std::string(t.city) + " " + std::string(t.nickname);
          const auto side = ResolveTeam(game_, full);
          AddPhrase(alias, Mention::Kind::kTeam, full, side, !side.has_value());
        }
      }
    }
  }

  void FindMentions() {
    const int n = size();
    int i = 0;
    while (i < n) {
      const Phrase *best = nullptr;
      for (const Phrase &p : phrases_) {
        const int len = static_cast<int>(p.words.size());
        if (i + len > n || (best && len <= static_cast<int>(best->words.size()))) continue;
        bool match = IsCapitalized(text_.tokens[i]) || std::isdigit(static_cast<unsigned char>(text_.tokens[i][0]));
        for (int k = 0; match && k < len; ++k) match = lower_[i + k] == p.words[k];
        // Possessive "Grizzlies'" / "Gasol's" as a single token.
        if (!match && len >= 1) {
          bool prefix = IsCapitalized(text_.tokens[i]) || std::isdigit(static_cast<unsigned char>(text_.tokens[i][0]));
          for (int k = 0; prefix && k < len - 1; ++k) prefix = lower_[i + k] == p.words[k];
          const std::string &last = lower_[i + len - 1];
          const std::string &want = p.words.back();
          prefix = prefix && (last == want + "'" || last == want + "'s");
          match = prefix;
        }
        if (match) best = &p;
      }
      if (best) {
        const int len = static_cast<int>(best->words.size());
        mentions_.push_back({best->kind, {i, i + len - 1}, best->name, best->side,
                             best->unknown, sentence_of_[i]});
        i += len;
        continue;
      }
      const std::string &w = lower_[i];
      if (w == "he" || w == "his" || w == "him") {
        mentions_.push_back({Mention::Kind::kHe, {i, i}, "", std::nullopt, false, sentence_of_[i]});
      } else if (w == "they" || w == "their" || w == "them") {
        mentions_.push_back({Mention::Kind::kThey, {i, i}, "", std::nullopt, false, sentence_of_[i]});
      } else if (int len = UnknownPlayerAt(i); len > 0) {
        std::string name;
        for (int k = 0; k < len; ++k) name += (k ? " " : "") + text_.tokens[i + k];
        mentions_.push_back({Mention::Kind::kPlayer, {i, i + len - 1}, name, std::nullopt, true,
                             sentence_of_[i]});
        i += len;
        continue;
      }
      ++i;
    }
  }

  // Two or three capitalized words, not otherwise known, directly followed by
  // a verb that introduces a player's stat line ("Dwyane Dragic scored").
  int UnknownPlayerAt(int i) const {
    static const std::set<std::string> kNotNames = {
        "the", "a", "an", "in", "on", "at", "after", "with", "and", "but", "while", "for",
        "it", "this", "that", "his", "he", "they", "their", "both", "only", "other", "then"};
    for (int len = 2; len <= 3; ++len) {
      if (i + len >= size()) break;
      bool ok = true;
      for (int k = 0; ok && k < len; ++k) {
        ok = IsCapitalized(text_.tokens[i + k]) && !kNotNames.contains(lower_[i + k]) &&
             !ParseWeekday(lower_[i + k]) && sentence_of_[i + k] == sentence_of_[i];
      }
      if (ok && OneOf(lower_[i + len], kPlayerVerbs)) return len;
    }
    return 0;
  }

  const TokenizedText &text_;
  const GameData &game_;
  std::vector<std::string> lower_;
  std::vector<int> sentence_of_;
  std::vector<int> clause_of_;
  std::vector<TokenRange> sentences_;
  std::vector<Phrase> phrases_;
  std::vector<Mention> mentions_;
};

EntityRef RefFromMention(const Mention &m) {
  EntityRef ref;
  ref.kind = m.kind == Mention::Kind::kTeam ? EntityRef::Kind::kTeam : EntityRef::Kind::kPlayer;
  ref.resolved_name = m.name;
  ref.side = m.side;
  ref.span = m.span;
  ref.unknown_entity = m.unknown;
  return ref;
}

bool IsPlayerStat(Property p) {
  switch (p) {
    case Property::kPoints:
    case Property::kRebounds:
    case Property::kAssists:
    case Property::kSteals:
    case Property::kBlocks:
    case Property::kTurnovers:
    case Property::kFieldGoals:
    case Property::kThreePointers:
    case Property::kFreeThrows:
      return true;
    default:
      return false;
  }
}

bool NeedsPlayerSubject(Property p) {
  return IsPlayerStat(p) || p == Property::kLed || p == Property::kDoubleDouble ||
         p == Property::kTripleDouble || p == Property::kSeasonAverage;
}

bool IsScorePair(Property p) {
  return p == Property::kTeamTotal || p == Property::kHalfScore || p == Property::kQuarterScore;
}

Property StatProperty(Stat s) {
  switch (s) {
    case Stat::kPoints: return Property::kPoints;
    case Stat::kRebounds: return Property::kRebounds;
    case Stat::kAssists: return Property::kAssists;
    case Stat::kSteals: return Property::kSteals;
    case Stat::kBlocks: return Property::kBlocks;
    case Stat::kTurnovers: return Property::kTurnovers;
  }
  return Property::kPoints;
}

std::optional<Stat> PropertyStat(Property p) {
  switch (p) {
    case Property::kPoints: return Stat::kPoints;
    case Property::kRebounds: return Stat::kRebounds;
    case Property::kAssists: return Stat::kAssists;
    case Property::kSteals: return Stat::kSteals;
    case Property::kBlocks: return Stat::kBlocks;
    case Property::kTurnovers: return Stat::kTurnovers;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Extraction.

struct PeriodPhrase {
  TokenRange span;
  Period period;
};

std::vector<PeriodPhrase> FindPeriods(const DocView &doc, int s) {
  std::vector<PeriodPhrase> out;
  const TokenRange r = doc.sentence(s);
  for (int i = r.start; i <= r.end; ++i) {
    const std::string_view w = doc.low(i);
    const std::string_view next = doc.low(i + 1);
    auto ordinal = [](std::string_view t) -> int {
      if (t == "first" || t == "1st" || t == "opening") return 1;
      if (t == "second" || t == "2nd") return 2;
      if (t == "third" || t == "3rd") return 3;
      if (t == "fourth" || t == "4th" || t == "final") return 4;
      return 0;
    };
    if (const int o = ordinal(w); o > 0) {
      int k = i + 1;
      if (doc.low(k) == "-") ++k;
      const std::string_view unit = doc.low(k);
      if (unit == "quarter" || unit == "period" || unit == "frame" || unit == "quarters") {
        static constexpr Period kQ[] = {Period::kQ1, Period::kQ2, Period::kQ3, Period::kQ4};
        out.push_back({{i, k}, kQ[o - 1]});
        i = k;
        continue;
      }
      if (unit == "half" && (o == 1 || o == 2)) {
        out.push_back({{i, k}, o == 1 ? Period::kH1 : Period::kH2});
        i = k;
        continue;
      }
    }
    if (w == "halftime" || w == "half-time" || w == "intermission" ||
        (w == "the" && (next == "half" || next == "break"))) {
      out.push_back({{i, w == "the" ? i + 1 : i}, Period::kH1});
    } else if (w == "half" && doc.low(i + 1) == "-" && doc.low(i + 2) == "time") {
      out.push_back({{i, i + 2}, Period::kH1});
    }
  }
  return out;
}

class Extractor {
 public:
  Extractor(const TokenizedText &text, const GameData &game)
      : text_(text), game_(game), doc_(text, game) {}

  std::vector<Claim> Run() {
    for (int s = 0; s < static_cast<int>(doc_.sentences().size()); ++s) {
      ExtractSentence(s);
    }
    // Drop claims swallowed by an uncheckable clause.
    std::vector<Claim> out;
    for (Claim &c : claims_) {
      const bool blanket = c.property == Property::kSeasonAverage || c.property == Property::kNextGame;
      bool swallowed = false;
      if (!blanket) {
        for (const TokenRange &r : uncheckable_)
          if (r.start <= c.span.start && c.span.start <= r.end) swallowed = true;
      }
      if (!swallowed) out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Claim &a, const Claim &b) { return a.span.start < b.span.start; });
    return out;
  }

 private:
  Claim NewClaim(Property p, TokenRange span, int s) {
    Claim c;
    c.doc_id = text_.doc_id;
    c.property = p;
    c.span = span;
    c.sentence = s;
    return c;
  }

  bool MultiGameClause(int pos) const {
    const int clause = doc_.clause_of(pos);
    const int s = doc_.sentence_of(pos);
    const TokenRange r = doc_.sentence(s);
    for (int i = r.start; i <= r.end; ++i) {
      if (doc_.clause_of(i) != clause) continue;
      const std::string_view w = doc_.low(i);
      if (OneOf(w, kMultiGameMarkers)) return true;
      // "this season" / "on the season", but not "season-high".
      if (w == "season" && doc_.low(i + 1) != "-" && doc_.low(i + 1) != "high" &&
          doc_.low(i + 1) != "low")
        return true;
    }
    return false;
  }

  bool GroupClause(int pos) const {
    const int clause = doc_.clause_of(pos);
    const TokenRange r = doc_.sentence(doc_.sentence_of(pos));
    for (int i = r.start; i < pos; ++i) {
      if (doc_.clause_of(i) != clause) continue;
      const std::string_view w = doc_.low(i);
      if (w == "combined" || w == "combine" || w == "together" || w == "duo" ||
          w == "tandem" || w == "each" || w == "both" || w == "bench" || w == "reserves" ||
          w == "starters")
        return true;
    }
    return false;
  }

  void ExtractSentence(int s) {
    const TokenRange r = doc_.sentence(s);
    const int content_end = doc_.ContentEnd(s);
    const bool next_game = IsNextGameSentence(s);
    if (next_game) {
      int from = r.start;
      for (int i = r.start; i <= content_end; ++i) {
        if (doc_.Is(i, "next") || doc_.Is(i, "will")) {
          from = i;
          break;
        }
      }
      Claim c = NewClaim(Property::kNextGame, {from, content_end}, s);
      c.trigger = c.span;
      claims_.push_back(c);
      uncheckable_.push_back(c.span);
      return;
    }
    for (int i = r.start; i <= content_end; ++i) {
      const std::string_view w = doc_.low(i);
      if (w == "averaging" || w == "averaged" || w == "averages") {
        Claim c = NewClaim(Property::kSeasonAverage, {i, content_end}, s);
        c.trigger = {i, i};
        claims_.push_back(c);
        uncheckable_.push_back(c.span);
        break;
      }
    }
    const auto periods = FindPeriods(doc_, s);
    for (int i = r.start; i <= r.end; ++i) {
      i = std::max(i, ExtractAt(i, s, periods) - 1);
    }
  }

  bool IsNextGameSentence(int s) const {
    const bool future = doc_.SentenceHas(s, "next") || doc_.SentenceHas(s, "will") ||
                        doc_.SentenceHas(s, "upcoming");
    if (!future) return false;
    for (std::string_view g : kGameWords)
      if (doc_.SentenceHas(s, g)) return true;
    return false;
  }

  // Tries every pattern at token i; returns the index after the consumed
  // tokens (i + 1 when nothing consumed more).
  int ExtractAt(int i, int s, const std::vector<PeriodPhrase> &periods) {
    if (int next = Record(i, s); next > i) return next;
    if (int next = ShotPair(i, s); next > i) return next;
    if (int next = ScorePair(i, s, periods); next > i) return next;
    StatCount(i, s);
    WeekdayClaim(i, s);
    OutcomeClaim(i, s);
    OutscoredClaim(i, s, periods);
    LedClaim(i, s);
    DoubleClaim(i, s);
    HomeClaim(i, s);
    return i + 1;
  }

  // Digit pair at i: "A - B" (three tokens) or "A-B" (one token).
  struct Pair {
    int a, b;
    TokenRange a_span, b_span;
    int end;  // last token
  };
  std::optional<Pair> DigitPair(int i, bool allow_of = false) const {
    const std::string &t = doc_.tok(i);
    auto to_int = [](std::string_view s) {
      int v = 0;
      for (char c : s) v = v * 10 + (c - '0');
      return v;
    };
    if (IsDigits(t) && t.size() <= 3) {
      if (doc_.Is(i + 1, "-") && IsDigits(std::string(doc_.low(i + 2))) && doc_.low(i + 2).size() <= 3) {
        return Pair{to_int(t), to_int(doc_.low(i + 2)), {i, i}, {i + 2, i + 2}, i + 2};
      }
      if (allow_of && doc_.Is(i + 1, "-") && doc_.Is(i + 2, "of") && doc_.Is(i + 3, "-") &&
          IsDigits(std::string(doc_.low(i + 4)))) {
        return Pair{to_int(t), to_int(doc_.low(i + 4)), {i, i}, {i + 4, i + 4}, i + 4};
      }
      return std::nullopt;
    }
    // Single token forms "5-2" and "9-of-17".
    const auto dash = t.find('-');
    if (dash == std::string::npos || dash == 0) return std::nullopt;
    std::string_view left(t.data(), dash);
    std::string_view right(t.data() + dash + 1, t.size() - dash - 1);
    if (allow_of && right.rfind("of-", 0) == 0) right.remove_prefix(3);
    if (IsDigits(left) && IsDigits(right) && left.size() <= 3 && right.size() <= 3) {
      return Pair{to_int(left), to_int(right), {i, i}, {i, i}, i};
    }
    return std::nullopt;
  }

  // "(W - L)" directly after a team mention, or "improved to W - L".
  int Record(int i, int s) {
    const Mention *team = nullptr;
    int at = i;
    std::optional<Pair> p;
    const Mention *m = doc_.MentionAt(i - 1);
    if (m && m->kind == Mention::Kind::kTeam && m->span.end == i - 1) {
      if (doc_.Is(i, "(")) {
        p = DigitPair(i + 1);
        if (p && doc_.Is(p->end + 1, ")")) team = m;
      } else if (!doc_.tok(i).empty() && doc_.tok(i).front() == '(' && doc_.tok(i).back() == ')') {
        // "(5-2)" as one token.
        const std::string inner = doc_.tok(i).substr(1, doc_.tok(i).size() - 2);
        const auto dash = inner.find('-');
        if (dash != std::string::npos && IsDigits(inner.substr(0, dash)) &&
            IsDigits(inner.substr(dash + 1))) {
          p = Pair{std::stoi(inner.substr(0, dash)), std::stoi(inner.substr(dash + 1)),
                   {i, i}, {i, i}, i};
          team = m;
          at = i - 1;
        }
      }
    }
    bool explicit_subject = team != nullptr;
    if (!team) {
      const std::string_view w = doc_.low(i);
      if ((w == "improved" || w == "improve" || w == "improves" || w == "moved" ||
           w == "dropped" || w == "fell" || w == "falls" || w == "slipped") &&
          doc_.Is(i + 1, "to")) {
        p = DigitPair(i + 2);
        if (!p) return i;
        at = i + 1;
      } else {
        return i;
      }
    }
    if (!p) return i;
    Claim wins = NewClaim(Property::kRecordWins, {i, p->end + (explicit_subject && at == i ? 1 : 0)}, s);
    wins.value = p->a;
    wins.value_spans = {p->a_span};
    Claim losses = wins;
    losses.property = Property::kRecordLosses;
    losses.value = p->b;
    losses.value_spans = {p->b_span};
    if (team) {
      wins.subject = losses.subject = RefFromMention(*team);
      wins.span = losses.span = wins.span.Union(team->span);
    }
    claims_.push_back(wins);
    claims_.push_back(losses);
    return std::max(p->end, wins.span.end) + 1;
  }

  // "( 9 - 17 FG , 3 - 7 3Pt , 3 - 3 FT )" elements and "9 - of - 17 from
  // the field" phrases.
  int ShotPair(int i, int s) {
    auto p = DigitPair(i, /*allow_of=*/true);
    if (!p) return i;
    std::optional<Property> prop;
    int end = p->end;
    const std::string_view label = doc_.low(p->end + 1);
    if (label == "fg" || label == "fgs") prop = Property::kFieldGoals;
    if (label == "3pt" || label == "3p" || label == "3pm" || label == "3-pt" || label == "3pts")
      prop = Property::kThreePointers;
    if (label == "ft" || label == "fts") prop = Property::kFreeThrows;
    if (prop) {
      end = p->end + 1;
    } else {
      const bool of_form = doc_.Is(i + 2, "of") || doc_.tok(i).find("-of-") != std::string::npos;
      if (!of_form) return i;
      const int clause = doc_.clause_of(i);
      std::optional<Property> found;
      int k = p->end + 1;
      for (; k <= p->end + 8 && k < doc_.size() && doc_.clause_of(k) == clause; ++k) {
        const std::string_view w = doc_.low(k);
        if (w == "three" || w == "three-point" || w == "3-point" || w == "deep" ||
            w == "beyond" || w == "downtown" || w == "long" || w == "three-pointers" ||
            w == "threes" || w == "distance") {
          found = Property::kThreePointers;
          break;
        }
        if (w == "line" || w == "stripe" || w == "free" || w == "free-throw" || w == "charity") {
          found = Property::kFreeThrows;
          break;
        }
        if (w == "field" || w == "floor" || w == "shooting") {
          found = Property::kFieldGoals;
          // "shooting" may still be qualified: "shooting 3 - of - 5 from three".
          if (w == "shooting") continue;
          break;
        }
      }
      if (!found) return i;
      prop = found;
      end = std::min(k, doc_.ContentEnd(s));
    }
    if (MultiGameClause(i)) return end + 1;
    Claim c = NewClaim(*prop, {i, end}, s);
    c.value = std::make_pair(p->a, p->b);
    c.value_spans = {p->a_span, p->b_span};
    claims_.push_back(c);
    return end + 1;
  }

  bool HasOutcomeTrigger(int s) const {
    const TokenRange r = doc_.sentence(s);
    for (int i = r.start; i <= r.end; ++i) {
      const std::string_view w = doc_.low(i);
      if (OneOf(w, kWinVerbs) || OneOf(w, kWinNouns) || OneOf(w, kLossVerbs) || w == "final" ||
          w == "loss" || w == "score" || w == "won")
        return true;
    }
    return false;
  }

  int ScorePair(int i, int s, const std::vector<PeriodPhrase> &periods) {
    auto p = DigitPair(i);
    if (!p) return i;
    if (doc_.Is(i - 1, "(") || doc_.Is(p->end + 1, ")")) return i;
    const std::string_view after = doc_.low(p->end + 1);
    if (after == "run" || after == "spurt" || after == "burst" || after == "record" ||
        after == "mark" || after == "of")
      return i;
    if (doc_.Is(i - 1, "to") && (doc_.Is(i - 2, "improved") || doc_.Is(i - 2, "moved") ||
                                 doc_.Is(i - 2, "fell") || doc_.Is(i - 2, "dropped")))
      return i;
    if (p->a > 200 || p->b > 200) return i;

    std::optional<Period> period;
    int best_distance = 1 << 20;
    for (const PeriodPhrase &pp : periods) {
      const int d = std::min(std::abs(pp.span.start - p->end), std::abs(pp.span.end - i));
      if (d < best_distance) {
        best_distance = d;
        period = pp.period;
      }
    }
    if (!period) {
      if (!HasOutcomeTrigger(s)) return p->end + 1;
      period = Period::kGame;
    }
    Property prop = Property::kTeamTotal;
    if (*period == Period::kH1 || *period == Period::kH2) prop = Property::kHalfScore;
    if (*period == Period::kQ1 || *period == Period::kQ2 || *period == Period::kQ3 ||
        *period == Period::kQ4)
      prop = Property::kQuarterScore;
    Claim c = NewClaim(prop, {i, p->end}, s);
    c.value = std::make_pair(p->a, p->b);
    c.value_spans = {p->a_span, p->b_span};
    c.period = *period;
    claims_.push_back(c);
    return p->end + 1;
  }

  void StatCount(int i, int s) {
    auto num = ParseNumberToken(doc_.tokens(), i);
    if (!num) return;
    // Adjacent stat noun, allowing "blocked shots".
    const int noun = num->end + 1;
    auto stat = StatNoun(doc_.low(noun), true);
    if (!stat) return;
    if (*stat == Stat::kBlocks && doc_.Is(noun, "blocked") && !doc_.Is(noun + 1, "shots")) return;
    const int noun_end = doc_.Is(noun, "blocked") ? noun + 1 : noun;
    if (MultiGameClause(i) || GroupClause(i)) return;
    // "N points in the first quarter": period splits are not in the data.
    for (int k = noun_end + 1; k <= noun_end + 4 && k < doc_.size(); ++k) {
      if (doc_.clause_of(k) != doc_.clause_of(i)) break;
      if (doc_.Is(k, "quarter") || doc_.Is(k, "half") || doc_.Is(k, "halftime") ||
          doc_.Is(k, "period") || doc_.Is(k, "overtime"))
        return;
    }
    // "N - point" compounds and "N points per game" are not counts here.
    Claim c = NewClaim(StatProperty(*stat), {num->start, noun_end}, s);
    c.value = num->value;
    c.value_spans = {{num->start, num->end}};
    claims_.push_back(c);
  }

  void WeekdayClaim(int i, int s) {
    auto wd = ParseWeekday(doc_.low(i));
    if (!wd || !IsCapitalized(doc_.tok(i))) return;
    Claim c = NewClaim(Property::kDayOfWeek, {i, i}, s);
    c.value = *wd;
    c.value_spans = {{i, i}};
    c.trigger = {i, i};
    claims_.push_back(c);
  }

  // Team mention directly after `pos` in the sentence (skipping "the").
  const Mention *ObjectTeam(int pos, int s) const {
    const int limit = doc_.sentence(s).end;
    return doc_.FirstAfter(pos, limit, [](const Mention &m) { return m.kind == Mention::Kind::kTeam; });
  }

  void OutcomeClaim(int i, int s) {
    const std::string_view w = doc_.low(i);
    bool subject_won = false;
    int trigger_end = i;
    if (OneOf(w, kWinVerbs)) {
      subject_won = true;
      // Passive: "were defeated by".
      if (doc_.Is(i + 1, "by") && (doc_.Is(i - 1, "were") || doc_.Is(i - 1, "was") ||
                                   doc_.Is(i - 1, "been") || doc_.Is(i - 1, "get"))) {
        subject_won = false;
        trigger_end = i + 1;
      }
      if (w == "beat" && doc_.Is(i - 1, "a")) return;  // "a beat"
    } else if (OneOf(w, kWinNouns) && (doc_.Is(i + 1, "over") || doc_.Is(i + 1, "against"))) {
      subject_won = true;
      trigger_end = i + 1;
    } else if ((OneOf(w, kLossVerbs) || w == "loss") && doc_.Is(i + 1, "to")) {
      // "fell to 3 - 2" is a record, handled elsewhere.
      if (ParseNumberToken(doc_.tokens(), i + 2) || DigitPair(i + 2)) return;
      subject_won = false;
      trigger_end = i + 1;
    } else {
      return;
    }
    Claim c = NewClaim(Property::kDefeated, {i, trigger_end}, s);
    c.value = subject_won;
    c.trigger = {i, trigger_end};
    if (const Mention *obj = ObjectTeam(trigger_end, s)) {
      c.object = RefFromMention(*obj);
      c.span = c.span.Union(obj->span);
    }
    claims_.push_back(c);
  }

  void OutscoredClaim(int i, int s, const std::vector<PeriodPhrase> &periods) {
    int len = 0;
    for (std::string_view form : {"scored", "scoring", "score", "scores"}) {
      if (len == 0) len = doc_.Compound(i, "out", form);
    }
    if (len == 0) return;
    const TokenRange trigger{i, i + len - 1};
    Claim c = NewClaim(Property::kOutscored, trigger, s);
    c.trigger = trigger;
    c.value = true;
    if (const Mention *obj = ObjectTeam(trigger.end, s)) {
      c.object = RefFromMention(*obj);
      c.span = c.span.Union(obj->span);
    }
    c.period = Period::kGame;
    int best = 1 << 20;
    for (const PeriodPhrase &pp : periods) {
      const int d = std::abs(pp.span.start - i);
      if (d < best) {
        best = d;
        c.period = pp.period;
      }
    }
    claims_.push_back(c);
  }

  void LedClaim(int i, int s) {
    const std::string_view w = doc_.low(i);
    if (w != "led" && w != "leading" && w != "leader" && w != "leads") return;
    const std::string_view next = doc_.low(i + 1);
    if (next == "to" || next == "up" || next == "off") return;
    const int clause = doc_.clause_of(i);
    const int limit = doc_.ContentEnd(s);
    // A team subject ("Memphis led 50-40") is about the score, not a player.
    const Mention *prev = doc_.NearestBefore(i, s, [](const Mention &) { return true; });
    const bool passive = next == "by";
    if (!passive && prev && prev->IsTeamish() &&
        !doc_.NearestBefore(i, s, [&](const Mention &m) {
          return m.IsPlayerish() && m.span.end > prev->span.end;
        })) {
      // Unless the team is the object of a preceding player: "Gasol, the
      // Grizzlies' center, led".
      return;
    }
    Claim c = NewClaim(Property::kLed, {i, i}, s);
    c.trigger = {i, i};
    c.value = true;
    if (passive) {
      const Mention *who = doc_.FirstAfter(i + 1, limit, [](const Mention &m) {
        return m.kind == Mention::Kind::kPlayer;
      });
      if (!who) return;
      c.subject = RefFromMention(*who);
      c.span = c.span.Union(who->span);
      if (prev && prev->kind == Mention::Kind::kTeam) c.object = RefFromMention(*prev);
    } else if (!prev) {
      // "Leading the way was Conley".
      const Mention *who = doc_.FirstAfter(i, limit, [](const Mention &m) {
        return m.kind == Mention::Kind::kPlayer;
      });
      if (!who) return;
      c.subject = RefFromMention(*who);
      c.span = c.span.Union(who->span);
    }
    // Scope, stat and team from the words after the trigger.
    for (int k = i + 1; k <= limit && k <= i + 8; ++k) {
      if (doc_.clause_of(k) != clause) break;
      const std::string_view t = doc_.low(k);
      if (k <= i + 2 && t == "all") c.led_across_teams = true;
      if (t == "bench" || t == "reserves" || t == "reserve" || t == "unit") {
        c.scope = LeaderScope::kBench;
      }
      if (t == "starters" || t == "starting") c.scope = LeaderScope::kStarters;
      if (!passive && !c.object) {
        if (const Mention *m = doc_.MentionAt(k); m && m->kind == Mention::Kind::kTeam) {
          c.object = RefFromMention(*m);
        }
      }
      if (t == "in" || t == "with") {
        // "in rebounding", "with 12 rebounds"
        int q = k + 1;
        if (auto num = ParseNumberToken(doc_.tokens(), q)) q = num->end + 1;
        if (auto st = StatNoun(doc_.low(q), false)) {
          c.led_stat = *st;
          break;
        }
      }
    }
    if (c.object) c.span = c.span.Union(c.object->span);
    claims_.push_back(c);
  }

  void DoubleClaim(int i, int s) {
    int len = 0;
    Property prop = Property::kDoubleDouble;
    if ((len = doc_.Compound(i, "double", "double")) == 0) {
      len = doc_.Compound(i, "triple", "double");
      prop = Property::kTripleDouble;
    }
    if (len == 0) return;
    const std::string_view after = doc_.low(i + len);
    if (after == "s" || doc_.low(i + len - 1).ends_with("doubles")) return;
    for (int k = std::max(doc_.sentence(s).start, i - 4); k < i; ++k)
      if (OneOf(doc_.low(k), kHedges)) return;
    if (MultiGameClause(i) || GroupClause(i)) return;
    Claim c = NewClaim(prop, {i, i + len - 1}, s);
    c.trigger = c.span;
    c.value = true;
    claims_.push_back(c);
  }

  void HomeClaim(int i, int s) {
    bool at_home;
    TokenRange trigger;
    if (doc_.Is(i, "at") && doc_.Is(i + 1, "home")) {
      at_home = true;
      trigger = {i + 1, i + 1};
    } else if (doc_.Is(i, "on") && doc_.Is(i + 1, "the") && doc_.Is(i + 2, "road")) {
      at_home = false;
      trigger = {i + 2, i + 2};
    } else {
      return;
    }
    Claim c = NewClaim(Property::kHomeGame, {i, trigger.end}, s);
    c.trigger = trigger;
    c.value = at_home;
    claims_.push_back(c);
  }

  const TokenizedText &text_;
  const GameData &game_;
  DocView doc_;
  std::vector<Claim> claims_;
  std::vector<TokenRange> uncheckable_;
};

// ---------------------------------------------------------------------------
// Verification helpers.

std::string Pretty(int v) { return std::to_string(v); }

Mistake MakeMistake(const Claim &c, TokenRange r, MistakeCategory cat, std::string note) {
  return Mistake{c.doc_id, r.start, r.end, cat, std::move(note)};
}

struct Outcome3 {
  Verdict::Status status = Verdict::Status::kUncheckable;
  std::optional<std::string> expected;
  std::vector<Mistake> mistakes;
};

const PlayerLine *SubjectPlayer(const Claim &c, const GameData &game) {
  if (c.subject.kind != EntityRef::Kind::kPlayer || c.subject.unknown_entity ||
      !c.subject.resolved_name)
    return nullptr;
  return game.FindPlayer(*c.subject.resolved_name);
}

std::optional<Side> LedSide(const Claim &c, const PlayerLine &p) {
  if (c.object && c.object->kind == EntityRef::Kind::kTeam && c.object->side) return c.object->side;
  return p.side;
}

bool IsLeader(const Claim &c, const GameData &game, const PlayerLine &p, std::string *leaders_note) {
  std::vector<PlayerLine> leaders;
  if (c.led_across_teams) {
    for (Side side : {Side::kHome, Side::kVisitor}) {
      try {
        auto part = TeamLeaders(game, side, c.led_stat, c.scope);
        leaders.insert(leaders.end(), part.begin(), part.end());
      } catch (const std::invalid_argument &) {
      }
    }
    int best = -1;
    for (const auto &l : leaders) best = std::max(best, l.Get(c.led_stat));
    std::erase_if(leaders, [&](const PlayerLine &l) { return l.Get(c.led_stat) != best; });
  } else {
    const auto side = LedSide(c, p);
    if (!side) return true;
    try {
      leaders = TeamLeaders(game, *side, c.led_stat, c.scope);
    } catch (const std::invalid_argument &) {
      return true;
    }
  }
  const bool ok = std::any_of(leaders.begin(), leaders.end(),
                              [&](const PlayerLine &l) { return l.name == p.name; });
  if (!ok && leaders_note && !leaders.empty()) {
    std::string names;
    for (std::size_t k = 0; k < leaders.size(); ++k) {
      names += (k ? " and " : "") + leaders[k].name;
    }
    *leaders_note = names + " led with " + std::to_string(leaders.front().Get(c.led_stat)) + " " +
                    std::string(StatName(c.led_stat));
  }
  return ok;
}

// Checks a player-subject claim against one specific player line.
Outcome3 CheckPlayerClaim(const Claim &c, const GameData &game, const PlayerLine &p) {
  Outcome3 out;
  if (!p.played) {
    out.status = Verdict::Status::kRefuted;
    out.expected = p.name + " did not play";
    out.mistakes.push_back(MakeMistake(c, c.subject.span, MistakeCategory::kName, *out.expected));
    return out;
  }
  if (auto stat = PropertyStat(c.property)) {
    const int claimed = std::get<int>(c.value);
    const int actual = p.Get(*stat);
    if (claimed == actual) {
      out.status = Verdict::Status::kSupported;
    } else {
      out.status = Verdict::Status::kRefuted;
      out.expected = Pretty(actual);
      out.mistakes.push_back(
          MakeMistake(c, c.value_spans.front(), MistakeCategory::kNumber, "should be " + Pretty(actual)));
    }
    return out;
  }
  if (c.property == Property::kFieldGoals || c.property == Property::kThreePointers ||
      c.property == Property::kFreeThrows) {
    const ShotPair actual = c.property == Property::kFieldGoals      ? p.field_goals
                            : c.property == Property::kThreePointers ? p.three_pointers
                                                                     : p.free_throws;
    const auto [made, attempted] = std::get<std::pair<int, int>>(c.value);
    out.status = Verdict::Status::kSupported;
    out.expected = Pretty(actual.made) + "-" + Pretty(actual.attempted);
    if (made != actual.made) {
      out.status = Verdict::Status::kRefuted;
      out.mistakes.push_back(
          MakeMistake(c, c.value_spans[0], MistakeCategory::kNumber, "should be " + Pretty(actual.made)));
    }
    if (attempted != actual.attempted) {
      out.status = Verdict::Status::kRefuted;
      out.mistakes.push_back(MakeMistake(c, c.value_spans[1], MistakeCategory::kNumber,
                                         "should be " + Pretty(actual.attempted)));
    }
    return out;
  }
  if (c.property == Property::kLed) {
    std::string note;
    if (IsLeader(c, game, p, &note)) {
      out.status = Verdict::Status::kSupported;
    } else {
      out.status = Verdict::Status::kRefuted;
      out.expected = note;
      out.mistakes.push_back(MakeMistake(c, c.trigger, MistakeCategory::kWord, note));
    }
    return out;
  }
  if (c.property == Property::kDoubleDouble || c.property == Property::kTripleDouble) {
    const DoubleStatus actual = DoubleDoubleStatus(p);
    const DoubleStatus want = c.property == Property::kDoubleDouble ? DoubleStatus::kDoubleDouble
                                                                    : DoubleStatus::kTripleDouble;
    if (actual == want) {
      out.status = Verdict::Status::kSupported;
    } else {
      out.status = Verdict::Status::kRefuted;
      out.expected = std::string(DoubleStatusName(actual));
      out.mistakes.push_back(MakeMistake(c, c.trigger, MistakeCategory::kWord,
                                         p.name + " had " + std::string(DoubleStatusName(actual))));
    }
    return out;
  }
  return out;
}

Outcome3 CheckScorePair(const Claim &c, const GameData &game) {
  Outcome3 out;
  const auto [first, second] = std::get<std::pair<int, int>>(c.value);
  const int home = PeriodPoints(game.home, c.period);
  const int vis = PeriodPoints(game.visitor, c.period);
  // Orientation: the first number belongs to the subject team.
  std::optional<Side> subject = c.subject.kind == EntityRef::Kind::kTeam ? c.subject.side : std::nullopt;
  auto expect = [&](Side s) { return std::make_pair(s == Side::kHome ? home : vis, s == Side::kHome ? vis : home); };
  const auto home_first = expect(Side::kHome);
  const auto vis_first = expect(Side::kVisitor);
  const auto claimed = std::make_pair(first, second);
  if (claimed == home_first || claimed == vis_first) {
    // Matches one orientation; winner-first writing is accepted either way.
    out.status = Verdict::Status::kSupported;
    return out;
  }
  std::pair<int, int> want;
  if (subject) {
    want = expect(*subject);
  } else {
    // Unresolved: compare against the orientation agreeing on more numbers,
    // winner first on ties.
    auto agree = [&](std::pair<int, int> e) { return (e.first == first) + (e.second == second); };
    const Side winner = home > vis ? Side::kHome : Side::kVisitor;
    want = expect(winner);
    if (agree(expect(Opponent(winner))) > agree(want)) want = expect(Opponent(winner));
  }
  out.status = Verdict::Status::kRefuted;
  out.expected = Pretty(want.first) + "-" + Pretty(want.second);
  const bool same_token = c.value_spans[0] == c.value_spans[1];
  if (same_token) {
    out.mistakes.push_back(MakeMistake(c, c.value_spans[0], MistakeCategory::kNumber,
                                       "should be " + *out.expected));
    return out;
  }
  if (first != want.first) {
    out.mistakes.push_back(
        MakeMistake(c, c.value_spans[0], MistakeCategory::kNumber, "should be " + Pretty(want.first)));
  }
  if (second != want.second) {
    out.mistakes.push_back(
        MakeMistake(c, c.value_spans[1], MistakeCategory::kNumber, "should be " + Pretty(want.second)));
  }
  return out;
}

// Name mistake for a team mention that is not one of the game's teams.
std::optional<Mistake> ForeignTeam(const Claim &c, const EntityRef &ref, const GameData &game) {
  if (ref.kind != EntityRef::Kind::kTeam || !ref.unknown_entity || ref.via_pronoun) return std::nullopt;
  return MakeMistake(c, ref.span, MistakeCategory::kName,
                     "should be " + game.home.nickname + " or " + game.visitor.nickname);
}

Outcome3 CheckClaim(const Claim &c, const GameData &game) {
  Outcome3 out;
  switch (c.property) {
    case Property::kSeasonAverage:
    case Property::kNextGame:
      out.status = Verdict::Status::kUncheckable;
      out.mistakes.push_back(MakeMistake(c, c.span, MistakeCategory::kNotCheckable,
                                         c.property == Property::kNextGame
                                             ? "next game is not in the data"
                                             : "season averages are not in the game data"));
      return out;
    case Property::kDayOfWeek: {
      const Weekday claimed = std::get<Weekday>(c.value);
      if (claimed == game.day_of_week) {
        out.status = Verdict::Status::kSupported;
      } else {
        out.status = Verdict::Status::kRefuted;
        out.expected = std::string(WeekdayName(game.day_of_week));
        out.mistakes.push_back(
            MakeMistake(c, c.value_spans.front(), MistakeCategory::kName, "should be " + *out.expected));
      }
      return out;
    }
    case Property::kRecordWins:
    case Property::kRecordLosses: {
      if (auto m = ForeignTeam(c, c.subject, game)) {
        out.status = Verdict::Status::kRefuted;
        out.mistakes.push_back(*m);
        return out;
      }
      if (c.subject.kind != EntityRef::Kind::kTeam || !c.subject.side) return out;
      const TeamLine &t = game.Team(*c.subject.side);
      const int actual = c.property == Property::kRecordWins ? t.wins : t.losses;
      if (std::get<int>(c.value) == actual) {
        out.status = Verdict::Status::kSupported;
      } else {
        out.status = Verdict::Status::kRefuted;
        out.expected = Pretty(actual);
        out.mistakes.push_back(
            MakeMistake(c, c.value_spans.front(), MistakeCategory::kNumber, "should be " + Pretty(actual)));
      }
      return out;
    }
    case Property::kTeamTotal:
      if (std::holds_alternative<int>(c.value)) {
        if (c.subject.kind != EntityRef::Kind::kTeam || !c.subject.side) return out;
        const int actual = game.Team(*c.subject.side).total_points;
        if (std::get<int>(c.value) == actual) {
          out.status = Verdict::Status::kSupported;
        } else {
          out.status = Verdict::Status::kRefuted;
          out.expected = Pretty(actual);
          out.mistakes.push_back(
              MakeMistake(c, c.value_spans.front(), MistakeCategory::kNumber, "should be " + Pretty(actual)));
        }
        return out;
      }
      [[fallthrough]];
    case Property::kHalfScore:
    case Property::kQuarterScore:
      return CheckScorePair(c, game);
    case Property::kDefeated: {
      Outcome o;
      try {
        o = GameOutcome(game);
      } catch (const TieError &) {
        return out;
      }
      for (const EntityRef *ref : {&c.subject, c.object ? &*c.object : nullptr}) {
        if (ref == nullptr) continue;
        if (auto m = ForeignTeam(c, *ref, game)) {
          out.status = Verdict::Status::kRefuted;
          out.mistakes.push_back(*m);
        }
      }
      if (!out.mistakes.empty()) return out;
      const bool subject_won = std::get<bool>(c.value);
      std::optional<bool> holds;
      if (c.subject.kind == EntityRef::Kind::kTeam && c.subject.side) {
        holds = (o.winner == *c.subject.side) == subject_won;
      } else if (c.object && c.object->side) {
        holds = (o.loser == *c.object->side) == subject_won;
      }
      if (!holds) return out;
      if (*holds) {
        out.status = Verdict::Status::kSupported;
      } else {
        out.status = Verdict::Status::kRefuted;
        out.expected = game.Team(o.winner).nickname + " won " + Pretty(o.winner_points) + "-" +
                       Pretty(o.loser_points);
        out.mistakes.push_back(MakeMistake(c, c.trigger, MistakeCategory::kWord, *out.expected));
      }
      return out;
    }
    case Property::kOutscored: {
      std::optional<Side> side;
      if (c.subject.kind == EntityRef::Kind::kTeam && c.subject.side) side = c.subject.side;
      else if (c.object && c.object->side) side = Opponent(*c.object->side);
      if (!side) return out;
      const PeriodComparison cmp = ComparePeriod(game, c.period);
      if (cmp.Outscored(*side)) {
        out.status = Verdict::Status::kSupported;
      } else {
        out.status = Verdict::Status::kRefuted;
        const int mine = *side == Side::kHome ? cmp.home_points : cmp.visitor_points;
        const int theirs = *side == Side::kHome ? cmp.visitor_points : cmp.home_points;
        out.expected = game.Team(*side).nickname + " " + Pretty(mine) + "-" + Pretty(theirs) + " in " +
                       std::string(PeriodName(c.period));
        out.mistakes.push_back(MakeMistake(c, c.trigger, MistakeCategory::kWord, *out.expected));
      }
      return out;
    }
    case Property::kHomeGame: {
      if (c.subject.kind != EntityRef::Kind::kTeam || !c.subject.side) return out;
      const bool at_home = std::get<bool>(c.value);
      if ((*c.subject.side == Side::kHome) == at_home) {
        out.status = Verdict::Status::kSupported;
      } else {
        out.status = Verdict::Status::kRefuted;
        out.expected = game.Team(*c.subject.side).nickname + " were the " +
                       std::string(SideName(*c.subject.side)) + " team";
        out.mistakes.push_back(MakeMistake(c, c.trigger, MistakeCategory::kWord, *out.expected));
      }
      return out;
    }
    default:
      break;
  }
  // Player-subject claims.
  if (c.subject.kind == EntityRef::Kind::kTeam) {
    if (c.property == Property::kPoints && c.subject.side) {
      Claim total = c;
      total.property = Property::kTeamTotal;
      return CheckClaim(total, game);
    }
    return out;
  }
  if (c.subject.kind != EntityRef::Kind::kPlayer) return out;
  if (c.subject.unknown_entity) {
    out.status = Verdict::Status::kRefuted;
    out.expected = "no such player in this game";
    out.mistakes.push_back(MakeMistake(c, c.subject.span, MistakeCategory::kName, *out.expected));
    return out;
  }
  const PlayerLine *p = SubjectPlayer(c, game);
  if (p == nullptr) return out;
  return CheckPlayerClaim(c, game, *p);
}

// Claims whose subject is the same explicit player mention.
struct Group {
  TokenRange mention;
  std::vector<std::size_t> members;
};

bool GroupEligible(const Claim &c) {
  return (IsPlayerStat(c.property) || c.property == Property::kLed ||
          c.property == Property::kDoubleDouble || c.property == Property::kTripleDouble) &&
         c.subject.kind == EntityRef::Kind::kPlayer && !c.subject.via_pronoun &&
         !c.subject.span.empty();
}

// Name-versus-numbers: when an explicit player mention carries several
// claims that all hold for one other player, correcting the name is the
// smaller annotation.
void ApplyMinimalAnnotation(std::vector<Verdict> &verdicts, const GameData &game) {
  std::vector<Group> groups;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Claim &c = verdicts[i].claim;
    if (!GroupEligible(c)) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group &g) {
      return g.mention == c.subject.span;
    });
    if (it == groups.end()) {
      groups.push_back({c.subject.span, {i}});
    } else {
      it->members.push_back(i);
    }
  }
  for (const Group &g : groups) {
    if (g.members.size() < 2) continue;
    std::vector<Mistake> current;
    for (std::size_t i : g.members) {
      for (const Mistake &m : verdicts[i].emitted) {
        if (std::find(current.begin(), current.end(), m) == current.end()) current.push_back(m);
      }
    }
    if (current.empty()) continue;
    const Claim &first = verdicts[g.members.front()].claim;
    const PlayerLine *named = SubjectPlayer(first, game);
    const PlayerLine *alternative = nullptr;
    // Same team first, then the opponents.
    for (int pass = 0; pass < 2 && alternative == nullptr; ++pass) {
      for (const PlayerLine &p : game.players) {
        if (!p.played || (named && p.name == named->name)) continue;
        const bool same_side = named ? p.side == named->side : pass == 0;
        if ((pass == 0) != same_side) continue;
        bool all = true;
        for (std::size_t i : g.members) {
          const Claim &c = verdicts[i].claim;
          if (c.property == Property::kLed && c.object && c.object->side && *c.object->side != p.side) {
            all = false;
            break;
          }
          if (CheckPlayerClaim(c, game, p).status != Verdict::Status::kSupported) {
            all = false;
            break;
          }
        }
        if (all) {
          alternative = &p;
          break;
        }
      }
    }
    if (alternative == nullptr) continue;
    const Mistake name_fix = MakeMistake(first, g.mention, MistakeCategory::kName,
                                         "should be " + alternative->name);
    const std::vector<AnnotationCandidate> candidates = {{current}, {{name_fix}}};
    if (SelectMinimalAnnotationIndex(candidates) != 1) continue;
    bool placed = false;
    for (std::size_t i : g.members) {
      Verdict &v = verdicts[i];
      v.emitted.clear();
      v.status = Verdict::Status::kRefuted;
      v.expected = alternative->name;
      if (!placed) {
        v.emitted.push_back(name_fix);
        placed = true;
      } else {
        v.emitted.push_back(name_fix);
      }
    }
  }
}

// Removes cross-category overlaps (higher priority wins, then the earlier
// span) and merges same-category overlaps.
MistakeList ResolveOverlaps(MistakeList list) {
  SortMistakes(list);
  list.erase(std::unique(list.begin(), list.end()), list.end());
  std::vector<char> dropped(list.size(), false);
  for (std::size_t a = 0; a < list.size(); ++a) {
    if (dropped[a]) continue;
    for (std::size_t b = a + 1; b < list.size(); ++b) {
      if (dropped[b] || !list[a].Overlaps(list[b])) continue;
      if (list[a].category == list[b].category) continue;
      if (CategoryPriority(list[b].category) < CategoryPriority(list[a].category)) {
        dropped[a] = true;
        break;
      }
      dropped[b] = true;
    }
  }
  MistakeList kept;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!dropped[i]) kept.push_back(list[i]);
  return NormalizeSubmission(std::move(kept));
}

}  // namespace

TokenRange TokenRange::Union(const TokenRange &o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  return {std::min(start, o.start), std::max(end, o.end)};
}

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kPoints: return "points";
    case Property::kRebounds: return "rebounds";
    case Property::kAssists: return "assists";
    case Property::kSteals: return "steals";
    case Property::kBlocks: return "blocks";
    case Property::kTurnovers: return "turnovers";
    case Property::kFieldGoals: return "fgm/fga";
    case Property::kThreePointers: return "tpm/tpa";
    case Property::kFreeThrows: return "ftm/fta";
    case Property::kTeamTotal: return "team-total";
    case Property::kQuarterScore: return "quarter-score";
    case Property::kHalfScore: return "half-score";
    case Property::kRecordWins: return "record-wins";
    case Property::kRecordLosses: return "record-losses";
    case Property::kDayOfWeek: return "day-of-week";
    case Property::kDefeated: return "defeated";
    case Property::kOutscored: return "out-scored";
    case Property::kLed: return "led";
    case Property::kDoubleDouble: return "double-double";
    case Property::kTripleDouble: return "triple-double";
    case Property::kHomeGame: return "home-game";
    case Property::kNextGame: return "next-game";
    case Property::kSeasonAverage: return "season-average";
  }
  return "?";
}

std::vector<TokenRange> SplitSentences(const TokenizedText &text) {
  std::vector<TokenRange> out;
  int start = 0;
  for (int i = 0; i < text.size(); ++i) {
    if (IsSentenceEnd(text.tokens[i]) || i == text.size() - 1) {
      out.push_back({start, i});
      start = i + 1;
    }
  }
  return out;
}

std::vector<Claim> ExtractClaims(const TokenizedText &text, const GameData &game) {
  if (text.tokens.empty()) return {};
  return Extractor(text, game).Run();
}

std::vector<Claim> ResolveClaimSubjects(std::vector<Claim> claims, const TokenizedText &text,
                                        const GameData &game) {
  if (text.tokens.empty()) return claims;
  const DocView doc(text, game);

  auto player_ref = [&](const Mention &m) -> std::optional<EntityRef> {
    if (m.kind == Mention::Kind::kPlayer) return RefFromMention(m);
    if (m.kind == Mention::Kind::kHe) {
      if (const Mention *a = doc.Antecedent(m, false)) {
        EntityRef ref = RefFromMention(*a);
        ref.via_pronoun = true;
        return ref;
      }
    }
    return std::nullopt;
  };
  auto team_ref = [&](const Mention &m) -> std::optional<EntityRef> {
    if (m.kind == Mention::Kind::kTeam) return RefFromMention(m);
    if (m.kind == Mention::Kind::kThey) {
      if (const Mention *a = doc.Antecedent(m, true)) {
        EntityRef ref = RefFromMention(*a);
        ref.via_pronoun = true;
        return ref;
      }
    }
    return std::nullopt;
  };
  // A team mention acts as a subject when it opens its clause ("The
  // Grizzlies scored"), not when it is an object ("led the Grizzlies").
  auto team_is_subject = [&](const Mention &m) {
    int k = m.span.start - 1;
    if (doc.Is(k, "the")) --k;
    const TokenRange s = doc.sentence(m.sentence);
    return k < s.start || IsClauseBreak(doc.tok(k)) || doc.Is(k, "and") || doc.Is(k, "while") ||
           doc.Is(k, "as") || doc.Is(k, "but");
  };
  auto extend = [](Claim &c, const EntityRef &ref) {
    if (!ref.via_pronoun) c.span = c.span.Union(ref.span);
  };

  const std::size_t n = claims.size();
  // Team-level claims first; score pairs borrow their sentence's subject.
  for (Claim &c : claims) {
    const bool team_claim = c.property == Property::kDefeated || c.property == Property::kOutscored ||
                            c.property == Property::kHomeGame ||
                            ((c.property == Property::kRecordWins || c.property == Property::kRecordLosses) &&
                             c.subject.kind == EntityRef::Kind::kPronounUnresolved);
    if (!team_claim) continue;
    const Mention *m = doc.NearestBefore(c.span.start, c.sentence,
                                         [](const Mention &x) { return x.IsTeamish(); });
    if (m == nullptr) continue;
    if (auto ref = team_ref(*m)) {
      c.subject = *ref;
      extend(c, *ref);
    }
  }
  for (Claim &c : claims) {
    if (!IsScorePair(c.property) || std::holds_alternative<int>(c.value)) continue;
    const Claim *anchor = nullptr;
    for (std::size_t k = 0; k < n; ++k) {
      const Claim &o = claims[k];
      if (o.sentence != c.sentence || o.subject.kind != EntityRef::Kind::kTeam) continue;
      if (o.property != Property::kDefeated && o.property != Property::kOutscored) continue;
      if (o.trigger.start < c.span.start) anchor = &o;
    }
    if (anchor) {
      // Subject orientation; for "lost to" the subject is the loser but
      // scores are still written subject-first.
      c.subject = anchor->subject;
    } else if (const Mention *m = doc.NearestBefore(c.span.start, c.sentence,
                                                    [](const Mention &x) { return x.IsTeamish(); })) {
      if (auto ref = team_ref(*m)) c.subject = *ref;
    }
  }
  for (Claim &c : claims) {
    if (!NeedsPlayerSubject(c.property) || c.subject.kind != EntityRef::Kind::kPronounUnresolved) {
      continue;
    }
    const int anchor = c.property == Property::kSeasonAverage ? c.trigger.start : c.span.start;
    const int clause = doc.clause_of(anchor);
    // Nearest preceding subject-like mention in the clause, if any.
    const Mention *in_clause = doc.NearestBefore(anchor, c.sentence, [&](const Mention &m) {
      return doc.clause_of(m.span.start) == clause &&
             (m.IsPlayerish() || (m.kind == Mention::Kind::kTeam && team_is_subject(m)) ||
              m.kind == Mention::Kind::kThey);
    });
    std::optional<EntityRef> ref;
    if (in_clause && in_clause->IsTeamish() &&
        (c.property == Property::kPoints || c.property == Property::kSeasonAverage)) {
      ref = team_ref(*in_clause);
    } else {
      const Mention *m = in_clause && in_clause->IsPlayerish()
                             ? in_clause
                             : doc.NearestBefore(anchor, c.sentence,
                                                 [](const Mention &x) { return x.IsPlayerish(); });
      if (m) {
        ref = player_ref(*m);
      } else if (c.sentence > 0 && c.property != Property::kSeasonAverage) {
        const Mention *prev = doc.NearestBefore(doc.size(), c.sentence - 1, [](const Mention &x) {
          return x.kind == Mention::Kind::kPlayer;
        });
        if (prev) {
          ref = RefFromMention(*prev);
          ref->via_pronoun = true;  // not in this sentence: never a Name fix
        }
      }
    }
    if (ref) {
      c.subject = *ref;
      extend(c, *ref);
    }
  }
  return claims;
}

std::vector<Verdict> VerifyClaims(const std::vector<Claim> &claims, const GameData &game,
                                  const CheckOptions &options) {
  std::vector<Verdict> verdicts;
  verdicts.reserve(claims.size());
  for (const Claim &c : claims) {
    Outcome3 o = CheckClaim(c, game);
    Verdict v;
    v.claim = c;
    v.status = o.status;
    v.expected = std::move(o.expected);
    v.emitted = std::move(o.mistakes);
    verdicts.push_back(std::move(v));
  }
  ApplyMinimalAnnotation(verdicts, game);
  for (Verdict &v : verdicts) {
    if (v.claim.property == Property::kLed && options.led_strict &&
        v.status == Verdict::Status::kRefuted && !v.emitted.empty() &&
        v.emitted.front().category == MistakeCategory::kWord) {
      v.downgraded = true;
      v.emitted.clear();
    }
    if (!options.emit_uncheckable && v.status == Verdict::Status::kUncheckable) v.emitted.clear();
  }
  return verdicts;
}

CheckResult CheckDocumentDetailed(const TokenizedText &text, const GameData &game,
                                  const CheckOptions &options) {
  CheckResult result;
  if (text.tokens.empty()) return result;
  auto claims = ResolveClaimSubjects(ExtractClaims(text, game), text, game);
  result.verdicts = VerifyClaims(claims, game, options);
  MistakeList all;
  for (const Verdict &v : result.verdicts)
    for (const Mistake &m : v.emitted) all.push_back(m);
  result.mistakes = ResolveOverlaps(std::move(all));
  return result;
}

MistakeList CheckDocument(const TokenizedText &text, const GameData &game,
                          const CheckOptions &options) {
  return CheckDocumentDetailed(text, game, options).mistakes;
}

}  // namespace accucheck
