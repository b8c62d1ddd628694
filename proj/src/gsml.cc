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

#include "accucheck/gsml.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "accucheck/teams.h"

namespace accucheck {

namespace {

int ParseIndex(const std::string &field, std::size_t line, std::string_view name) {
  int n = 0;
  const char *begin = field.data();
  const char *end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, n);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw GsmlError(line, std::string(name) + " is not an integer: \"" + field + "\"");
  }
  return n;
}

struct Columns {
  int text_id = -1;
  int start = -1;
  int end = -1;
  int category = -1;
  int note = -1;
  std::size_t width = 0;
};

Columns ResolveHeader(const CsvRecord &header) {
  Columns cols;
  cols.width = header.fields.size();
  int comment = -1;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    std::string name = header.fields[i];
    for (char &ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    // Strip a UTF-8 byte order mark from the first column.
    if (i == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name = name.substr(3);
    const int col = static_cast<int>(i);
    if (name == "TEXT_ID") cols.text_id = col;
    else if (name == "START_IDX" || name == "DOC_TOKEN_START") cols.start = col;
    else if (name == "END_IDX" || name == "DOC_TOKEN_END") cols.end = col;
    else if (name == "CATEGORY" || name == "TYPE") cols.category = col;
    else if (name == "NOTE" || name == "CORRECTION") cols.note = col;
    else if (name == "COMMENT") comment = col;
  }
  if (cols.note < 0) cols.note = comment;
  if (cols.text_id < 0 || cols.start < 0 || cols.end < 0 || cols.category < 0) {
    throw GsmlError(header.line, "header must name TEXT_ID, START_IDX, END_IDX and CATEGORY");
  }
  return cols;
}

}  // namespace

std::vector<CsvRecord> ParseCsv(std::string_view content) {
  std::vector<CsvRecord> records;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < content.size()) {
    CsvRecord rec{line, {}};
    std::string field;
    bool in_quotes = false;
    bool quoted = false;
    bool done = false;
    while (!done) {
      if (i >= content.size()) {
        if (in_quotes) throw GsmlError(rec.line, "unterminated quoted field");
        rec.fields.push_back(std::move(field));
        break;
      }
      const char ch = content[i++];
      if (in_quotes) {
        if (ch == '"') {
          if (i < content.size() && content[i] == '"') {
            field += '"';
            ++i;
          } else {
            in_quotes = false;
          }
        } else {
          if (ch == '\n') ++line;
          field += ch;
        }
        continue;
      }
      switch (ch) {
        case '"':
          if (!field.empty() || quoted) {
            throw GsmlError(rec.line, "stray quote inside unquoted field");
          }
          in_quotes = true;
          quoted = true;
          break;
        case ',':
          rec.fields.push_back(std::move(field));
          field.clear();
          quoted = false;
          break;
        case '\r':
          break;
        case '\n':
          rec.fields.push_back(std::move(field));
          ++line;
          done = true;
          break;
        default:
          if (quoted) throw GsmlError(rec.line, "text after closing quote");
          field += ch;
      }
    }
    const bool blank = rec.fields.size() == 1 && rec.fields[0].empty();
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

std::string CsvEscape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

MistakeList ParseGsml(std::string_view content, const GsmlReadOptions &options) {
  const auto records = ParseCsv(content);
  if (records.empty()) throw GsmlError(0, "missing header");
  const Columns cols = ResolveHeader(records.front());

  MistakeList list;
  std::set<std::tuple<std::string, int, int, int, std::string>> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord &rec = records[r];
    auto field = [&](int col) -> const std::string & {
      static const std::string kEmpty;
      return col >= 0 && col < static_cast<int>(rec.fields.size()) ? rec.fields[col]
                                                                   : kEmpty;
    };
    if (static_cast<int>(rec.fields.size()) <=
        std::max({cols.text_id, cols.start, cols.end, cols.category})) {
      throw GsmlError(rec.line, "expected " + std::to_string(cols.width) + " fields, got " +
                                    std::to_string(rec.fields.size()));
    }
    Mistake m;
    m.doc_id = field(cols.text_id);
    if (m.doc_id.empty()) throw GsmlError(rec.line, "empty TEXT_ID");
    m.start = ParseIndex(field(cols.start), rec.line, "START_IDX") - options.index_base;
    m.end = ParseIndex(field(cols.end), rec.line, "END_IDX") - options.index_base;
    std::string label = field(cols.category);
    for (char &ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    const auto category = ParseCategoryLabel(label);
    if (!category) throw GsmlError(rec.line, "unknown category \"" + field(cols.category) + "\"");
    m.category = *category;
    m.note = field(cols.note);
    if (m.start < 0) throw GsmlError(rec.line, "negative START_IDX");
    if (m.start > m.end) {
      throw GsmlError(rec.line, "START_IDX " + std::to_string(m.start) + " > END_IDX " +
                                    std::to_string(m.end));
    }
    if (options.texts != nullptr) {
      auto it = options.texts->find(m.doc_id);
      if (it == options.texts->end()) {
        throw GsmlError(rec.line, "unknown TEXT_ID \"" + m.doc_id + "\"");
      }
      if (m.end >= it->second.size()) {
        throw GsmlError(rec.line, "END_IDX " + std::to_string(m.end) + " out of range for " +
                                      m.doc_id + " (" + std::to_string(it->second.size()) +
                                      " tokens)");
      }
    }
    if (!seen.emplace(m.doc_id, m.start, m.end, static_cast<int>(m.category), m.note).second) {
      throw GsmlError(rec.line, "duplicate row");
    }
    list.push_back(std::move(m));
  }
  return list;
}

MistakeList ReadGsmlFile(const std::filesystem::path &path, const GsmlReadOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GsmlError(0, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseGsml(buf.str(), options);
}

std::string WriteGsml(const MistakeList &list) {
  std::string out(kGsmlHeader);
  out += "\n";
  for (const Mistake &m : list) {
    out += CsvEscape(m.doc_id) + "," + std::to_string(m.start) + "," + std::to_string(m.end) +
           "," + std::string(CategoryLabel(m.category)) + "," + CsvEscape(m.note) + "\n";
  }
  return out;
}

void WriteGsmlFile(const std::filesystem::path &path, const MistakeList &list) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GsmlError(0, "cannot write " + path.string());
  out << WriteGsml(list);
}

}  // namespace accucheck
