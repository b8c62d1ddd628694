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

#ifndef ACCUCHECK_GSML_H_
#define ACCUCHECK_GSML_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "accucheck/annotation.h"

namespace accucheck {

// Exchange format for mistake lists:
//
//   TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE
//
// UTF-8, RFC-4180 quoting, token indices 0-based and end-inclusive. NOTE may
// be empty.
inline constexpr std::string_view kGsmlHeader = "TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE";

class GsmlError : public std::runtime_error {
 public:
  GsmlError(std::size_t row, const std::string &what)
      : std::runtime_error(row == 0 ? what : "row " + std::to_string(row) + ": " + what),
        row_(row) {}
  // 1-based line number of the offending record (0 for file-level errors).
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

struct GsmlReadOptions {
  // When set, indices are range-checked against these texts.
  const TextIndex *texts = nullptr;
  // Base of the indices in the file. The native format is 0-based; files
  // using 1-based indices are shifted on read.
  int index_base = 0;
};

// Also reads the published shared-task layout, which names its columns
// TEXT_ID, DOC_TOKEN_START, DOC_TOKEN_END, TYPE and optionally CORRECTION or
// COMMENT (used as the note).
MistakeList ParseGsml(std::string_view content, const GsmlReadOptions &options = {});
MistakeList ReadGsmlFile(const std::filesystem::path &path,
                         const GsmlReadOptions &options = {});

std::string WriteGsml(const MistakeList &list);
void WriteGsmlFile(const std::filesystem::path &path, const MistakeList &list);

// RFC-4180 record splitting, exposed for the other CSV inputs (text maps).
// Each record is a vector of unquoted fields; line numbers are 1-based.
struct CsvRecord {
  std::size_t line;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> ParseCsv(std::string_view content);
std::string CsvEscape(std::string_view field);

}  // namespace accucheck

#endif  // ACCUCHECK_GSML_H_
