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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "accucheck/gsml.h"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string kDir = std::string(ACCUCHECK_FIXTURE_DIR) + "/memphis_phoenix";

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted), capturing stdout.
Run Cli(const std::string &args) {
  const std::string cmd = std::string(ACCUCHECK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path TempFile(const std::string &name) {
  std::random_device rd;
  return fs::temp_directory_path() / ("accucheck-cli-" + std::to_string(rd()) + "-" + name);
}

}  // namespace

TEST_CASE("validate-game") {
  const Run ok = Cli("validate-game " + kDir + "/games/201411050PHO.json");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("ok") != std::string::npos);
  const fs::path bad = TempFile("bad.json");
  std::ofstream(bad) << "{\"home_name\": 3}";
  CHECK(Cli("validate-game " + bad.string()).status == 1);
  fs::remove(bad);
}

TEST_CASE("validate-gsml") {
  CHECK(Cli("validate-gsml --gsml " + kDir + "/gold.csv --texts " + kDir + "/texts").status == 0);
  const fs::path bad = TempFile("bad.csv");
  std::ofstream(bad) << "TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE\nrecap,3,5,NAME,\nrecap,5,6,WORD,\n";
  const Run r = Cli("validate-gsml --gsml " + bad.string() + " --texts " + kDir + "/texts");
  CHECK(r.status == 1);
  CHECK(r.out.find("overlap") != std::string::npos);
  fs::remove(bad);
}

TEST_CASE("check, then score the output") {
  const fs::path out = TempFile("check.csv");
  const Run check = Cli("check --texts " + kDir + "/texts --games " + kDir + "/games --map " + kDir +
                        "/map.csv --out " + out.string());
  REQUIRE(check.status == 0);
  const accucheck::MistakeList found = accucheck::ReadGsmlFile(out);
  CHECK(found.size() >= 7);
  for (const auto &m : found) CHECK(m.doc_id == "recap");

  const Run score = Cli("score --gold " + kDir + "/gold.csv --submitted " + out.string() + " --texts " + kDir +
                        "/texts --format csv");
  CHECK(score.status == 0);
  CHECK(score.out.find("Overall") != std::string::npos);
  CHECK(score.out.find("0.700") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("score refuses overlapping submissions") {
  const fs::path bad = TempFile("sub.csv");
  std::ofstream(bad) << "TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE\nrecap,3,5,NAME,\nrecap,5,6,WORD,\n";
  CHECK(Cli("score --gold " + kDir + "/gold.csv --submitted " + bad.string() + " --texts " + kDir + "/texts")
            .status == 1);
  fs::remove(bad);
}

TEST_CASE("blind-spot prints what nobody found") {
  const Run r = Cli("blind-spot --gold " + kDir + "/gold.csv --submitted " + kDir + "/gold.csv");
  CHECK(r.status == 0);
  CHECK(accucheck::ParseGsml(r.out).empty());
}

TEST_CASE("analyze reports") {
  const std::string base = "analyze --gold " + kDir + "/gold.csv --texts " + kDir + "/texts --format csv ";
  const Run freq = Cli(base + "--report freq --games " + kDir + "/games");
  CHECK(freq.status == 0);
  CHECK(freq.out.find("NUM-DIGIT,NUMBER,3") != std::string::npos);
  const Run totals = Cli(base + "--report totals");
  CHECK(totals.out.find("NUMBER,3") != std::string::npos);
  CHECK(totals.out.find("NAME,2") != std::string::npos);
  const Run positions = Cli(base + "--report positions --category NAME");
  CHECK(positions.status == 0);
}

TEST_CASE("one-based index files are shifted") {
  // The base applies to every GSML input of the run.
  const fs::path one = TempFile("one.csv");
  std::ofstream(one) << "TEXT_ID,START_IDX,END_IDX,CATEGORY,NOTE\nrecap,1,1,NAME,\nrecap,73,73,WORD,\n";
  const std::string args = "validate-gsml --gsml " + one.string() + " --texts " + kDir + "/texts";
  CHECK(Cli("--index-base 1 " + args).status == 0);
  CHECK(Cli(args).status == 1);  // 73 is past the end when read 0-based
  const Run r = Cli("--index-base 1 score --gold " + one.string() + " --submitted " + one.string() +
                    " --texts " + kDir + "/texts --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("1.000") != std::string::npos);
  fs::remove(one);
}

TEST_CASE("bad arguments fail") {
  CHECK(Cli("score --gold /nonexistent").status != 0);
  CHECK(Cli("no-such-command").status != 0);
}
