// End-to-end checks of the hatecode binary: exit codes, output determinism
// and the wire formats of each subcommand.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "support/subprocess.hpp"

using testsupport::CommandResult;
using testsupport::ScratchDir;
using testsupport::run_command;
using testsupport::slurp;

namespace {

const std::string kCli = HATECODE_CLI_PATH;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

const char* kTinyCorpus =
    R"({"id":"1","handle":"alice","created_at":"2016-10-04T10:00:00Z","text":"gas the skypes"})"
    "\n"
    R"({"id":"2","handle":"bob","created_at":"2016-10-04T11:00:00Z","text":"i skype my mom everyday"})"
    "\n"
    R"({"id":"3","handle":"alice","created_at":"2016-10-05T09:00:00Z","text":"Gas The Skypes"})"
    "\n"
    R"({"id":"4","handle":"carol","created_at":"2016-10-05T10:00:00Z","text":"hola amigo como estas hoy"})"
    "\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero, unknown subcommand exits one") {
  ScratchDir dir("hatecode_cli_help");
  CHECK(run_command(kCli + " --help", dir.path).exit_code == 0);
  CHECK(run_command(kCli + " frobnicate", dir.path).exit_code == 1);
  CHECK(run_command(kCli, dir.path).exit_code == 1);
}

TEST_CASE("invalid support is a usage error with a synopsis") {
  ScratchDir dir("hatecode_cli_support");
  write_file(dir.file("t.jsonl"), kTinyCorpus);
  auto result = run_command(
      kCli + " mine --tweets " + dir.file("t.jsonl") + " --support 1.5",
      dir.path);
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("InvalidSupport") != std::string::npos);
  CHECK(result.err.find("usage: hatecode mine") != std::string::npos);
}

TEST_CASE("data errors exit with code two") {
  ScratchDir dir("hatecode_cli_dataerr");
  write_file(dir.file("dup.jsonl"),
             R"({"id":"7","handle":"a","created_at":"2016-10-04T10:00:00Z","text":"x"})"
             "\n"
             R"({"id":"7","handle":"b","created_at":"2016-10-04T11:00:00Z","text":"y"})"
             "\n");
  auto result = run_command(kCli + " ingest --tweets " + dir.file("dup.jsonl") +
                                " --out " + dir.file("out.jsonl"),
                            dir.path);
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("DuplicateId") != std::string::npos);

  auto missing = run_command(
      kCli + " classify --model " + dir.file("absent.json") + " --tweets " +
          dir.file("dup.jsonl"),
      dir.path);
  CHECK(missing.exit_code == 2);
}

TEST_CASE("ingest validates, dedups and filters") {
  ScratchDir dir("hatecode_cli_ingest");
  write_file(dir.file("t.jsonl"), kTinyCorpus);
  auto result = run_command(kCli + " ingest --tweets " + dir.file("t.jsonl") +
                                " --out " + dir.file("clean.jsonl"),
                            dir.path);
  REQUIRE(result.exit_code == 0);
  // tweet 3 is a case-duplicate of 1; tweet 4 fails the english filter
  std::istringstream lines(slurp(dir.file("clean.jsonl")));
  std::string line;
  std::vector<std::string> ids;
  while (std::getline(lines, line)) {
    ids.push_back(nlohmann::json::parse(line)["id"].get<std::string>());
  }
  CHECK(ids == std::vector<std::string>{"1", "2"});
}

TEST_CASE("synth/train/eval are byte-for-byte reproducible") {
  ScratchDir dir("hatecode_cli_determinism");
  const std::string synth = kCli + " synth --seed 11 --count 120 --out ";
  REQUIRE(run_command(synth + dir.file("a.jsonl") + " --labels-out " +
                          dir.file("a.csv"),
                      dir.path)
              .exit_code == 0);
  REQUIRE(run_command(synth + dir.file("b.jsonl") + " --labels-out " +
                          dir.file("b.csv"),
                      dir.path)
              .exit_code == 0);
  CHECK(slurp(dir.file("a.jsonl")) == slurp(dir.file("b.jsonl")));
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));

  const std::string eval_cmd = kCli + " eval --tweets " + dir.file("a.jsonl") +
                               " --labels " + dir.file("a.csv") +
                               " --folds 4 --seed 42 --min-df 1";
  auto first = run_command(eval_cmd, dir.path);
  REQUIRE(first.exit_code == 0);
  auto second = run_command(eval_cmd, dir.path);
  CHECK(first.out == second.out);
  CHECK(first.out.find("Folds: 4") != std::string::npos);
}

TEST_CASE("classify emits one json object per tweet") {
  ScratchDir dir("hatecode_cli_classify");
  REQUIRE(run_command(kCli + " synth --seed 3 --count 80 --out " +
                          dir.file("t.jsonl") + " --labels-out " +
                          dir.file("l.csv"),
                      dir.path)
              .exit_code == 0);
  REQUIRE(run_command(kCli + " train --tweets " + dir.file("t.jsonl") +
                          " --labels " + dir.file("l.csv") + " --min-df 1" +
                          " --out " + dir.file("m.json"),
                      dir.path)
              .exit_code == 0);
  auto result = run_command(kCli + " classify --model " + dir.file("m.json") +
                                " --tweets " + dir.file("t.jsonl"),
                            dir.path);
  REQUIRE(result.exit_code == 0);
  std::istringstream lines(result.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto record = nlohmann::json::parse(line);
    CHECK(record.contains("id"));
    CHECK(record.contains("handle"));
    CHECK(record.contains("score"));
    const std::string label = record["label"].get<std::string>();
    CHECK((label == "hateful" || label == "benign"));
    ++count;
  }
  CHECK(count == 80);
}

TEST_CASE("config file supplies defaults, flags override") {
  ScratchDir dir("hatecode_cli_config");
  REQUIRE(run_command(kCli + " synth --seed 5 --count 60 --out " +
                          dir.file("t.jsonl") + " --labels-out " +
                          dir.file("l.csv"),
                      dir.path)
              .exit_code == 0);
  write_file(dir.file("conf.json"),
             R"({"folds": 3, "epochs": 5, "min_df": 1})");

  const std::string base = kCli + " eval --tweets " + dir.file("t.jsonl") +
                           " --labels " + dir.file("l.csv") + " --config " +
                           dir.file("conf.json");
  auto with_config = run_command(base, dir.path);
  REQUIRE(with_config.exit_code == 0);
  CHECK(with_config.out.find("Folds: 3") != std::string::npos);

  auto with_override = run_command(base + " --folds 5", dir.path);
  REQUIRE(with_override.exit_code == 0);
  CHECK(with_override.out.find("Folds: 5") != std::string::npos);

  write_file(dir.file("bad.json"), R"({"folds": 0})");
  auto bad = run_command(base + " --config " + dir.file("bad.json"), dir.path);
  CHECK(bad.exit_code == 1);

  write_file(dir.file("typo.json"), R"({"foldz": 3})");
  auto typo = run_command(base + " --config " + dir.file("typo.json"), dir.path);
  CHECK(typo.exit_code == 1);
}

TEST_CASE("timeline csv and plot file agree") {
  ScratchDir dir("hatecode_cli_timeline");
  REQUIRE(run_command(kCli + " synth --seed 9 --profile field --out " +
                          dir.file("f.jsonl") + " --labels-out " +
                          dir.file("fl.csv"),
                      dir.path)
              .exit_code == 0);
  auto result = run_command(
      kCli + " timeline --tweets " + dir.file("f.jsonl") + " --labels " +
          dir.file("fl.csv") + " --out " + dir.file("days.csv") + " --plot " +
          dir.file("days.dat"),
      dir.path);
  REQUIRE(result.exit_code == 0);
  std::istringstream csv(slurp(dir.file("days.csv")));
  std::istringstream dat(slurp(dir.file("days.dat")));
  std::string csv_line, dat_line;
  std::getline(csv, csv_line);  // header
  CHECK(csv_line == "date,count");
  while (std::getline(csv, csv_line)) {
    REQUIRE(std::getline(dat, dat_line));
    auto comma = csv_line.find(',');
    CHECK(dat_line ==
          csv_line.substr(0, comma) + " " + csv_line.substr(comma + 1));
  }
  CHECK(!std::getline(dat, dat_line));
}

TEST_CASE("scope hateful without labels or model is a usage error") {
  ScratchDir dir("hatecode_cli_scope");
  write_file(dir.file("t.jsonl"), kTinyCorpus);
  auto result = run_command(
      kCli + " mine --tweets " + dir.file("t.jsonl") + " --support 0.5",
      dir.path);
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("--scope") != std::string::npos);
}

}  // TEST_SUITE
