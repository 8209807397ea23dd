// Copyright 2026-present the icsmine project
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

// End-to-end tests that drive the installed binary the way an operator
// would: via a shell, with files on disk and exit codes as the contract.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Per-test scratch directory, removed on destruction.
class Scratch {
  public:
    Scratch() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() /
               ("icsmine-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;

    fs::path path(const std::string& name) const { return dir_ / name; }
    std::string str(const std::string& name) const { return path(name).string(); }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(path(name), std::ios::binary);
        out << content;
    }

    RunResult run(const std::string& args) const {
        const fs::path out_path = dir_ / ".stdout";
        const fs::path err_path = dir_ / ".stderr";
        const std::string command = std::string("'") + ICSMINE_CLI_PATH + "' " +
                                    args + " > '" + out_path.string() + "' 2> '" +
                                    err_path.string() + "'";
        const int status = std::system(command.c_str());
        RunResult result;
        if (status != -1 && WIFEXITED(status)) {
            result.exit_code = WEXITSTATUS(status);
        }
        result.out = slurp(out_path);
        result.err = slurp(err_path);
        return result;
    }

  private:
    fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli pipeline from simulation to attack-only report") {
    Scratch tmp;

    // Stage 1: traces. Same seed twice to confirm the generator is
    // reproducible through the binary, once more with an attack injected.
    RunResult sim = tmp.run("simulate --ticks=4000 --seed=11 --out=" +
                            tmp.str("normal.csv"));
    REQUIRE(sim.exit_code == 0);
    CHECK(contains(sim.out, "config:"));
    CHECK(contains(sim.out, "attack = none"));
    CHECK(contains(sim.out, "wrote 4000 rows"));

    RunResult sim_again = tmp.run("simulate --ticks=4000 --seed=11 --out=" +
                                  tmp.str("normal2.csv"));
    REQUIRE(sim_again.exit_code == 0);
    CHECK(slurp(tmp.path("normal.csv")) == slurp(tmp.path("normal2.csv")));

    RunResult sim_attack = tmp.run(
        "simulate --ticks=4000 --seed=11 --attack=force_valve_open "
        "--attack-start=1500 --attack-end=2500 --out=" +
        tmp.str("attack.csv"));
    REQUIRE(sim_attack.exit_code == 0);
    CHECK(contains(sim_attack.out, "force_valve_open ticks 1500..2500"));
    CHECK(slurp(tmp.path("attack.csv")) != slurp(tmp.path("normal.csv")));

    // Stage 2: discretize. Under normal operation the tank never nears the
    // 850 level threshold, so LIT101 is constant and gets dropped; the
    // overflow attack pushes it past the threshold and keeps it.
    RunResult tf_normal =
        tmp.run("transform --preset=simulator --input=" + tmp.str("normal.csv") +
                " --out=" + tmp.str("normal.tx"));
    REQUIRE(tf_normal.exit_code == 0);
    CHECK(contains(tf_normal.out, "config:"));
    CHECK(contains(tf_normal.out, "rows: 4000"));
    CHECK(contains(tf_normal.out, "dropped (constant): LIT101"));
    CHECK(contains(tf_normal.out, "wrote 4000 transactions"));

    RunResult tf_attack =
        tmp.run("transform --preset=simulator --input=" + tmp.str("attack.csv") +
                " --out=" + tmp.str("attack.tx"));
    REQUIRE(tf_attack.exit_code == 0);
    CHECK(contains(tf_attack.out, "dropped (constant): none"));

    // Stage 3: mine both sides, and re-run one to confirm byte stability.
    RunResult mine_normal =
        tmp.run("mine --min-support=0.01 --input=" + tmp.str("normal.tx") +
                " --out=" + tmp.str("normal.fi"));
    REQUIRE(mine_normal.exit_code == 0);
    CHECK(contains(mine_normal.out, "config:"));
    CHECK(contains(mine_normal.out, "min_support = 0.01 (count 40 of 4000)"));
    CHECK(contains(mine_normal.out, "simd = "));
    CHECK(contains(mine_normal.out, "frequent itemsets: "));

    RunResult mine_attack =
        tmp.run("mine --min-support=0.01 --input=" + tmp.str("attack.tx") +
                " --out=" + tmp.str("attack.fi"));
    REQUIRE(mine_attack.exit_code == 0);

    RunResult mine_again =
        tmp.run("mine --min-support=0.01 --input=" + tmp.str("normal.tx") +
                " --out=" + tmp.str("normal2.fi"));
    REQUIRE(mine_again.exit_code == 0);
    CHECK(slurp(tmp.path("normal.fi")) == slurp(tmp.path("normal2.fi")));

    // Stage 4: rules at full confidence.
    RunResult rules_normal = tmp.run("rules --input=" + tmp.str("normal.fi") +
                                     " --out=" + tmp.str("normal.rules"));
    REQUIRE(rules_normal.exit_code == 0);
    CHECK(contains(rules_normal.out, "min_confidence = 1"));
    CHECK(contains(rules_normal.out, "rules: "));

    RunResult rules_attack = tmp.run("rules --input=" + tmp.str("attack.fi") +
                                     " --out=" + tmp.str("attack.rules") +
                                     " --jsonl=" + tmp.str("attack.jsonl"));
    REQUIRE(rules_attack.exit_code == 0);
    CHECK(fs::exists(tmp.path("attack.jsonl")));

    // Stage 5: difference, verified against the attack transactions.
    RunResult diffed = tmp.run(
        "diff --attack=" + tmp.str("attack.rules") + " --normal=" +
        tmp.str("normal.rules") + " --out=" + tmp.str("diff.rules") +
        " --out-normal-only=" + tmp.str("normal_only.rules") +
        " --verify-against=" + tmp.str("attack.tx") + " --report-jsonl=" +
        tmp.str("report.jsonl") + " --samples-per-size=2");
    REQUIRE(diffed.exit_code == 0);
    CHECK(contains(diffed.out, "attack rules:"));
    CHECK(contains(diffed.out, "attack-only rules: "));
    CHECK(contains(diffed.out, "warning: attributes only in attack rules: LIT101"));
    CHECK(contains(diffed.out, "verified "));
    CHECK(contains(diffed.out, "at confidence >= 1"));
    CHECK(fs::exists(tmp.path("normal_only.rules")));
    CHECK(fs::exists(tmp.path("report.jsonl")));

    // The diff must carry actual rules, not just a header line.
    const std::string diff_content = slurp(tmp.path("diff.rules"));
    CHECK(contains(diff_content, "=>"));
    CHECK(contains(diff_content, "LIT101>=850"));

    // Stage 6: tally the attack-only rules.
    RunResult rep = tmp.run("report --input=" + tmp.str("diff.rules") +
                            " --samples-per-size=1");
    REQUIRE(rep.exit_code == 0);
    CHECK(contains(rep.out, "rules: "));
    CHECK(contains(rep.out, "by antecedent size:"));
    CHECK(contains(rep.out, "samples:"));
}

TEST_CASE("cli diff of a rule file with itself is empty") {
    Scratch tmp;
    tmp.write("self.rules",
              "# transactions=100\n"
              "MV101=Open => P101=On\t60\t60/60\n"
              "P101=On => MV101=Open\t60\t60/60\n");

    RunResult diffed = tmp.run("diff --attack=" + tmp.str("self.rules") +
                               " --normal=" + tmp.str("self.rules") +
                               " --out=" + tmp.str("empty.rules"));
    REQUIRE(diffed.exit_code == 0);
    CHECK(contains(diffed.out, "attack-only rules: 0 (overlap 2)"));
    CHECK(slurp(tmp.path("empty.rules")) == "# transactions=100\n");
}

TEST_CASE("cli transform reports a missing column as a data error") {
    Scratch tmp;
    tmp.write("short.csv",
              "Timestamp,FIT101,P101,FIT201,LIT101,Normal/Attack\n"
              "D0 00:00:00,2.500,2,0.000,650.000,Normal\n");

    RunResult result = tmp.run("transform --preset=simulator --input=" +
                               tmp.str("short.csv") + " --out=" +
                               tmp.str("short.tx"));
    CHECK(result.exit_code == 2);
    CHECK(contains(result.err, "error:"));
    CHECK(contains(result.err, "MV101"));
}

TEST_CASE("cli usage errors exit with code 1") {
    Scratch tmp;

    RunResult bad_flag = tmp.run("mine --input=a --out=b --definitely-not-a-flag");
    CHECK(bad_flag.exit_code == 1);
    CHECK(!bad_flag.err.empty());

    RunResult bad_subcommand = tmp.run("frobnicate");
    CHECK(bad_subcommand.exit_code == 1);

    RunResult missing_required = tmp.run("simulate --ticks=10");
    CHECK(missing_required.exit_code == 1);

    RunResult no_subcommand = tmp.run("");
    CHECK(no_subcommand.exit_code == 1);
}

TEST_CASE("cli data errors exit with code 2") {
    Scratch tmp;

    RunResult bad_attack = tmp.run("simulate --attack=melt --out=" +
                                   tmp.str("z.csv"));
    CHECK(bad_attack.exit_code == 2);
    CHECK(contains(bad_attack.err, "unknown attack kind"));

    RunResult missing_input = tmp.run("mine --input=" + tmp.str("absent.tx") +
                                      " --out=" + tmp.str("absent.fi"));
    CHECK(missing_input.exit_code == 2);
    CHECK(contains(missing_input.err, "error:"));

    tmp.write("itemsets.fi", "# transactions=10 min_count=1\nA=On\t5\n");
    RunResult bad_confidence = tmp.run("rules --input=" + tmp.str("itemsets.fi") +
                                       " --out=" + tmp.str("r.rules") +
                                       " --min-confidence=0");
    CHECK(bad_confidence.exit_code == 2);
}

TEST_CASE("cli help runs without a subcommand requirement") {
    Scratch tmp;
    RunResult help = tmp.run("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.out, "simulate"));
    CHECK(contains(help.out, "mine"));
    CHECK(contains(help.out, "diff"));
}
