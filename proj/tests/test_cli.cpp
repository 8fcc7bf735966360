#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/mini_schema.hpp"
#include "trigproof/cli.hpp"
#include "trigproof/figure.hpp"
#include "trigproof/report_io.hpp"

using namespace trigproof;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  args.push_back("--proofs-dir");
  args.push_back(TRIGPROOF_PROOFS_DIR);
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(TRIGPROOF_SOURCE_DIR) + "/schemas/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("verify all: exit 0, sixteen accepted") {
  RunResult r = run({"verify", "--proof", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16/16 scripts accepted") != std::string::npos);
}

TEST_CASE("verify single proof prints its invoked set") {
  RunResult r = run({"verify", "--proof", "proof_first"});
  CHECK(r.code == 0);
  CHECK(r.out.find("invoked: fig1_facts tan_double_angle") !=
        std::string::npos);
}

TEST_CASE("verify unknown lemma: exit 2") {
  RunResult r = run({"verify", "--proof", "nonexistent"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownLemma") != std::string::npos);
}

TEST_CASE("audit default: exit 0 with four clean verdicts") {
  RunResult r = run({"audit"});
  CHECK(r.code == 0);
  int count = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find("not reachable", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 4);
}

TEST_CASE("audit with a reachable forbidden node: exit 1 plus witness") {
  RunResult r = run({"audit", "--target", "proof_first", "--forbidden",
                     "ratio_definitions"});
  CHECK(r.code == 1);
  CHECK(r.out.find("witness: proof_first fig1_facts ratio_definitions") !=
        std::string::npos);
}

TEST_CASE("audit unknown ids: exit 2") {
  RunResult r = run({"audit", "--target", "x", "--forbidden", "y"});
  CHECK(r.code == 2);
}

TEST_CASE("sample: exit 0 within tolerance, 8 figures") {
  RunResult r = run({"sample", "--samples", "60", "--seed", "42"});
  CHECK(r.code == 0);
  for (const auto& id : figure_ids())
    CHECK(r.out.find("figure " + id) != std::string::npos);
}

TEST_CASE("sample below the double-precision floor: exit 1") {
  RunResult r = run({"sample", "--samples", "30", "--tol", "1e-30"});
  CHECK(r.code == 1);
  CHECK(r.out.find("TOLERANCE BREACH") != std::string::npos);
}

TEST_CASE("sample with zero samples: exit 2") {
  RunResult r = run({"sample", "--samples", "0"});
  CHECK(r.code == 2);
}

TEST_CASE("identical configuration gives byte-identical output") {
  for (auto args : {std::vector<std::string>{"verify", "--proof", "all",
                                             "--format", "json"},
                    std::vector<std::string>{"audit", "--format", "json"},
                    std::vector<std::string>{"sample", "--samples", "40",
                                             "--seed", "7"}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("JSON outputs validate against the shipped schemas") {
  {
    RunResult r = run({"verify", "--proof", "all", "--format", "json"});
    auto errs = mini_schema::check(load_schema("verify_reports.schema.json"),
                                   nlohmann::json::parse(r.out));
    for (const auto& e : errs) {
      INFO(e);
      CHECK(false);
    }
  }
  {
    RunResult r = run({"audit", "--format", "json"});
    auto errs = mini_schema::check(load_schema("audit_verdicts.schema.json"),
                                   nlohmann::json::parse(r.out));
    for (const auto& e : errs) {
      INFO(e);
      CHECK(false);
    }
  }
  {
    RunResult r = run({"sample", "--samples", "40", "--format", "json"});
    auto errs = mini_schema::check(load_schema("residual_reports.schema.json"),
                                   nlohmann::json::parse(r.out));
    for (const auto& e : errs) {
      INFO(e);
      CHECK(false);
    }
  }
  {
    Figure f = construct_figure("fig3", {{"theta", 0.5}});
    auto errs = mini_schema::check(load_schema("figure_dump.schema.json"),
                                   nlohmann::json::parse(figure_dump_json(f)));
    for (const auto& e : errs) {
      INFO(e);
      CHECK(false);
    }
  }
}

TEST_CASE("text and json verdicts agree") {
  RunResult text = run({"audit"});
  RunResult js = run({"audit", "--format", "json"});
  auto parsed = nlohmann::json::parse(js.out);
  for (const auto& v : parsed) {
    bool reachable = v["reachable"];
    CHECK_FALSE(reachable);
    std::string line = "audit " + v["target"].get<std::string>() +
                       " against " + v["forbidden"].get<std::string>() +
                       ": not reachable";
    CHECK(text.out.find(line) != std::string::npos);
  }
}

TEST_CASE("report and list commands") {
  RunResult rep = run({"report", "--samples", "30"});
  CHECK(rep.code == 0);
  RunResult ls = run({"list"});
  CHECK(ls.code == 0);
  CHECK(ls.out.find("16 axioms, 12 derived, 4 theorems") != std::string::npos);
}

TEST_CASE("TRIG_PROOFS_DIR environment override") {
  setenv("TRIG_PROOFS_DIR", TRIGPROOF_PROOFS_DIR, 1);
  std::ostringstream out, err;
  int code = run_cli({"list"}, out, err);
  unsetenv("TRIG_PROOFS_DIR");
  CHECK(code == 0);
  CHECK(out.str().find("16 axioms") != std::string::npos);
}
