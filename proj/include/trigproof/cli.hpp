#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace trigproof {

struct RunConfig {
  std::string command;            // verify | audit | sample | report | list
  std::string proof = "all";      // lemma id filter for verify
  std::string target;             // audit target (empty = default sweep)
  std::string forbidden;          // audit forbidden node
  int samples = 1000;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string format = "text";    // text | json
  std::string proofs_dir;         // resolved from flag, env, default
};

// Exit contract: 0 pass, 1 verdict failure, 2 usage or load error.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_audit(const RunConfig& cfg, std::ostream& out);
int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out);
int cmd_list(const RunConfig& cfg, std::ostream& out);

// Full argv-level entry point used by the binary and by tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace trigproof
