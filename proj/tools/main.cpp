#include "commands.hpp"
#include "cache.hpp"
#include "session.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace singulocus;
using namespace singulocus::cli;

int main(int argc, char** argv) {
  CLI::App app{"Ideal-theoretic invariants of matrices and singular loci"};
  std::string session_file;
  std::vector<std::string> commands;
  bool json = false, no_cache = false;
  int power_bound = 30, degree_cap = 40;
  if (const char* env = std::getenv("SINGULOCUS_POWER_BOUND")) {
    try {
      power_bound = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: SINGULOCUS_POWER_BOUND must be an integer\n";
      return kUsage;
    }
  }
  app.add_option("session", session_file, "Session file with ring, ideal and matrix declarations")->required();
  app.add_option("--cmd", commands, "Command to run, e.g. \"anncoker A\" (repeatable)")->required();
  app.add_flag("--json", json, "Emit one JSON object per command");
  app.add_flag("--no-cache", no_cache, "Always recompute");
  app.add_option("--power-bound", power_bound, "Largest power tried in radical membership tests")
      ->check(CLI::Range(1, 1000000));
  app.add_option("--degree-cap", degree_cap, "Abort basis computations beyond this degree")
      ->check(CLI::Range(1, 1000000));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (power_bound < 1) {
    std::cerr << "error: the power bound must be positive\n";
    return kUsage;
  }
  settings().power_bound = power_bound;
  settings().degree_cap = degree_cap;

  std::ifstream in(session_file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << session_file << "\n";
    return kUsage;
  }
  std::stringstream text;
  text << in.rdbuf();
  Session session;
  try {
    session = parse_session(text.str());
  } catch (const SessionError& e) {
    std::cerr << "error: " << session_file << ": " << e.what() << "\n";
    return kUsage;
  }

  RunOptions opts;
  opts.json = json;
  if (!no_cache) opts.cache_dir = ResultCache::default_dir();
  int status = kOk;
  for (const auto& c : commands) status = std::max(status, run_command(session, c, opts, std::cout, std::cerr));
  return status;
}
