#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the ring family R(I)_{a,b}"};
  app.require_subcommand(1);

  std::string script_path;
  bool json_only = false;
  long long cap = -1;
  long long seed = -1;

  CLI::App* run = app.add_subcommand("run", "execute a script file");
  run->add_option("script", script_path, "script file")->required();
  run->add_flag("--json-only", json_only, "suppress text renderings");
  run->add_option("--cap", cap, "size cap for finite enumeration");
  run->add_option("--seed", seed, "seed for randomized sweeps");

  CLI::App* repl_cmd = app.add_subcommand("repl", "interactive session");
  repl_cmd->add_flag("--json-only", json_only, "suppress text renderings");
  repl_cmd->add_option("--cap", cap, "size cap for finite enumeration");
  repl_cmd->add_option("--seed", seed, "seed for randomized sweeps");

  CLI11_PARSE(app, argc, argv);

  rq::Session session;
  if (const char* env = std::getenv("REES_QUOT_CAP"))
    session.cap = std::strtoull(env, nullptr, 10);
  if (cap >= 0) session.cap = (unsigned long long)cap;
  if (seed >= 0) session.seed = (unsigned)seed;
  session.json_only = json_only;

  if (repl_cmd->parsed()) return rq::repl(session, std::cin, std::cout);

  std::ifstream in(script_path);
  if (!in) {
    std::cerr << "cannot open script: " << script_path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::vector<rq::Command> commands;
  try {
    commands = rq::parse_script(ss.str());
  } catch (const rq::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return rq::execute(session, commands, std::cout);
}
