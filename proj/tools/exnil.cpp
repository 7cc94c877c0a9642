// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

// exnil: command-line front end over the C API.
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "exnil/exnil.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

/// Flag values of one subcommand, gathered into the JSON argument object.
struct Args {
  std::map<std::string, int> ints;
  std::map<std::string, std::string> strings;
  std::optional<unsigned long long> seed;
  std::string input_file;
  std::string format = "text";
};

void add_int(CLI::App* cmd, Args& a, const std::string& flag, const std::string& key, const std::string& help,
             bool required = false) {
  auto* opt = cmd->add_option_function<int>(flag, [&a, key](int v) { a.ints[key] = v; }, help);
  if (required) opt->required();
}

void add_str(CLI::App* cmd, Args& a, const std::string& flag, const std::string& key, const std::string& help,
             bool required = false) {
  auto* opt = cmd->add_option_function<std::string>(flag, [&a, key](const std::string& v) { a.strings[key] = v; }, help);
  if (required) opt->required();
}

void add_format(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

/// --expr TEXT or --input FILE ('-' reads standard input).
void add_input(CLI::App* cmd, Args& a) {
  auto* expr = cmd->add_option_function<std::string>("--expr", [&a](const std::string& v) { a.strings["input"] = v; },
                                                     "Expression text");
  auto* file = cmd->add_option("--input", a.input_file, "File holding the expression ('-' for stdin)");
  expr->excludes(file);
  file->excludes(expr);
}

void add_deformation(CLI::App* cmd, Args& a) {
  add_str(cmd, a, "--kappa", "kappa", "Deformation parameters kappa_1..kappa_N, e.g. 0,0,1,0");
  add_str(cmd, a, "--roots", "roots", "Roots with multiplicities, e.g. 0:2,1:2");
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

int exit_for(exnil_status s) {
  switch (s) {
    case EXNIL_OK: return kExitOk;
    case EXNIL_E_CAP: return kExitCap;
    case EXNIL_E_NULL:
    case EXNIL_E_PARSE:
    case EXNIL_E_STRUCTURAL:
    case EXNIL_E_PRECONDITION: return kExitUsage;
    case EXNIL_E_INVARIANT:
    case EXNIL_E_INTERNAL: return kExitFail;
  }
  return kExitFail;
}

int run(const std::string& command, const Args& a) {
  nlohmann::json args = nlohmann::json::object();
  for (const auto& [k, v] : a.ints) args[k] = v;
  for (const auto& [k, v] : a.strings) args[k] = v;
  if (a.seed) args["seed"] = *a.seed;
  if (!a.input_file.empty()) {
    try {
      args["input"] = read_input(a.input_file);
    } catch (const std::exception& e) {
      std::cerr << "exnil: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  exnil_result* r = nullptr;
  const exnil_status s = exnil_run(command.c_str(), args.dump().c_str(), &r);
  if (s != EXNIL_OK) {
    std::cerr << "exnil: " << exnil_status_name(s) << ": " << exnil_last_error() << '\n';
    return exit_for(s);
  }
  std::fputs(a.format == "json" ? exnil_result_json(r) : exnil_result_text(r), stdout);
  const int code = exnil_result_cap_exceeded(r) ? kExitCap : (exnil_result_ok(r) ? kExitOk : kExitFail);
  exnil_result_free(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exnil: exact computations in the extended nilHecke algebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", exnil_version());

  std::map<std::string, Args> args;
  const auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_format(cmd, args[name]);
    return cmd;
  };

  for (const char* name : {"schubert", "dual-schubert"}) {
    Args& a = args[name];
    CLI::App* c = sub(name, std::string(name) == "schubert" ? "Schubert polynomials" : "Dual Schubert polynomials");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_str(c, a, "--perm", "perm", "Permutation as a word 's1 s2' or one-line '[2,3,1]'; all of S_n if omitted");
  }
  {
    Args& a = args["schur"];
    CLI::App* c = sub("schur", "Schur polynomial by the dual Jacobi-Trudi determinant");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_str(c, a, "--partition", "partition", "Partition, e.g. 2,1", true);
    add_int(c, a, "--from", "from", "First variable of the window (default 1)");
    add_int(c, a, "--to", "to", "Last variable of the window (default n)");
  }
  {
    Args& a = args["basis"];
    CLI::App* c = sub("basis", "Exterior generators of the extended symmetric polynomials");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_str(c, a, "--family", "family", "schubert | dual | interp:r (default dual)");
  }
  {
    Args& a = args["member"];
    CLI::App* c = sub("member", "Extended symmetry test, or ideal membership with --kappa/--roots");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_input(c, a);
    add_deformation(c, a);
    add_int(c, a, "--cap", "cap", "Degree window for ideal membership");
  }
  {
    Args& a = args["decompose"];
    CLI::App* c = sub("decompose", "Coordinates over the symmetric polynomials in an exterior basis");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_input(c, a);
    add_str(c, a, "--family", "family", "schubert | dual | interp:r (default dual)");
  }
  {
    Args& a = args["nh-mul"];
    CLI::App* c = sub("nh-mul", "Product in the extended nilHecke algebra");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_str(c, a, "--a", "a", "Left factor", true);
    add_str(c, a, "--b", "b", "Right factor", true);
  }
  {
    Args& a = args["idempotents"];
    CLI::App* c = sub("idempotents", "Orthogonal idempotents summing to 1");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_int(c, a, "--bound", "bound", "Largest n accepted (default 4)");
  }
  {
    Args& a = args["diff"];
    CLI::App* c = sub("diff", "Apply the differential d_N or its deformation");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_int(c, a, "--N", "N", "Level N (implied by --kappa/--roots)");
    add_input(c, a);
    add_deformation(c, a);
    add_str(c, a, "--sign", "sign", "Deformed sign: printed | match (default printed)");
  }
  {
    Args& a = args["cohomology"];
    CLI::App* c = sub("cohomology", "Cohomology of the extended symmetric polynomials under d_N");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_int(c, a, "--N", "N", "Level N (implied by --kappa/--roots)");
    add_deformation(c, a);
    add_int(c, a, "--cap", "cap", "Internal degree window (default n(N-n)+N)");
    add_str(c, a, "--sign", "sign", "Deformed sign: printed | match (default printed)");
  }
  {
    Args& a = args["solomon"];
    CLI::App* c = sub("solomon", "Admissible tuples, the J map and invariant checks");
    add_int(c, a, "--n", "n", "Number of variables", true);
    add_str(c, a, "--family", "family", "h | e (default h)");
    add_str(c, a, "--check", "check", "all, or one check name (default all)");
    add_str(c, a, "--f-degree", "f_degree", "shifted (deg f_i = n+1-i) | printed (deg f_i = n-i)");
  }
  {
    Args& a = args["verify"];
    CLI::App* c = sub("verify", "Run property suites and print a pass/fail table");
    add_str(c, a, "--suite", "suite", "Suite name or all (default all)");
    add_int(c, a, "--max-n", "max_n", "Largest n (default 3)");
    add_int(c, a, "--max-N", "max_N", "Largest N (default 4)");
    add_int(c, a, "--threads", "threads", "Worker threads (default EXNIL_THREADS or hardware)");
    c->add_option_function<unsigned long long>("--seed", [&a](unsigned long long v) { a.seed = v; }, "Random seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (CLI::App* cmd : app.get_subcommands()) {
    const std::string name = cmd->get_name();
    Args& a = args[name];
    if ((name == "member" || name == "decompose" || name == "diff") && !a.strings.count("input") && a.input_file.empty()) {
      std::cerr << "exnil: " << name << " needs --expr or --input\n" << cmd->help();
      return kExitUsage;
    }
    return run(name, a);
  }
  return kExitUsage;
}
