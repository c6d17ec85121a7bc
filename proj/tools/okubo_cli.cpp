// okubo: command line front end over the C interface.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
// or library errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "okubo.h"

namespace {

struct Options {
  std::string field;
  std::string alpha = "1";
  std::string beta = "1";
  std::string target_alpha = "1";
  std::string target_beta = "1";
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
};

struct Command {
  const char* name;
  const char* help;
  bool algebra;  // takes --alpha/--beta
};

constexpr Command kCommands[] = {
    {"table", "print the multiplication table of O_{alpha,beta}", true},
    {"verify", "check the composition identities", true},
    {"phi", "compute the map Phi on the grading group and classify the grading", true},
    {"weyl", "compute the Weyl group two ways and compare", true},
    {"aut", "automorphisms of the grading and the split extension", true},
    {"autfull", "the full automorphism group over GF(2)", false},
    {"unitary", "unitary groups over GF(4) and their action on the Pauli grading", false},
    {"idem", "nonzero idempotents and their classes (characteristic 3)", true},
    {"iso", "search for an isomorphism O_{alpha,beta} -> O_{target}", true},
};

int emit(const Options& opt, okb_report* report) {
  const bool json = opt.format == "json";
  const char* body = json ? okb_report_json(report) : okb_report_text(report);
  if (opt.out.empty()) {
    std::cout << body;
    if (json) std::cout << "\n";
    std::cout.flush();
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    file << body;
    if (json) file << "\n";
    if (!file) {
      std::cerr << "error: cannot write " << opt.out << "\n";
      return 2;
    }
  }
  const bool passed = okb_report_passed(report) != 0;
  if (!passed && !json) std::cerr << okb_report_failures(report) << "\n";
  return passed ? 0 : 1;
}

int run(const std::string& command, const Options& opt) {
  okb_request req{};
  req.command = command.c_str();
  req.field = opt.field.empty() ? nullptr : opt.field.c_str();
  req.alpha = opt.alpha.c_str();
  req.beta = opt.beta.c_str();
  req.target_alpha = opt.target_alpha.c_str();
  req.target_beta = opt.target_beta.c_str();
  req.seed = opt.seed;
  okb_report* report = nullptr;
  const okb_status st = okb_run(&req, &report);
  if (st != OKB_OK) {
    std::cerr << "error: " << okb_last_error() << "\n";
    return 2;
  }
  const int code = emit(opt, report);
  okb_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Okubo algebras, their Z/3 x Z/3 gradings and automorphism groups"};
  app.require_subcommand(1);
  Options opt;
  std::string chosen;

  for (const auto& cmd : kCommands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    if (std::string(cmd.name) != "unitary")
      sub->add_option("--field", opt.field, "field: a prime, a prime power, GF(q) or Q");
    if (cmd.algebra) {
      sub->add_option("--alpha", opt.alpha, "structure constant alpha")->capture_default_str();
      sub->add_option("--beta", opt.beta, "structure constant beta")->capture_default_str();
    }
    if (std::string(cmd.name) == "iso") {
      sub->add_option("--target-alpha", opt.target_alpha, "alpha of the target algebra")->capture_default_str();
      sub->add_option("--target-beta", opt.target_beta, "beta of the target algebra")->capture_default_str();
    }
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--out", opt.out, "write the report to a file");
    sub->callback([&chosen, name = cmd.name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(chosen, opt);
}
