#pragma once

// Reports behind the CLI subcommands.  Each report carries a JSON document
// (schema 1), a text rendering, a pass flag and the list of failed checks.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "okubo/algebra.hpp"

namespace okubo {

struct RunRequest {
  std::string command;
  std::string field;  // empty: the command's default
  std::string alpha = "1";
  std::string beta = "1";
  std::string target_alpha = "1";
  std::string target_beta = "1";
  std::uint64_t seed = 1;
};

struct Report {
  bool passed = true;
  nlohmann::json json;
  std::string text;
  nlohmann::json failures = nlohmann::json::array();
};

/// table, verify, phi, weyl, aut, autfull, unitary, idem, iso.
const std::vector<std::string>& report_commands();
std::string default_field(const std::string& command);

/// Throws okubo::Error for invalid requests.
Report run_report(const RunRequest& request);

/// The multiplication table of O_{alpha,beta} laid out in 2x2 blocks.
template <ExactField F>
std::string format_multiplication_table(const OkuboAlgebra<F>& a);

/// Terminal columns taken by a UTF-8 string (combining marks take none).
std::size_t display_width(const std::string& s);

}  // namespace okubo
