#pragma once

// Input schemas, report emission and the job runner behind the orbirr CLI.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "orbirr/char_table.hpp"
#include "orbirr/perm_group.hpp"
#include "orbirr/rep_ring.hpp"
#include "orbirr/stacky_curve.hpp"

namespace orbirr {

using nlohmann::json;

struct JobSpec {
  std::string command;  // chartable | hrr-bg | hrr-curve | euler | obstruction | selftest
  std::optional<std::string> group;    // inline JSON or file path
  std::optional<std::string> rep;
  std::optional<std::string> curve;
  std::optional<std::string> divisor;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 1;
  std::size_t max_group = 24;
  long max_order = 8;
  long genus_max = 2;
  std::size_t group_cap = kDefaultGroupCap;
  bool inject_mismatch = false;  // selftest only: perturb one table entry
};

struct RunResult {
  json report;
  int exit_code = 0;  // 0 ok, 1 input error, 2 verification mismatch
};

/// Executes the job. Never throws for bad input: errors become exit code 1
/// with an "error" field in the report.
RunResult run(const JobSpec& spec);

/// Report text as written to stdout / --out.
std::string render(const json& report);

/// Parses `argument` as JSON when it starts with '{' or '[', otherwise reads
/// it as a file path. Errors mention `what` and the parser byte offset.
json load_json_argument(const std::string& argument, const std::string& what);

// Schemas. Errors are InvalidInput with a JSON-pointer location.
GroupPtr parse_group(const json& doc, std::size_t cap = kDefaultGroupCap);
ClassFunction parse_rep(const json& doc, const CharacterTable& table);
StackyCurve parse_curve(const json& doc);
QDivisor parse_divisor(const json& doc, const StackyCurve& curve);

json group_to_json(const PermGroup& group);
json curve_to_json(const StackyCurve& curve);
json divisor_to_json(const QDivisor& divisor, const StackyCurve& curve);

/// {"exact": "<text>", "approx": [re, im]}.
json cyclotomic_json(const Cyclotomic& value);

}  // namespace orbirr
