// orbirr: exact orbifold Riemann-Roch checks on BG and stacky curves.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "orbirr/cli_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Riemann-Roch on classifying stacks and stacky curves"};
  app.require_subcommand(1);

  orbirr::JobSpec spec;
  std::string out_path, cache_dir;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
    sub->add_option("--cache-dir", cache_dir, "Character-table cache directory (default: $ORBIRR_CACHE)");
    sub->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--group-cap", spec.group_cap, "Largest group order accepted")->check(CLI::PositiveNumber);
  };
  const auto group_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--group", spec.group, "Group description (inline JSON or file)");
    if (required) opt->required();
  };

  auto* chartable = app.add_subcommand("chartable", "Character table of a finite group");
  group_opt(chartable, true);
  common(chartable);

  auto* hrr_bg = app.add_subcommand("hrr-bg", "Both sides of Riemann-Roch on BG for one representation");
  group_opt(hrr_bg, true);
  hrr_bg->add_option("--rep", spec.rep, "Representation descriptor (inline JSON or file)")->required();
  common(hrr_bg);

  auto* hrr_curve = app.add_subcommand("hrr-curve", "Both sides of Riemann-Roch for a line bundle on a stacky curve");
  hrr_curve->add_option("--curve", spec.curve, "Curve description (inline JSON or file)")->required();
  hrr_curve->add_option("--divisor", spec.divisor, "Q-divisor (inline JSON or file); default 0");
  common(hrr_curve);

  auto* euler = app.add_subcommand("euler", "Orbifold and inertia Euler characteristics");
  euler->add_option("--curve", spec.curve, "Curve description (inline JSON or file)");
  group_opt(euler, false);
  common(euler);

  auto* obstruction = app.add_subcommand("obstruction", "Witness that etale cohomology cannot satisfy Riemann-Roch on BG");
  group_opt(obstruction, true);
  common(obstruction);

  auto* selftest = app.add_subcommand("selftest", "Run the verification grids");
  selftest->add_option("--max-group", spec.max_group, "Largest catalog group order to include");
  selftest->add_option("--max-order", spec.max_order, "Largest stacky point order in the curve grid")
      ->check(CLI::Range(2L, 64L));
  selftest->add_option("--genus-max", spec.genus_max, "Largest coarse genus in the curve grid")->check(CLI::NonNegativeNumber);
  selftest->add_flag("--inject-mismatch", spec.inject_mismatch, "Perturb one character-table entry (exit-code check)");
  common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  spec.command = app.get_subcommands().front()->get_name();
  if (!out_path.empty()) spec.out = out_path;
  if (!cache_dir.empty()) spec.cache_dir = cache_dir;
  if (spec.command == "euler" && !spec.curve && !spec.group) {
    std::cerr << "euler requires --curve or --group\n";
    return 1;
  }

  const orbirr::RunResult result = orbirr::run(spec);
  const std::string text = orbirr::render(result.report);
  if (spec.out) {
    std::ofstream out(*spec.out);
    if (!out) {
      std::cerr << "cannot write " << spec.out->string() << '\n';
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (result.report.contains("error")) std::cerr << "orbirr: " << result.report["error"].get<std::string>() << '\n';
  return result.exit_code;
}
