#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "woc/cli.hpp"
#include "woc/core.hpp"

int main(int argc, char** argv) {
  CLI::App app{"woc: weak orders, their Hasse diagram, hypercube embedding, and token medium"};
  app.require_subcommand(1);

  int cap = woc::kDefaultCap;
  app.add_option("--cap", cap, "ground-set size cap (env: WOC_CAP)")
      ->envname("WOC_CAP")
      ->check(CLI::Range(2, woc::kMaxGround));

  std::function<woc::cli::CommandResult()> run;

  auto* enumerate = app.add_subcommand("enumerate", "List weak orders in canonical order");
  int en_n = 0;
  int en_k = 0;
  std::string en_format = "json";
  enumerate->add_option("-n", en_n, "ground-set size")->required();
  enumerate->add_option("-k", en_k, "restrict to weak orders with exactly k blocks");
  enumerate->add_option("--format", en_format, "json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  enumerate->callback([&] {
    std::optional<int> k;
    if (enumerate->count("-k")) k = en_k;
    run = [=] { return woc::cli::cmd_enumerate(en_n, k, en_format, cap); };
  });

  auto* hasse = app.add_subcommand("hasse", "Export the Hasse diagram");
  int ha_n = 0;
  std::string ha_format = "dot";
  hasse->add_option("-n", ha_n, "ground-set size")->required();
  hasse->add_option("--format", ha_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  hasse->callback([&] { run = [=] { return woc::cli::cmd_hasse(ha_n, ha_format, cap); }; });

  auto* check = app.add_subcommand("check", "Run an exhaustive verification");
  std::string ck_target;
  int ck_n = 0;
  bool ck_slow = false;
  check->add_option("target", ck_target, "partial-cube, wellgraded, medium, or complex")
      ->required();
  check->add_option("-n", ck_n, "single ground-set size (default: sweep 2..4)");
  check->add_flag("--slow", ck_slow, "extend the default sweep to n = 5");
  check->callback([&] {
    std::optional<int> n;
    if (check->count("-n")) n = ck_n;
    run = [=] { return woc::cli::cmd_check(ck_target, n, ck_slow, cap); };
  });

  auto* classify = app.add_subcommand("classify", "Weak order induced by a score vector");
  std::string cl_scores;
  int cl_round = 0;
  std::string cl_format = "text";
  classify->add_option("-f", cl_scores, "comma-separated scores (integers or p/q rationals)")
      ->required();
  classify->add_option("--round-decimals", cl_round,
                       "accept decimal scores, scaled by 10^D and rounded");
  classify->add_option("--format", cl_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  classify->callback([&] {
    std::optional<int> round;
    if (classify->count("--round-decimals")) round = cl_round;
    run = [=] { return woc::cli::cmd_classify(cl_scores, round, cl_format, cap); };
  });

  auto* geometry = app.add_subcommand("geometry", "Permutahedron subdivision coordinates");
  int ge_n = 0;
  std::string ge_format = "json";
  geometry->add_option("-n", ge_n, "ground-set size (at most 5)")->required();
  geometry->add_option("--format", ge_format, "json or off")
      ->check(CLI::IsMember({"json", "off"}));
  geometry->callback([&] { run = [=] { return woc::cli::cmd_geometry(ge_n, ge_format, cap); }; });

  auto* medium = app.add_subcommand("medium", "Token dynamics on weak orders");
  medium->require_subcommand(1);
  auto* medium_walk = medium->add_subcommand("walk", "Apply a token sequence to a start state");
  int mw_n = 0;
  std::string mw_start;
  std::string mw_tokens;
  medium_walk->add_option("-n", mw_n, "ground-set size")->required();
  medium_walk->add_option("--start", mw_start, "start state, e.g. a|bc")->required();
  medium_walk->add_option("--tokens", mw_tokens, "comma-separated tokens, e.g. +ab,-a");
  medium_walk->callback(
      [&] { run = [=] { return woc::cli::cmd_medium_walk(mw_n, mw_start, mw_tokens, cap); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, bad usage exits 2
  }

  try {
    const woc::cli::CommandResult result = run();
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
  } catch (const woc::wo_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
