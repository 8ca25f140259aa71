#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "fatpoints/cli.hpp"

int main(int argc, char** argv) {
  using namespace fatpoints;
  CLI::App app{"Fat points in P^n x P^m: ideals, separators, Hilbert functions, ACM tests and resolutions"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::vector<int> rect;
  std::string field;
  std::string format = "text";

  const char* const names[] = {"ideal", "degree", "hilbert", "separators", "good-check", "acm", "resolution", "verify"};
  const char* const help[] = {
      "minimal generators of I_Z",
      "deg Z and, with --point, deg_Z(P_i)",
      "bigraded Hilbert function on a rectangle",
      "minimal separators of a point",
      "good-set test for the minimal separators of a point",
      "ACM test by a random regular sequence",
      "minimal bigraded free resolution of R/I_Z",
      "run every check and report PASS/FAIL/SKIPPED",
  };
  for (std::size_t c = 0; c < std::size(names); ++c) {
    CLI::App* sub = app.add_subcommand(names[c], help[c]);
    sub->add_option("scheme", config.scheme_file, "scheme file")->required()->check(CLI::ExistingFile);
    sub->add_option("--point", config.point, "point index, starting at 1");
    sub->add_option("--rect", rect, "rectangle corner a b")->expected(2);
    sub->add_option("--field", field, "rational or prime:p, overriding the file");
    sub->add_option("--seed", config.seed, "seed for random choices");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->callback([&config, name = names[c]] { config.command = *parse_command(name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!rect.empty()) {
    if (rect[0] < 0 || rect[1] < 0) {
      std::cerr << "--rect needs nonnegative entries\n";
      return kExitUsage;
    }
    config.rect = Bidegree{rect[0], rect[1]};
  }
  if (!field.empty()) config.field = field;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  const RunResult result = run(config);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << '\n';
  return result.exit_code;
}
