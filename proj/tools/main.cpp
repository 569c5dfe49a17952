#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <bsurf/parallel.hpp>

#include "cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bsurf: numerical checks for bordered Riemann surfaces in C^2"};
  std::string spec_path, out_prefix;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool verbose = false;
  app.add_option("--spec", spec_path, "JSON run specification")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_prefix, "Output path prefix (overrides \"output\")");
  app.add_option("--seed", seed, "Seed for randomized sampling (overrides \"seed\")");
  app.add_option("--threads", threads, "Worker thread cap (0 = hardware)");
  app.add_flag("--verbose", verbose, "Print a summary to stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::ifstream in(spec_path);
  std::stringstream text;
  text << in.rdbuf();

  bsurf::cli::RunSpec spec;
  try {
    spec = bsurf::cli::parse_run_spec(text.str());
  } catch (const bsurf::cli::SpecError& e) {
    std::cerr << spec_path << ":" << e.what() << '\n';
    return 1;
  }
  if (seed) spec.seed = *seed;
  if (!out_prefix.empty()) spec.output = out_prefix;
  if (spec.output.empty()) {
    std::cerr << "no output prefix: pass --out or set \"output\"\n";
    return 1;
  }
  bsurf::set_max_threads(threads);

  const auto result = bsurf::cli::run(spec);
  bsurf::cli::write_artifacts(result, spec.output);
  if (verbose || result.exit_code != 0) {
    std::cerr << spec.command << ": " << result.result.value("status", "") << '\n';
    if (result.result.contains("error")) std::cerr << result.result["error"]["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
