#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "holochern/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cech-Hodge Chern character cocycles from transition data"};
  holochern::RunOptions opts;
  int max_level = -1;
  bool json_report = false;
  app.add_option("--manifest", opts.manifest_path, "Manifest file (JSON)");
  app.add_option("--mode", opts.mode, "Computation to run")->check(CLI::IsMember(holochern::run_modes()));
  app.add_option("--max-level", max_level, "Highest Cech level")->check(CLI::NonNegativeNumber);
  app.add_option("--output", opts.output_path, "Write the canonical cochain file here");
  app.add_flag("--json-report", json_report, "Print the report as JSON");
  app.add_option("--seed", opts.seed, "Seed for the randomized selftest coefficients");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (max_level >= 0) opts.max_level = max_level;

  holochern::RunResult r = holochern::run(opts);
  if (!opts.output_path.empty() && r.exit_code != 2) {
    std::ofstream out(opts.output_path);
    if (!out) {
      std::cerr << "cannot write " << opts.output_path << "\n";
      return 2;
    }
    out << r.artifact;
  }
  if (json_report) {
    std::cout << holochern::json_report(r).dump(2) << "\n";
  } else {
    std::cout << holochern::text_report(r);
    std::cout << "time: " << r.seconds << " s\n";
  }
  if (r.exit_code == 2) std::cerr << "error: " << r.error << "\n";
  return r.exit_code;
}
