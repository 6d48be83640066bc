// brauer: Brauer groups of complex-analytic surfaces from descriptor files.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brauer/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Compute Brauer groups of complex-analytic surfaces from JSON descriptor files"};
  brauer::cli::RunConfig cfg;
  std::string format = "text";
  std::vector<std::string> sweeps;
  app.add_option("input", cfg.inputPath, "Descriptor file (JSON)")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--sweep", sweeps, "Sweep an integer field: <field>=<lo>..<hi> (repeatable)");
  app.add_flag("--provenance", cfg.showProvenance, "Print validation reports and constraint details");
  app.add_flag("--allow-non-sl3", cfg.allowNonSL3, "Accept Inoue matrices with det M != 1");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return brauer::cli::kParse;
  }
  cfg.outputFormat = format == "json" ? brauer::cli::OutputFormat::Json : brauer::cli::OutputFormat::Text;
  try {
    for (const auto& s : sweeps) cfg.sweeps.push_back(brauer::cli::parse_sweep(s));
  } catch (const brauer::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return brauer::cli::kParse;
  }
  return brauer::cli::run(cfg, std::cout, std::cerr);
}
