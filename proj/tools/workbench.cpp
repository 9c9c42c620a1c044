#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rba/document.hpp"
#include "rba/errors.hpp"
#include "rba/run.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "workbench: cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "workbench: cannot write " << path << "\n";
    std::exit(1);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for contact algebras and their duals"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint32_t samples = 1000;
  std::uint32_t depth = 32;
  std::string report_path, dot_path;
  bool timings = false;

  CLI::App* run = app.add_subcommand("run", "Execute the commands of a workbench document");
  run->add_option("file", file, "Workbench document (JSON)")->required();
  run->add_option("--seed", seed, "Seed for the sampled quantifiers")
      ->each([&](const std::string&) { seed_given = true; });
  run->add_option("--samples", samples, "Samples per sampled quantifier");
  run->add_option("--depth", depth, "Witness search depth");
  run->add_option("--report", report_path, "Write the JSON report here");
  run->add_option("--dot", dot_path, "Write the last emit-dot output here");
  run->add_flag("--timings", timings, "Include per-command wall time in the report");

  CLI::App* fmt = app.add_subcommand("fmt", "Parse a document and print its canonical form");
  fmt->add_option("file", file, "Workbench document (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text = read_file(file);
    rba::WorkbenchDocument doc = rba::parse_document(text);
    if (fmt->parsed()) {
      std::cout << rba::print_document(doc);
      return 0;
    }
    rba::RunOptions opts;
    if (seed_given) {
      opts.seed = seed;
    } else if (const char* env = std::getenv("WORKBENCH_SEED")) {
      opts.seed = std::stoull(env);
    }
    opts.samples = samples;
    opts.depth = depth;
    opts.timings = timings;
    rba::RunOutcome outcome = rba::run_document(doc, opts);
    if (!report_path.empty())
      write_file(report_path, outcome.report);
    else
      std::cout << outcome.report;
    if (!dot_path.empty()) {
      if (outcome.dot.empty()) {
        std::cerr << "workbench: no emit-dot command produced output\n";
        return 1;
      }
      write_file(dot_path, outcome.dot);
    }
    return outcome.exit_code;
  } catch (const rba::Error& e) {
    std::cerr << "workbench: " << e.what() << "\n";
    return 1;
  }
}
