// Command line front end: analyze one pair or run a regression corpus.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "irr/errors.hpp"
#include "irr/parser.hpp"
#include "irr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitResource = 4;
constexpr int kExitOracle = 5;

struct AnalyzeArgs {
  std::string f;
  std::string g;
  std::vector<std::string> at;
  bool oracle = false;
  bool strict = false;
  std::uint64_t seed = 0;
  std::string json_path;
  bool dump_resolution = false;
  bool no_timing = false;
  double rho_magnitude = 1e6;
};

// A parse error already annotated with the offending option and a caret line.
struct OptionParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

irr::MPoly parse_named(const std::string& name, const std::string& text) {
  try {
    return irr::parse_poly(text);
  } catch (const irr::ParseError& e) {
    std::string caret(std::min(e.position, text.size()), ' ');
    throw OptionParseError("--" + name + ": " + e.what() + "\n  " + text + "\n  " + caret + "^");
  }
}

int run_analyze(const AnalyzeArgs& args) {
  irr::MPoly f = parse_named("f", args.f);
  irr::MPoly g = parse_named("g", args.g);
  irr::AnalyzeOptions options;
  options.seed = args.seed;
  options.oracle = args.oracle || args.strict;
  options.rho_magnitude = args.rho_magnitude;
  options.keep_resolution = args.dump_resolution;
  for (const auto& p : args.at) {
    try {
      options.at.push_back(irr::Place::parse(p));
    } catch (const irr::Error& e) {
      throw OptionParseError("--at \"" + p + "\": " + e.what());
    }
  }

  irr::Report report = irr::analyze(f, g, options);
  nlohmann::json j = irr::to_json(report);
  if (args.no_timing) j.erase("timing");
  if (!args.json_path.empty()) {
    if (args.json_path == "-") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream out(args.json_path);
      if (!out) throw irr::Error("cannot write " + args.json_path);
      out << j.dump(2) << "\n";
    }
  }
  if (args.json_path != "-") {
    std::cout << irr::to_text(report);
    if (g.is_constant()) std::cout << "note: g is constant, so the twist is trivial and every value is 0\n";
    if (args.dump_resolution && report.resolution) {
      std::cout << "resolution:\n" << irr::resolution_to_json(*report.resolution).dump(2) << "\n";
    }
  }
  if (args.strict && !report.oracle_agrees()) {
    std::cerr << "irrcalc: oracle disagreement\n";
    return kExitOracle;
  }
  return kExitOk;
}

int run_corpus(const std::string& path) {
  irr::CorpusSummary summary = irr::run_corpus(path);
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& f : summary.failures) std::cout << "FAIL " << f << "\n";
  std::cout << summary.passed << "/" << summary.entries << " corpus entries passed\n";
  return summary.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irregularity numbers of the direct image of an exponentially twisted structure sheaf"};
  app.require_subcommand(1);

  AnalyzeArgs args;
  auto* analyze = app.add_subcommand("analyze", "Irregularity profile of a pair (f, g)");
  analyze->add_option("--f", args.f, "The map f, a polynomial in x and y")->required();
  analyze->add_option("--g", args.g, "The exponent g, a polynomial in x and y")->required();
  analyze->add_option("--at", args.at, "Extra place: a rational, a squarefree polynomial in s, or inf");
  analyze->add_flag("--oracle", args.oracle, "Cross-check with the numeric topological oracle");
  analyze->add_flag("--strict", args.strict, "Run the oracle and exit 5 when it disagrees");
  analyze->add_option("--seed", args.seed, "Seed for every randomized step");
  analyze->add_option("--json", args.json_path, "Write the JSON report to this path (- for stdout)");
  analyze->add_flag("--dump-resolution", args.dump_resolution, "Include the boundary resolution");
  analyze->add_flag("--no-timing", args.no_timing, "Omit wall-clock timing from the JSON report");
  analyze->add_option("--oracle-rho-mag", args.rho_magnitude, "Magnitude of the oracle's level value")
      ->check(CLI::PositiveNumber);

  std::string corpus_path;
  auto* corpus = app.add_subcommand("corpus", "Run a JSON-lines regression corpus");
  corpus->add_option("path", corpus_path, "Corpus file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*analyze) return run_analyze(args);
    return run_corpus(corpus_path);
  } catch (const OptionParseError& e) {
    std::cerr << "irrcalc: parse error in " << e.what() << "\n";
    return kExitParse;
  } catch (const irr::ParseError& e) {
    std::cerr << "irrcalc: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const irr::DegenerateInput& e) {
    std::cerr << "irrcalc: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const irr::ResourceLimit& e) {
    std::cerr << "irrcalc: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const irr::DepthExceeded& e) {
    std::cerr << "irrcalc: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "irrcalc: " << e.what() << "\n";
    return kExitFailure;
  }
}
