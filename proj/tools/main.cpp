#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using polychow::cli::Json;
using polychow::cli::Options;
using polychow::cli::Outcome;

constexpr const char* kFooter =
    "All quantities are exact rationals printed as \"p/q\" in lattice-normalized units (no physical units).\n"
    "Exit codes: 0 success, 1 input or validation error, 2 verification mismatch.\n"
    "POLYCHOW_MAX_ENUM caps the lattice points a single enumeration may visit (default 100000000).";

void apply_enumeration_limit() {
  const char* env = std::getenv("POLYCHOW_MAX_ENUM");
  if (env == nullptr || *env == '\0') return;
  std::uint64_t limit = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, limit);
  if (ec != std::errc() || ptr != end || limit == 0) {
    throw polychow::Error(polychow::ErrorKind::InvalidArgument,
                          std::string("POLYCHOW_MAX_ENUM must be a positive integer, got \"") + env + "\"");
  }
  polychow::set_enumeration_limit(limit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Chow weights, blow-up formulas and stability checks for lattice polygons", "polytope-chow"};
  app.footer(kFooter);
  app.require_subcommand(1);

  Options opt;
  bool json = false;
  bool text = false;
  std::string measure = "lattice";

  using Handler = Outcome (*)(const Options&);
  const std::map<std::string, std::pair<std::string, Handler>> commands{
      {"info", {"Area, boundary length, integrality, Delzant test, moments", polychow::cli::cmd_info}},
      {"ehrhart", {"Lattice point count at --i, or the Ehrhart polynomial with --poly", polychow::cli::cmd_ehrhart}},
      {"sum", {"Normalized lattice-point sum at --i, or its polynomial with --poly", polychow::cli::cmd_sum}},
      {"chow", {"Chow weight at --i, or its polynomial and coefficient span with --poly", polychow::cli::cmd_chow}},
      {"blowup", {"Corner-chop decomposition, DF invariants and blow-up formula (--cuts, --verify)",
                  polychow::cli::cmd_blowup}},
      {"fo", {"FO invariant for i = 1..N plus symmetry findings (--group)", polychow::cli::cmd_fo}},
      {"mukai", {"Mukai stability of a point configuration in the projective plane", polychow::cli::cmd_mukai}},
      {"replicate", {"Run the embedded reference fixtures", polychow::cli::cmd_replicate}},
  };

  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    if (name != "replicate") sub->add_option("FILE", opt.file, "Input JSON file")->required();
    if (name == "ehrhart" || name == "sum" || name == "chow" || name == "fo") {
      sub->add_option("--i", opt.i, name == "fo" ? "Largest dilation N" : "Dilation i")->check(CLI::PositiveNumber);
    }
    if (name == "ehrhart" || name == "sum" || name == "chow") sub->add_flag("--poly", opt.poly, "Polynomial form");
    if (name == "blowup") {
      sub->add_option("--cuts", opt.cuts, "Cuts JSON file")->required();
      sub->add_flag("--verify", opt.verify, "Compare the formula with enumeration for i = 1..imax");
      sub->add_option("--imax", opt.imax, "Largest i for --verify (default 5)")->check(CLI::Range(2, 1000));
    }
    if (name == "fo") {
      sub->add_option("--imax", opt.imax, "Same as --i")->check(CLI::PositiveNumber);
      sub->add_option("--group", opt.group, "Symmetry generators JSON file");
    }
    if (name == "blowup" || name == "replicate") {
      sub->add_option("--edge-measure", measure, "Boundary measure; 'euclidean' is a fault injection")
          ->check(CLI::IsMember({"lattice", "euclidean"}));
    }
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--json", json, "JSON report");
    fmt->add_flag("--text", text, "Plain text report (default)");
    fmt->require_option(0, 1);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  opt.measure = measure == "euclidean" ? polychow::EdgeMeasure::Euclidean : polychow::EdgeMeasure::Lattice;

  std::string echo = "polytope-chow";
  for (int a = 1; a < argc; ++a) echo += std::string(" ") + argv[a];

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    apply_enumeration_limit();
    out = commands.at(name).second(opt);
  } catch (const polychow::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == polychow::ErrorKind::VerificationMismatch ? 2 : 1;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["command"] = echo;
  report["input_digest"] = "fnv1a64:" + out.digest;
  report["result"] = out.result;
  report["status"] = out.exit_code == 0 ? "ok" : "mismatch";
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << polychow::cli::render_text(report);
  }
  // Timing stays off stdout so reports are byte-identical across runs.
  std::cerr << "elapsed: " << elapsed << " ms\n";
  return out.exit_code;
}
