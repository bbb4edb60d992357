#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "io.hpp"

namespace polychow::cli {

struct Options {
  std::string file;
  std::optional<std::int64_t> i;
  std::optional<std::int64_t> imax;
  bool poly = false;
  bool verify = false;
  std::string cuts;
  std::string group;
  EdgeMeasure measure = EdgeMeasure::Lattice;
};

struct Outcome {
  Json result;
  std::string digest;
  int exit_code = 0;
};

Outcome cmd_info(const Options& o);
Outcome cmd_ehrhart(const Options& o);
Outcome cmd_sum(const Options& o);
Outcome cmd_chow(const Options& o);
Outcome cmd_blowup(const Options& o);
Outcome cmd_fo(const Options& o);
Outcome cmd_mukai(const Options& o);
/// Runs the embedded fixture suite; exit code 2 if any fixture fails.
Outcome cmd_replicate(const Options& o);

}  // namespace polychow::cli
