#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "helfer/grid.hpp"
#include "helfer/params.hpp"

namespace helfer {

//! Run configuration, stored as a strict JSON file: exactly the keys
//! params{lambda,p0,q,chi0}, seed, output_dir, grids. chi0 is either a
//! nonnegative number or the sentinel string "paper-default" (alias
//! "default") selecting default_chi0(p0). Unknown keys are errors so a
//! typo cannot silently change the physics.
struct RunConfig {
  double lambda = 1000.0;
  double p0 = 1.0;
  double q = 10.0;
  std::optional<double> chi0;  // nullopt -> default_chi0(p0)
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  std::map<std::string, GridSpec> grids;

  HelferParams params() const;
};

RunConfig default_config();

//! Parses a config file. Throws std::invalid_argument on malformed JSON,
//! unknown keys, or invalid values.
RunConfig load_config(const std::string& path);

//! Writes the config losslessly (load_config(save_config(c)) == c).
void save_config(const RunConfig& config, const std::string& path);

}  // namespace helfer
