#pragma once

#include <string>
#include <vector>

#include "umcf/geometry.hpp"
#include "umcf/solver.hpp"

namespace umcf {

/// Parsed, validated and resolved run configuration. The text format is
/// INI-like: [grid]/[model]/[shapes]/[run] sections of key = value lines,
/// '#' comments, repeatable shape keys. Parameters may be given directly
/// (eps = 0.0117) or as rules resolved against N = min axis resolution
/// (eps_rule = 3/N, sigma_rule = 4*eps^2, dt_rule = 0.01*eps^2) -- exactly
/// one of the pair per parameter.
struct RunConfig {
  // grid
  int dim = 0;
  std::vector<int> n;
  std::vector<double> len;

  // model (resolved values; rules kept for provenance)
  ModelParams model;
  std::string eps_rule, sigma_rule, dt_rule;  // empty when given directly

  // shapes
  Shape shape;

  // run
  long steps = 1;
  long diag_every = 1;
  long snapshot_every = 0;
  double extinction_threshold = 0.05;
  std::string output_dir = "out";
  std::string experiment_name;
  RadiusEstimator radius = RadiusEstimator::none;
  bool force_radius = false;

  GridPtr make_grid() const;
  RunPlan plan() const;
  /// Canonical text with all rules resolved to concrete numbers.
  std::string serialize() const;
};

/// Parses config text; overrides are "section.key=value" strings applied
/// before validation. Errors name the offending key and line.
RunConfig parse_config(const std::string& text,
                       std::span<const std::string> overrides = {});
RunConfig parse_config_file(const std::string& path,
                            std::span<const std::string> overrides = {});

}  // namespace umcf
