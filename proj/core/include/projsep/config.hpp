#pragma once

#include <filesystem>
#include <string>

#include "projsep/sweep.hpp"

namespace projsep {

/// A sweep configuration plus the file references it was loaded from.
struct SweepSpec {
  SweepConfig config;
  std::string dataset_path;   ///< empirical family source
  std::string label_column;
  std::string cov_1_path;     ///< fixed family matrices
  std::string cov_2_path;
};

/// Flat key=value text. '#' starts a comment, lists are comma separated and
/// unknown keys are rejected. Keys:
///   family, mode, p, q, n, n_simu, projections, seed, workers,
///   df_ratio, share, mixing, sparse_density, gamma, dataset, label_column,
///   cov_1, cov_2, train_frac, mc_samples, ridge (number or auto), qda_ridge,
///   timing.
/// Relative paths resolve against `base_dir`. Files are not loaded here.
/// Throws ConfigRejected naming the line and key.
SweepSpec parse_sweep_spec(const std::string& text, const std::filesystem::path& base_dir = {});

/// Applies one key=value assignment (the same keys as the file format).
void apply_setting(SweepSpec& spec, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir = {});

/// Loads the dataset or matrices a spec refers to.
/// Throws ParseError, UnknownColumn, NotPositiveDefinite.
void load_inputs(SweepSpec& spec);

/// Canonical text for a spec; parse_sweep_spec(format_sweep_spec(s)) gives
/// back the same configuration.
std::string format_sweep_spec(const SweepSpec& spec);

}  // namespace projsep
