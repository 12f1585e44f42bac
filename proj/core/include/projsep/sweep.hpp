#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projsep/dataset.hpp"
#include "projsep/generators.hpp"

namespace projsep {

enum class SweepFamily { InverseWishart, LatentLowDim, EmpiricalCov, Fixed };
enum class SweepMode { Overlap, OosLoss, RiskMc, FiniteSampleCurve };

/// pca, rp, sparse_rp and bhatt_optimal are built from the true covariances;
/// the emp_ variants from training data (data modes only).
enum class ProjectionKind { Pca, Rp, SparseRp, BhattOptimal, EmpPca, EmpBhattOptimal };

/// Which of Q and Theta the two latent classes share.
enum class LatentShare { None, Q, Theta };

std::string to_string(SweepFamily family);
std::string to_string(SweepMode mode);
std::string to_string(ProjectionKind kind);
std::string to_string(LatentShare share);
/// Inverses of to_string. Throw ConfigRejected on unknown names.
SweepFamily parse_family(const std::string& name);
SweepMode parse_mode(const std::string& name);
ProjectionKind parse_projection(const std::string& name);
LatentShare parse_share(const std::string& name);

bool is_data_mode(SweepMode mode);

struct SweepConfig {
  SweepFamily family = SweepFamily::InverseWishart;
  std::vector<int> p_grid;
  std::vector<int> q_grid;

  /// Inverse Wishart: df / p multiples; cells take every ordered pair.
  std::vector<double> df_ratios;
  /// Latent family: share configurations x mixing densities.
  std::vector<LatentShare> shares;
  std::vector<bool> sparse_mixing;
  double sparse_density = 0.1;
  /// Empirical family: overlap levels and the source data.
  std::vector<double> gammas;
  std::shared_ptr<const LabeledDataset> dataset;
  /// A single known pair, used with family Fixed (p_grid is ignored).
  std::optional<CovariancePair> fixed_pair;

  /// Per-class sample sizes for the data modes (a cell dimension). Ignored
  /// by the empirical family, whose data are the overlapped source rows.
  std::vector<int> n_grid;

  int n_simu = 1;
  std::vector<ProjectionKind> projections{ProjectionKind::Pca, ProjectionKind::Rp,
                                          ProjectionKind::SparseRp};
  SweepMode mode = SweepMode::Overlap;
  std::uint64_t master_seed = 0;
  int n_workers = 1;

  double train_frac = 0.7;
  long mc_samples = 100000;
  /// Ridge for the optimal projection's whitening; negative selects
  /// default_ridge() of the covariance being whitened.
  double ridge = -1.0;
  /// Relative ridge for the trained classifier (see QdaOptions).
  double qda_ridge = 0.0;
  /// Fill the ms column. Off keeps record files byte-reproducible.
  bool timing = false;

  /// Throws ConfigRejected, DegreesOfFreedomTooSmall.
  void validate() const;
};

struct SweepCell {
  std::size_t index = 0;
  int p = 0;
  int q = 0;
  double df_ratio_1 = 0.0;
  double df_ratio_2 = 0.0;
  LatentShare share = LatentShare::None;
  bool sparse_mixing = false;
  double gamma = 0.0;
  int n = 0;  ///< per-class sample size, 0 outside the data modes
};

/// Cartesian product of the grids in the order p, q, family parameters, n,
/// skipping q >= p. Throws EmptyGrid when nothing survives.
std::vector<SweepCell> expand_grid(const SweepConfig& config);

struct SweepRecord {
  std::size_t cell = 0;
  std::string family;
  int p = 0;
  int q = 0;
  std::string param1, param2, param3;
  int replicate = 0;
  std::string projection;
  std::optional<double> overlap;
  std::optional<double> oos;
  std::optional<double> mc;
  std::optional<double> mc_se;
  std::optional<double> recon;
  std::string status = "ok";  ///< "ok" or "failed:<reason>"
  std::optional<double> ms;

  bool ok() const { return status == "ok"; }
};

inline constexpr const char* kRecordHeader =
    "family,p,q,param1,param2,param3,replicate,projection,metric_overlap,metric_oos,"
    "metric_mc,metric_mc_se,metric_recon,status,ms";

/// One CSV line (no terminator); floats use 17 significant digits.
std::string format_record(const SweepRecord& record);
/// Parses a records file written by run_sweep. Throws ParseError.
std::vector<SweepRecord> read_records(std::istream& in);
std::vector<SweepRecord> read_records(const std::filesystem::path& path);

struct SweepOutput {
  std::filesystem::path records;
  /// Completed cell indices, one per line. Defaults to records + ".ckpt".
  std::filesystem::path checkpoint;
  /// Skip cells listed in the checkpoint and append after them.
  bool resume = false;
};

/// Evaluates every cell, replicate and projection. Cells run on n_workers
/// threads; records are emitted in cell order, so the output does not depend
/// on the worker count. Per-projection failures become failed records.
/// Throws SinkWriteFailure when the output cannot be written.
std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   const std::optional<SweepOutput>& output = std::nullopt);

/// Evaluates one cell (all replicates, all projections).
std::vector<SweepRecord> run_cell(const SweepConfig& config, const SweepCell& cell);

/// Oracle vs empirical projections along the sample-size grid.
/// Requires mode FiniteSampleCurve.
std::vector<SweepRecord> finite_sample_scenario(const SweepConfig& config);

}  // namespace projsep
