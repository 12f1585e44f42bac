#pragma once

#include <string>
#include <vector>

#include "projsep/sweep.hpp"

namespace projsep {

/// Per-projection aggregates within one group. Regret is metric(W) minus
/// metric(baseline) on the same (cell, replicate); only replicates where
/// both records are ok enter the regret.
struct ProjectionSummary {
  std::string projection;
  double mean_metric = 0.0;
  double mean_regret = 0.0;
  /// Share of compared replicates with regret > 0 (ties are not positive).
  double positive_frequency = 0.0;
  int n_ok = 0;
  int n_compared = 0;
  int n_failed = 0;
};

struct GroupSummary {
  std::vector<std::string> key;  ///< values of the group-by columns
  int n_units = 0;               ///< distinct (cell, replicate) pairs
  int n_failed = 0;              ///< failed records over all projections
  std::vector<ProjectionSummary> projections;  ///< baseline first
};

struct SummaryTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Summary {
  std::vector<std::string> group_by;
  std::string baseline;
  std::string metric;  ///< metric_overlap, metric_oos or metric_mc
  std::vector<GroupSummary> groups;

  /// group columns, mean_<baseline>, regret_<W> and pos_<W> for every other
  /// projection, n, failed.
  SummaryTable table() const;
};

/// Value of a record column by header name. Throws UnknownColumn.
std::string record_field(const SweepRecord& record, const std::string& column);

/// Groups records by the given columns (any of family, p, q, param1..3,
/// replicate) in order of first appearance. The metric follows the mode:
/// MC risk if present, else OoS loss, else overlap. Throws MixedModes when
/// ok records disagree on the mode, UnknownColumn, ConfigRejected for a
/// baseline that never occurs.
Summary summarize(const std::vector<SweepRecord>& records, const std::vector<std::string>& group_by,
                  const std::string& baseline);

/// CSV with 17 significant digits; empty cells for undefined means.
std::string summary_csv(const SummaryTable& table);
/// Space-padded columns for terminals.
std::string aligned_table(const SummaryTable& table);

}  // namespace projsep
