#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "projsep/rng.hpp"
#include "projsep/types.hpp"

namespace projsep {

/// n x p observations with labels in {1, 2}.
struct LabeledDataset {
  Matrix x;
  std::vector<int> labels;

  LabeledDataset() = default;
  LabeledDataset(Matrix x_, std::vector<int> labels_);

  /// Stacks class-1 rows over class-2 rows.
  static LabeledDataset from_classes(const Matrix& class_1, const Matrix& class_2);

  int n() const noexcept { return static_cast<int>(x.rows()); }
  int p() const noexcept { return static_cast<int>(x.cols()); }
  int count(int label) const;
  Matrix rows_of(int label) const;
  LabeledDataset select_columns(const std::vector<int>& columns) const;
};

/// Stratified split: within each class a random round(train_frac * n_k) rows
/// (at least one, and at least one left over when n_k >= 2) go to training.
std::pair<LabeledDataset, LabeledDataset> train_validation_split(const LabeledDataset& data,
                                                                 double train_frac,
                                                                 RngStream& rng);

/// Parsed delimited text: numeric feature columns plus the raw label column.
struct DelimitedTable {
  std::vector<std::string> feature_names;
  Matrix values;
  std::vector<std::string> labels;  ///< empty when no label column was requested
};

struct ReadOptions {
  /// Header name, or a zero-based column index when the file has no header.
  std::string label_column;
};

/// Reads comma- or tab-delimited text (tab if the first line contains one).
/// The first line is a header when any of its non-label fields fails to
/// parse as a number. Non-finite values and ragged rows are ParseError with
/// the 1-based line number in the message.
DelimitedTable read_delimited(const std::filesystem::path& path, const ReadOptions& options);
DelimitedTable parse_delimited(const std::string& text, const ReadOptions& options);

/// Maps exactly two distinct label strings to classes 1 and 2 (the class
/// with fewer rows becomes class 1; equal sizes fall back to lexicographic
/// order). Throws ParseError otherwise.
LabeledDataset to_labeled_dataset(const DelimitedTable& table);

/// Square matrix from delimited text (no header, no label).
Matrix read_matrix(const std::filesystem::path& path);

}  // namespace projsep
