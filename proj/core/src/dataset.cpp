#include "projsep/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "projsep/error.hpp"

namespace projsep {

LabeledDataset::LabeledDataset(Matrix x_, std::vector<int> labels_)
    : x(std::move(x_)), labels(std::move(labels_)) {
  if (static_cast<Eigen::Index>(labels.size()) != x.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from row count");
  }
  for (int z : labels) {
    if (z != 1 && z != 2) throw Error(ErrorKind::ConfigRejected, "labels must be 1 or 2");
  }
}

LabeledDataset LabeledDataset::from_classes(const Matrix& class_1, const Matrix& class_2) {
  if (class_1.cols() != class_2.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "class matrices disagree on column count");
  }
  Matrix x(class_1.rows() + class_2.rows(), class_1.cols());
  x << class_1, class_2;
  std::vector<int> labels(static_cast<std::size_t>(class_1.rows()), 1);
  labels.resize(static_cast<std::size_t>(x.rows()), 2);
  return LabeledDataset(std::move(x), std::move(labels));
}

int LabeledDataset::count(int label) const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), label));
}

Matrix LabeledDataset::rows_of(int label) const {
  Matrix out(count(label), x.cols());
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) out.row(r++) = x.row(static_cast<Eigen::Index>(i));
  }
  return out;
}

LabeledDataset LabeledDataset::select_columns(const std::vector<int>& columns) const {
  Matrix out(x.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] < 0 || columns[j] >= p()) {
      throw Error(ErrorKind::DimensionMismatch, "column index out of range");
    }
    out.col(static_cast<Eigen::Index>(j)) = x.col(columns[j]);
  }
  return LabeledDataset(std::move(out), labels);
}

std::pair<LabeledDataset, LabeledDataset> train_validation_split(const LabeledDataset& data,
                                                                 double train_frac,
                                                                 RngStream& rng) {
  if (!(train_frac > 0.0 && train_frac < 1.0)) {
    throw Error(ErrorKind::ConfigRejected, "train fraction must lie in (0, 1)");
  }
  std::vector<int> train_rows;
  std::vector<int> val_rows;
  for (int label : {1, 2}) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      if (data.labels[i] == label) rows.push_back(static_cast<int>(i));
    }
    const int nk = static_cast<int>(rows.size());
    if (nk == 0) continue;
    int n_train = static_cast<int>(std::lround(train_frac * nk));
    n_train = std::clamp(n_train, 1, nk >= 2 ? nk - 1 : 1);
    const auto perm = sample_without_replacement(nk, nk, rng);
    for (int i = 0; i < nk; ++i) {
      const int row = rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      (i < n_train ? train_rows : val_rows).push_back(row);
    }
  }
  auto gather = [&](const std::vector<int>& rows) {
    Matrix x(static_cast<Eigen::Index>(rows.size()), data.x.cols());
    std::vector<int> z;
    z.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      x.row(static_cast<Eigen::Index>(i)) = data.x.row(rows[i]);
      z.push_back(data.labels[static_cast<std::size_t>(rows[i])]);
    }
    return LabeledDataset(std::move(x), std::move(z));
  };
  return {gather(train_rows), gather(val_rows)};
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                       : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '"')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '"' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// strtod accepts "nan"/"inf", which we want to see so we can reject them.
bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  const std::string buf(text);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

DelimitedTable parse_delimited(const std::string& text, const ReadOptions& options) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::string_view rest(text);
    std::size_t number = 0;
    while (!rest.empty()) {
      const auto pos = rest.find('\n');
      auto line = rest.substr(0, pos);
      ++number;
      if (!trim(line).empty()) lines.emplace_back(number, line);
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "no data rows");

  const char delim = lines.front().second.find('\t') != std::string_view::npos ? '\t' : ',';
  const auto first = split_fields(lines.front().second, delim);
  const std::size_t width = first.size();

  // Header detection: any non-numeric field in the first line.
  bool has_header = false;
  for (auto f : first) {
    double v = 0.0;
    if (!parse_double(f, v)) has_header = true;
  }

  int label_index = -1;
  if (!options.label_column.empty()) {
    if (has_header) {
      for (std::size_t j = 0; j < width; ++j) {
        double v = 0.0;
        // A numeric field is data, never a column name.
        if (trim(first[j]) == options.label_column && !parse_double(first[j], v))
          label_index = static_cast<int>(j);
      }
    }
    if (label_index < 0) {
      int idx = -1;
      const auto& lc = options.label_column;
      const auto res = std::from_chars(lc.data(), lc.data() + lc.size(), idx);
      if (res.ec != std::errc() || res.ptr != lc.data() + lc.size() || idx < 0 ||
          idx >= static_cast<int>(width)) {
        throw Error(ErrorKind::UnknownColumn, "label column '" + lc + "' not found");
      }
      label_index = idx;
    }
    // A header whose only non-numeric field is the label column value is data.
    if (has_header) {
      bool others_numeric = true;
      for (std::size_t j = 0; j < width; ++j) {
        double v = 0.0;
        if (static_cast<int>(j) != label_index && !parse_double(first[j], v)) others_numeric = false;
      }
      if (others_numeric && trim(first[static_cast<std::size_t>(label_index)]) != options.label_column)
        has_header = false;
    }
  }

  DelimitedTable table;
  for (std::size_t j = 0; j < width; ++j) {
    if (static_cast<int>(j) == label_index) continue;
    table.feature_names.push_back(has_header ? std::string(trim(first[j]))
                                             : "x" + std::to_string(j));
  }

  const std::size_t start = has_header ? 1 : 0;
  const auto n = static_cast<Eigen::Index>(lines.size() - start);
  const auto p = static_cast<Eigen::Index>(table.feature_names.size());
  table.values.resize(n, p);
  for (std::size_t i = start; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto fields = split_fields(line, delim);
    if (fields.size() != width) {
      fail_at(number, "expected " + std::to_string(width) + " fields, found " +
                          std::to_string(fields.size()));
    }
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < width; ++j) {
      if (static_cast<int>(j) == label_index) {
        table.labels.emplace_back(trim(fields[j]));
        continue;
      }
      double v = 0.0;
      if (!parse_double(fields[j], v)) {
        fail_at(number, "field " + std::to_string(j + 1) + " is not a number");
      }
      if (!std::isfinite(v)) fail_at(number, "field " + std::to_string(j + 1) + " is not finite");
      table.values(static_cast<Eigen::Index>(i - start), col++) = v;
    }
  }
  return table;
}

DelimitedTable read_delimited(const std::filesystem::path& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_delimited(buffer.str(), options);
}

LabeledDataset to_labeled_dataset(const DelimitedTable& table) {
  if (table.labels.empty()) throw Error(ErrorKind::ParseError, "table has no label column");
  std::map<std::string, int> counts;
  for (const auto& l : table.labels) ++counts[l];
  if (counts.size() != 2) {
    throw Error(ErrorKind::ParseError, "expected exactly two distinct labels, found " +
                                           std::to_string(counts.size()));
  }
  auto it = counts.begin();
  const auto& [first_name, first_count] = *it++;
  const auto& [second_name, second_count] = *it;
  const std::string class_1 = second_count < first_count ? second_name : first_name;

  std::vector<int> labels;
  labels.reserve(table.labels.size());
  for (const auto& l : table.labels) labels.push_back(l == class_1 ? 1 : 2);
  return LabeledDataset(table.values, std::move(labels));
}

Matrix read_matrix(const std::filesystem::path& path) {
  const auto table = read_delimited(path, ReadOptions{});
  return table.values;
}

}  // namespace projsep
