#include "projsep/summary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "projsep/error.hpp"

namespace projsep {

namespace {

enum class RecordMode { Overlap, Oos, Mc };

std::optional<RecordMode> mode_of(const SweepRecord& r) {
  if (!r.ok()) return std::nullopt;
  if (r.mc) return RecordMode::Mc;
  if (r.oos) return RecordMode::Oos;
  if (r.overlap) return RecordMode::Overlap;
  return std::nullopt;
}

const char* metric_name(RecordMode m) {
  switch (m) {
    case RecordMode::Overlap: return "metric_overlap";
    case RecordMode::Oos: return "metric_oos";
    case RecordMode::Mc: return "metric_mc";
  }
  return "";
}

std::optional<double> metric_of(const SweepRecord& r, RecordMode m) {
  if (!r.ok()) return std::nullopt;
  switch (m) {
    case RecordMode::Overlap: return r.overlap;
    case RecordMode::Oos: return r.oos;
    case RecordMode::Mc: return r.mc;
  }
  return std::nullopt;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(const std::string& s) {
  if (s.empty()) return s;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Accumulator {
  double metric_sum = 0.0;
  int n_ok = 0;
  double regret_sum = 0.0;
  int n_positive = 0;
  int n_compared = 0;
  int n_failed = 0;
};

}  // namespace

std::string record_field(const SweepRecord& r, const std::string& column) {
  if (column == "family") return r.family;
  if (column == "p") return std::to_string(r.p);
  if (column == "q") return std::to_string(r.q);
  if (column == "param1") return r.param1;
  if (column == "param2") return r.param2;
  if (column == "param3") return r.param3;
  if (column == "replicate") return std::to_string(r.replicate);
  throw Error(ErrorKind::UnknownColumn, "cannot group by '" + column + "'");
}

Summary summarize(const std::vector<SweepRecord>& records, const std::vector<std::string>& group_by,
                  const std::string& baseline) {
  if (!records.empty()) {
    for (const auto& c : group_by) record_field(records.front(), c);
  }

  std::optional<RecordMode> mode;
  bool baseline_seen = false;
  for (const auto& r : records) {
    baseline_seen = baseline_seen || r.projection == baseline;
    const auto m = mode_of(r);
    if (!m) continue;
    if (mode && *mode != *m) {
      throw Error(ErrorKind::MixedModes, "records mix " + std::string(metric_name(*mode)) +
                                             " and " + metric_name(*m));
    }
    mode = m;
  }
  if (!baseline_seen) {
    throw Error(ErrorKind::ConfigRejected, "baseline projection '" + baseline + "' not in records");
  }

  Summary out;
  out.group_by = group_by;
  out.baseline = baseline;
  const RecordMode m = mode.value_or(RecordMode::Overlap);
  out.metric = metric_name(m);

  // Projection order: baseline, then first appearance.
  std::vector<std::string> projections{baseline};
  for (const auto& r : records) {
    if (std::find(projections.begin(), projections.end(), r.projection) == projections.end()) {
      projections.push_back(r.projection);
    }
  }

  using UnitKey = std::vector<std::string>;
  std::map<std::vector<std::string>, std::size_t> group_index;
  std::vector<std::map<UnitKey, std::map<std::string, const SweepRecord*>>> units;
  std::vector<std::vector<UnitKey>> unit_order;

  for (const auto& r : records) {
    std::vector<std::string> key;
    key.reserve(group_by.size());
    for (const auto& c : group_by) key.push_back(record_field(r, c));
    auto [it, inserted] = group_index.emplace(key, out.groups.size());
    if (inserted) {
      GroupSummary g;
      g.key = key;
      out.groups.push_back(std::move(g));
      units.emplace_back();
      unit_order.emplace_back();
    }
    const std::size_t gi = it->second;
    UnitKey unit{r.family, std::to_string(r.p), std::to_string(r.q), r.param1,
                 r.param2, r.param3, std::to_string(r.replicate)};
    auto [uit, fresh] = units[gi].try_emplace(unit);
    if (fresh) unit_order[gi].push_back(unit);
    uit->second[r.projection] = &r;
  }

  for (std::size_t gi = 0; gi < out.groups.size(); ++gi) {
    auto& g = out.groups[gi];
    std::map<std::string, Accumulator> acc;
    for (const auto& unit : unit_order[gi]) {
      const auto& by_projection = units[gi].at(unit);
      std::optional<double> base;
      if (auto b = by_projection.find(baseline); b != by_projection.end()) {
        base = metric_of(*b->second, m);
      }
      for (const auto& [name, rec] : by_projection) {
        auto& a = acc[name];
        if (!rec->ok()) {
          ++a.n_failed;
          ++g.n_failed;
          continue;
        }
        const auto v = metric_of(*rec, m);
        if (!v) continue;
        a.metric_sum += *v;
        ++a.n_ok;
        if (base) {
          const double regret = *v - *base;
          a.regret_sum += regret;
          a.n_positive += regret > 0.0;
          ++a.n_compared;
        }
      }
    }
    g.n_units = static_cast<int>(unit_order[gi].size());
    const double nan = std::nan("");
    for (const auto& name : projections) {
      const auto& a = acc[name];
      ProjectionSummary s;
      s.projection = name;
      s.n_ok = a.n_ok;
      s.n_compared = a.n_compared;
      s.n_failed = a.n_failed;
      s.mean_metric = a.n_ok ? a.metric_sum / a.n_ok : nan;
      s.mean_regret = a.n_compared ? a.regret_sum / a.n_compared : nan;
      s.positive_frequency = a.n_compared ? static_cast<double>(a.n_positive) / a.n_compared : nan;
      g.projections.push_back(s);
    }
  }
  return out;
}

SummaryTable Summary::table() const {
  SummaryTable t;
  t.columns = group_by;
  t.columns.push_back("mean_" + baseline);
  std::vector<std::string> others;
  if (!groups.empty()) {
    for (std::size_t j = 1; j < groups.front().projections.size(); ++j) {
      others.push_back(groups.front().projections[j].projection);
    }
  }
  for (const auto& name : others) {
    t.columns.push_back("regret_" + name);
    t.columns.push_back("pos_" + name);
  }
  t.columns.push_back("n");
  t.columns.push_back("failed");

  for (const auto& g : groups) {
    std::vector<std::string> row = g.key;
    row.push_back(format_double(g.projections.front().mean_metric));
    for (std::size_t j = 1; j < g.projections.size(); ++j) {
      row.push_back(format_double(g.projections[j].mean_regret));
      row.push_back(format_double(g.projections[j].positive_frequency));
    }
    row.push_back(std::to_string(g.n_units));
    row.push_back(std::to_string(g.n_failed));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string summary_csv(const SummaryTable& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out += ',';
      out += cells[j];
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string aligned_table(const SummaryTable& table) {
  std::vector<std::vector<std::string>> cells{table.columns};
  for (const auto& row : table.rows) {
    std::vector<std::string> shown;
    shown.reserve(row.size());
    for (const auto& c : row) shown.push_back(format_short(c));
    cells.push_back(std::move(shown));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) {
      if (j) out += "  ";
      out += std::string(width[j] - row[j].size(), ' ');
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

}  // namespace projsep
