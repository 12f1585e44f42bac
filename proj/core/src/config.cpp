#include "projsep/config.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "projsep/error.hpp"

namespace projsep {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  throw Error(ErrorKind::ConfigRejected, key + ": " + what);
}

double to_double(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) bad(key, "'" + s + "' is not a number");
  return v;
}

template <class Int>
Int to_integer(const std::string& key, const std::string& s) {
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    bad(key, "'" + s + "' is not an integer");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  bad(key, "'" + s + "' is not a boolean");
}

std::vector<int> int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const auto& item : split_list(value)) out.push_back(to_integer<int>(key, item));
  return out;
}

std::vector<double> double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(to_double(key, item));
  return out;
}

std::string resolve(const std::string& value, const std::filesystem::path& base_dir) {
  if (value.empty() || base_dir.empty()) return value;
  const std::filesystem::path p(value);
  return p.is_absolute() ? value : (base_dir / p).lexically_normal().string();
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += format(items[i]);
  }
  return out;
}

}  // namespace

void apply_setting(SweepSpec& spec, const std::string& key, const std::string& raw,
                   const std::filesystem::path& base_dir) {
  auto& c = spec.config;
  const std::string value = trim(raw);
  try {
    if (key == "family") {
      c.family = parse_family(value);
    } else if (key == "mode") {
      c.mode = parse_mode(value);
    } else if (key == "p") {
      c.p_grid = int_list(key, value);
    } else if (key == "q") {
      c.q_grid = int_list(key, value);
    } else if (key == "n") {
      c.n_grid = int_list(key, value);
    } else if (key == "n_simu") {
      c.n_simu = to_integer<int>(key, value);
    } else if (key == "projections") {
      c.projections.clear();
      for (const auto& item : split_list(value)) c.projections.push_back(parse_projection(item));
    } else if (key == "seed") {
      c.master_seed = to_integer<std::uint64_t>(key, value);
    } else if (key == "workers") {
      c.n_workers = to_integer<int>(key, value);
    } else if (key == "df_ratio") {
      c.df_ratios = double_list(key, value);
    } else if (key == "share") {
      c.shares.clear();
      for (const auto& item : split_list(value)) c.shares.push_back(parse_share(item));
    } else if (key == "mixing") {
      c.sparse_mixing.clear();
      for (const auto& item : split_list(value)) {
        if (item != "dense" && item != "sparse") bad(key, "expected dense or sparse, got '" + item + "'");
        c.sparse_mixing.push_back(item == "sparse");
      }
    } else if (key == "sparse_density") {
      c.sparse_density = to_double(key, value);
    } else if (key == "gamma") {
      c.gammas = double_list(key, value);
    } else if (key == "dataset") {
      spec.dataset_path = resolve(value, base_dir);
    } else if (key == "label_column") {
      spec.label_column = value;
    } else if (key == "cov_1") {
      spec.cov_1_path = resolve(value, base_dir);
    } else if (key == "cov_2") {
      spec.cov_2_path = resolve(value, base_dir);
    } else if (key == "train_frac") {
      c.train_frac = to_double(key, value);
    } else if (key == "mc_samples") {
      c.mc_samples = to_integer<long>(key, value);
    } else if (key == "ridge") {
      c.ridge = value == "auto" ? -1.0 : to_double(key, value);
      if (value != "auto" && c.ridge < 0.0) bad(key, "must be non-negative or auto");
    } else if (key == "qda_ridge") {
      c.qda_ridge = to_double(key, value);
    } else if (key == "timing") {
      c.timing = to_bool(key, value);
    } else {
      bad(key, "unknown key");
    }
  } catch (const Error& e) {
    // Enum parsers report the value only; prefix the key they came from.
    if (e.detail().rfind(key + ":", 0) != 0) throw Error(e.kind(), key + ": " + e.detail(), e.dim());
    throw;
  }
}

SweepSpec parse_sweep_spec(const std::string& text, const std::filesystem::path& base_dir) {
  SweepSpec spec;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::ConfigRejected, "line " + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    try {
      apply_setting(spec, key, line.substr(eq + 1), base_dir);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(number) + ": " + e.detail(), e.dim());
    }
  }
  return spec;
}

void load_inputs(SweepSpec& spec) {
  auto& c = spec.config;
  if (!spec.dataset_path.empty()) {
    ReadOptions options;
    options.label_column = spec.label_column;
    if (options.label_column.empty()) {
      throw Error(ErrorKind::ConfigRejected, "label_column: required with a dataset");
    }
    c.dataset = std::make_shared<const LabeledDataset>(
        to_labeled_dataset(read_delimited(spec.dataset_path, options)));
  }
  if (!spec.cov_1_path.empty() || !spec.cov_2_path.empty()) {
    if (spec.cov_1_path.empty() || spec.cov_2_path.empty()) {
      throw Error(ErrorKind::ConfigRejected, "cov_1/cov_2: both matrices are required");
    }
    c.fixed_pair = CovariancePair{SpdMatrix::make_strict(read_matrix(spec.cov_1_path)),
                                  SpdMatrix::make_strict(read_matrix(spec.cov_2_path))};
  }
}

std::string format_sweep_spec(const SweepSpec& spec) {
  const auto& c = spec.config;
  std::ostringstream out;
  auto put = [&out](const std::string& key, const std::string& value) {
    out << key << '=' << value << '\n';
  };
  auto ints = [](int v) { return std::to_string(v); };
  put("family", to_string(c.family));
  put("mode", to_string(c.mode));
  if (c.family != SweepFamily::Fixed) put("p", join(c.p_grid, ints));
  put("q", join(c.q_grid, ints));
  if (!c.n_grid.empty()) put("n", join(c.n_grid, ints));
  put("n_simu", std::to_string(c.n_simu));
  put("projections", join(c.projections, [](ProjectionKind k) { return to_string(k); }));
  put("seed", std::to_string(c.master_seed));
  put("workers", std::to_string(c.n_workers));
  switch (c.family) {
    case SweepFamily::InverseWishart:
      put("df_ratio", join(c.df_ratios, g17));
      break;
    case SweepFamily::LatentLowDim:
      put("share", join(c.shares, [](LatentShare s) { return to_string(s); }));
      put("mixing", join(c.sparse_mixing, [](bool s) { return std::string(s ? "sparse" : "dense"); }));
      put("sparse_density", g17(c.sparse_density));
      break;
    case SweepFamily::EmpiricalCov:
      put("gamma", join(c.gammas, g17));
      put("dataset", spec.dataset_path);
      put("label_column", spec.label_column);
      break;
    case SweepFamily::Fixed:
      put("cov_1", spec.cov_1_path);
      put("cov_2", spec.cov_2_path);
      break;
  }
  put("train_frac", g17(c.train_frac));
  put("mc_samples", std::to_string(c.mc_samples));
  put("ridge", c.ridge < 0.0 ? std::string("auto") : g17(c.ridge));
  put("qda_ridge", g17(c.qda_ridge));
  put("timing", c.timing ? "true" : "false");
  return out.str();
}

}  // namespace projsep
