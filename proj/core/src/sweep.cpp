#include "projsep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "projsep/classify.hpp"
#include "projsep/error.hpp"
#include "projsep/metrics.hpp"
#include "projsep/projections.hpp"

namespace projsep {

namespace {

// Child indices under a replicate stream [cell, replicate].
enum StreamSlot : std::uint64_t {
  kGenerator = 0,
  kRp = 1,
  kSparseRp = 2,
  kSamples = 3,
  kSplit = 4,
  kRisk = 5,
};

[[noreturn]] void reject(const std::string& what) { throw Error(ErrorKind::ConfigRejected, what); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

struct Truth {
  CovariancePair pair;
  std::optional<LabeledDataset> data;  // empirical family: overlapped rows
};

Truth make_truth(const SweepConfig& config, const SweepCell& cell, RngStream& gen) {
  const int p = cell.p;
  switch (config.family) {
    case SweepFamily::InverseWishart:
      return {gen_iw_pair(p, cell.df_ratio_1 * p, cell.df_ratio_2 * p, gen), std::nullopt};
    case SweepFamily::LatentLowDim: {
      LatentLowDimParams params;
      params.share_q = cell.share == LatentShare::Q;
      params.share_theta = cell.share == LatentShare::Theta;
      params.sparse_q = cell.sparse_mixing;
      params.sparse_density = config.sparse_density;
      return {gen_latent_pair(p, params, gen), std::nullopt};
    }
    case SweepFamily::EmpiricalCov: {
      const EmpiricalCovParams params{cell.gamma, config.dataset};
      auto overlap = draw_empirical_overlap(p, params, gen);
      auto pair = empirical_cov_pair(overlap.x_1, overlap.x_2);
      return {std::move(pair), LabeledDataset::from_classes(overlap.x_1, overlap.x_2)};
    }
    case SweepFamily::Fixed:
      return {*config.fixed_pair, std::nullopt};
  }
  throw Error(ErrorKind::InternalError, "unhandled family");
}

LabeledDataset sample_data(const CovariancePair& pair, int n, const RngStream& stream) {
  const int p = pair.first.dim();
  const Vector zero = Vector::Zero(p);
  auto s1 = stream.fork(0);
  auto s2 = stream.fork(1);
  const Matrix x1 = sample_gaussian_factor(zero, covariance_factor(pair.first), n, s1);
  const Matrix x2 = sample_gaussian_factor(zero, covariance_factor(pair.second), n, s2);
  return LabeledDataset::from_classes(x1, x2);
}

double resolved_ridge(double configured, const SpdMatrix& cov) {
  return configured < 0.0 ? default_ridge(cov) : configured;
}

struct ReplicateContext {
  const SweepConfig& config;
  const SweepCell& cell;
  const RngStream& stream;
  const Truth& truth;
  // Data modes only.
  const LabeledDataset* train = nullptr;
  const LabeledDataset* validation = nullptr;
  const ClassStatistics* train_stats = nullptr;
};

ProjectionMatrix build_projection(ProjectionKind kind, const ReplicateContext& ctx) {
  const int p = ctx.cell.p;
  const int q = ctx.cell.q;
  const auto& [cov_1, cov_2] = ctx.truth.pair;
  switch (kind) {
    case ProjectionKind::Pca:
      return pca_projection(SpdMatrix::make(cov_1.entries() + cov_2.entries()), q);
    case ProjectionKind::Rp: {
      auto s = ctx.stream.fork(kRp);
      return random_projection(p, q, s);
    }
    case ProjectionKind::SparseRp: {
      auto s = ctx.stream.fork(kSparseRp);
      return sparse_random_projection(p, q, s);
    }
    case ProjectionKind::BhattOptimal:
      return bhattacharyya_optimal_projection(cov_1, cov_2, q,
                                              resolved_ridge(ctx.config.ridge, cov_1));
    case ProjectionKind::EmpPca:
      return pca_projection(pooled_covariance(ctx.train->x), q);
    case ProjectionKind::EmpBhattOptimal: {
      const auto& s = *ctx.train_stats;
      return bhattacharyya_optimal_projection(s.cov_1, s.cov_2, q,
                                              resolved_ridge(ctx.config.ridge, s.cov_1));
    }
  }
  throw Error(ErrorKind::InternalError, "unhandled projection");
}

void evaluate(const ProjectionMatrix& w, const ReplicateContext& ctx, SweepRecord& rec) {
  const auto& [cov_1, cov_2] = ctx.truth.pair;
  switch (ctx.config.mode) {
    case SweepMode::Overlap:
      rec.overlap = embedded_overlap(cov_1, cov_2, w);
      break;
    case SweepMode::RiskMc: {
      rec.overlap = embedded_overlap(cov_1, cov_2, w);
      const auto model = TwoClassGaussian::centered(cov_1, cov_2);
      const auto risk = mc_bayes_risk(model, w, ctx.config.mc_samples, ctx.stream.fork(kRisk));
      rec.mc = risk.estimate;
      rec.mc_se = risk.std_error;
      break;
    }
    case SweepMode::OosLoss:
    case SweepMode::FiniteSampleCurve: {
      QdaOptions options;
      options.ridge = ctx.config.qda_ridge;
      const auto qda = EmbeddedQda::fit(*ctx.train, w, options);
      rec.oos = oos_error(qda, *ctx.validation);
      if (ctx.config.mode == SweepMode::FiniteSampleCurve) {
        const auto& s = *ctx.train_stats;
        rec.recon = reconstruction_error(w, s.cov_1, s.cov_2, cov_1, cov_2);
      }
      break;
    }
  }
}

SweepRecord record_stub(const SweepConfig& config, const SweepCell& cell, int replicate,
                        ProjectionKind kind) {
  SweepRecord r;
  r.cell = cell.index;
  r.family = to_string(config.family);
  r.p = cell.p;
  r.q = cell.q;
  switch (config.family) {
    case SweepFamily::InverseWishart:
      r.param1 = format_double(cell.df_ratio_1);
      r.param2 = format_double(cell.df_ratio_2);
      break;
    case SweepFamily::LatentLowDim:
      r.param1 = to_string(cell.share);
      r.param2 = cell.sparse_mixing ? "sparse" : "dense";
      break;
    case SweepFamily::EmpiricalCov:
      r.param1 = format_double(cell.gamma);
      break;
    case SweepFamily::Fixed:
      break;
  }
  if (cell.n > 0) r.param3 = std::to_string(cell.n);
  r.replicate = replicate;
  r.projection = to_string(kind);
  return r;
}

std::string failure(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return "failed:" + std::string(to_string(err->kind()));
  }
  return "failed:InternalError";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> parse_optional(const std::string& s, std::size_t line) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
}

}  // namespace

std::string to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::InverseWishart: return "inverse_wishart";
    case SweepFamily::LatentLowDim: return "latent";
    case SweepFamily::EmpiricalCov: return "empirical";
    case SweepFamily::Fixed: return "fixed";
  }
  return "unknown";
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::Overlap: return "overlap";
    case SweepMode::OosLoss: return "oos_loss";
    case SweepMode::RiskMc: return "risk_mc";
    case SweepMode::FiniteSampleCurve: return "finite_sample_curve";
  }
  return "unknown";
}

std::string to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::Pca: return "pca";
    case ProjectionKind::Rp: return "rp";
    case ProjectionKind::SparseRp: return "sparse_rp";
    case ProjectionKind::BhattOptimal: return "bhatt_optimal";
    case ProjectionKind::EmpPca: return "emp_pca";
    case ProjectionKind::EmpBhattOptimal: return "emp_bhatt_optimal";
  }
  return "unknown";
}

std::string to_string(LatentShare share) {
  switch (share) {
    case LatentShare::None: return "none";
    case LatentShare::Q: return "q";
    case LatentShare::Theta: return "theta";
  }
  return "unknown";
}

SweepFamily parse_family(const std::string& name) {
  for (auto f : {SweepFamily::InverseWishart, SweepFamily::LatentLowDim, SweepFamily::EmpiricalCov,
                 SweepFamily::Fixed}) {
    if (to_string(f) == name) return f;
  }
  reject("unknown family '" + name + "'");
}

SweepMode parse_mode(const std::string& name) {
  for (auto m : {SweepMode::Overlap, SweepMode::OosLoss, SweepMode::RiskMc,
                 SweepMode::FiniteSampleCurve}) {
    if (to_string(m) == name) return m;
  }
  reject("unknown mode '" + name + "'");
}

ProjectionKind parse_projection(const std::string& name) {
  for (auto k : {ProjectionKind::Pca, ProjectionKind::Rp, ProjectionKind::SparseRp,
                 ProjectionKind::BhattOptimal, ProjectionKind::EmpPca,
                 ProjectionKind::EmpBhattOptimal}) {
    if (to_string(k) == name) return k;
  }
  reject("unknown projection '" + name + "'");
}

LatentShare parse_share(const std::string& name) {
  for (auto s : {LatentShare::None, LatentShare::Q, LatentShare::Theta}) {
    if (to_string(s) == name) return s;
  }
  reject("unknown share setting '" + name + "'");
}

bool is_data_mode(SweepMode mode) {
  return mode == SweepMode::OosLoss || mode == SweepMode::FiniteSampleCurve;
}

void SweepConfig::validate() const {
  if (n_simu < 1) reject("n_simu must be at least 1");
  if (n_workers < 1) reject("workers must be at least 1");
  if (q_grid.empty()) reject("q grid is empty");
  for (int q : q_grid) {
    if (q < 1) reject("q values must be positive");
  }
  if (family == SweepFamily::Fixed) {
    if (!fixed_pair) reject("fixed family needs a covariance pair");
  } else {
    if (p_grid.empty()) reject("p grid is empty");
    for (int p : p_grid) {
      if (p < 1) reject("p values must be positive");
    }
  }
  if (projections.empty()) reject("no projections selected");
  for (std::size_t i = 0; i < projections.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (projections[i] == projections[j]) reject("duplicate projection " + to_string(projections[i]));
    }
    const bool empirical =
        projections[i] == ProjectionKind::EmpPca || projections[i] == ProjectionKind::EmpBhattOptimal;
    if (empirical && !is_data_mode(mode)) {
      reject("projection " + to_string(projections[i]) + " needs mode oos_loss or finite_sample_curve");
    }
  }

  switch (family) {
    case SweepFamily::InverseWishart:
      if (df_ratios.empty()) reject("df_ratio grid is empty");
      for (double r : df_ratios) {
        if (!(r >= 1.0)) {
          throw Error(ErrorKind::DegreesOfFreedomTooSmall,
                      "df_ratio " + format_double(r) + " is below 1 (df must be at least p)");
        }
      }
      break;
    case SweepFamily::LatentLowDim:
      if (shares.empty()) reject("share grid is empty");
      if (sparse_mixing.empty()) reject("mixing grid is empty");
      if (!(sparse_density > 0.0 && sparse_density <= 1.0)) reject("sparse_density must lie in (0, 1]");
      for (int p : p_grid) {
        if (p < 2) reject("latent family needs p >= 2");
      }
      break;
    case SweepFamily::EmpiricalCov:
      if (gammas.empty()) reject("gamma grid is empty");
      for (double g : gammas) {
        if (!(g >= 0.0 && g <= 1.0)) reject("gamma " + format_double(g) + " is outside [0, 1]");
      }
      if (!dataset) reject("empirical family needs a dataset");
      for (int p : p_grid) {
        if (p > dataset->p()) {
          reject("p = " + std::to_string(p) + " exceeds the dataset's " +
                 std::to_string(dataset->p()) + " columns");
        }
      }
      break;
    case SweepFamily::Fixed:
      break;
  }

  if (is_data_mode(mode)) {
    if (!(train_frac > 0.0 && train_frac < 1.0)) reject("train_frac must lie in (0, 1)");
    if (!(qda_ridge >= 0.0)) reject("qda_ridge must be non-negative");
    if (family != SweepFamily::EmpiricalCov) {
      if (n_grid.empty()) reject("data modes need a sample-size grid n");
      for (int n : n_grid) {
        if (n < 2) reject("n values must be at least 2");
      }
    }
  }
  if (mode == SweepMode::RiskMc && mc_samples < 1) reject("mc_samples must be at least 1");
}

std::vector<SweepCell> expand_grid(const SweepConfig& config) {
  config.validate();
  const std::vector<int> ps =
      config.family == SweepFamily::Fixed ? std::vector<int>{config.fixed_pair->first.dim()}
                                          : config.p_grid;
  std::vector<int> ns{0};
  if (is_data_mode(config.mode) && config.family != SweepFamily::EmpiricalCov) ns = config.n_grid;

  std::vector<SweepCell> family_cells;
  switch (config.family) {
    case SweepFamily::InverseWishart:
      for (double a : config.df_ratios) {
        for (double b : config.df_ratios) {
          SweepCell c;
          c.df_ratio_1 = a;
          c.df_ratio_2 = b;
          family_cells.push_back(c);
        }
      }
      break;
    case SweepFamily::LatentLowDim:
      for (auto share : config.shares) {
        for (bool sparse : config.sparse_mixing) {
          SweepCell c;
          c.share = share;
          c.sparse_mixing = sparse;
          family_cells.push_back(c);
        }
      }
      break;
    case SweepFamily::EmpiricalCov:
      for (double g : config.gammas) {
        SweepCell c;
        c.gamma = g;
        family_cells.push_back(c);
      }
      break;
    case SweepFamily::Fixed:
      family_cells.emplace_back();
      break;
  }

  std::vector<SweepCell> cells;
  for (int p : ps) {
    for (int q : config.q_grid) {
      if (q >= p) continue;
      for (const auto& base : family_cells) {
        for (int n : ns) {
          SweepCell c = base;
          c.index = cells.size();
          c.p = p;
          c.q = q;
          c.n = n;
          cells.push_back(c);
        }
      }
    }
  }
  if (cells.empty()) throw Error(ErrorKind::EmptyGrid, "no (p, q) combination with q < p");
  return cells;
}

std::vector<SweepRecord> run_cell(const SweepConfig& config, const SweepCell& cell) {
  std::vector<SweepRecord> out;
  out.reserve(static_cast<std::size_t>(config.n_simu) * config.projections.size());
  const bool data_mode = is_data_mode(config.mode);

  for (int rep = 0; rep < config.n_simu; ++rep) {
    const auto stream = derive_stream(config.master_seed, {cell.index, static_cast<std::uint64_t>(rep)});

    std::optional<Truth> truth;
    std::optional<std::pair<LabeledDataset, LabeledDataset>> split;
    std::optional<ClassStatistics> stats;
    std::string setup_failure;
    try {
      auto gen = stream.fork(kGenerator);
      truth = make_truth(config, cell, gen);
      if (data_mode) {
        const LabeledDataset data = truth->data ? *truth->data
                                                : sample_data(truth->pair, cell.n, stream.fork(kSamples));
        auto split_stream = stream.fork(kSplit);
        split = train_validation_split(data, config.train_frac, split_stream);
        stats = empirical_covariances(split->first);
      }
    } catch (const std::exception& e) {
      setup_failure = failure(e);
    }

    for (auto kind : config.projections) {
      auto rec = record_stub(config, cell, rep, kind);
      const auto start = std::chrono::steady_clock::now();
      if (!setup_failure.empty()) {
        rec.status = setup_failure;
      } else {
        ReplicateContext ctx{config, cell, stream, *truth};
        if (data_mode) {
          ctx.train = &split->first;
          ctx.validation = &split->second;
          ctx.train_stats = &*stats;
        }
        try {
          evaluate(build_projection(kind, ctx), ctx, rec);
        } catch (const std::exception& e) {
          rec.overlap.reset();
          rec.oos.reset();
          rec.mc.reset();
          rec.mc_se.reset();
          rec.recon.reset();
          rec.status = failure(e);
        }
      }
      if (config.timing) {
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        rec.ms = elapsed.count();
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::string format_record(const SweepRecord& r) {
  std::string line;
  line.reserve(160);
  auto field = [&line](const std::string& s) {
    if (!line.empty()) line += ',';
    line += s;
  };
  line = r.family;
  field(std::to_string(r.p));
  field(std::to_string(r.q));
  field(r.param1);
  field(r.param2);
  field(r.param3);
  field(std::to_string(r.replicate));
  field(r.projection);
  field(format_optional(r.overlap));
  field(format_optional(r.oos));
  field(format_optional(r.mc));
  field(format_optional(r.mc_se));
  field(format_optional(r.recon));
  field(r.status);
  field(format_optional(r.ms));
  return line;
}

std::vector<SweepRecord> read_records(std::istream& in) {
  std::string line;
  std::size_t number = 1;
  if (!std::getline(in, line)) throw Error(ErrorKind::ParseError, "records file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordHeader) {
    throw Error(ErrorKind::UnknownColumn, "line 1: unexpected records header '" + line + "'");
  }
  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 15) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(number) + ": expected 15 fields, found " +
                      std::to_string(f.size()));
    }
    SweepRecord r;
    r.family = f[0];
    r.p = parse_int(f[1], number);
    r.q = parse_int(f[2], number);
    r.param1 = f[3];
    r.param2 = f[4];
    r.param3 = f[5];
    r.replicate = parse_int(f[6], number);
    r.projection = f[7];
    r.overlap = parse_optional(f[8], number);
    r.oos = parse_optional(f[9], number);
    r.mc = parse_optional(f[10], number);
    r.mc_se = parse_optional(f[11], number);
    r.recon = parse_optional(f[12], number);
    r.status = f[13];
    r.ms = parse_optional(f[14], number);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_records(in);
}

namespace {

// Number of leading cells already on disk, after trimming the records file
// to exactly those cells' rows.
std::size_t recover(const SweepOutput& out, std::size_t rows_per_cell) {
  std::set<std::size_t> done;
  {
    std::ifstream ck(out.checkpoint);
    std::string line;
    while (std::getline(ck, line)) {
      if (line.empty()) continue;
      try {
        done.insert(static_cast<std::size_t>(std::stoull(line)));
      } catch (const std::exception&) {
        break;
      }
    }
  }
  std::vector<std::string> lines;
  {
    std::ifstream in(out.records, std::ios::binary);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  if (lines.empty() || lines.front() != kRecordHeader) return 0;

  std::size_t prefix = 0;
  while (done.count(prefix)) ++prefix;
  prefix = std::min(prefix, (lines.size() - 1) / rows_per_cell);

  std::ofstream rec(out.records, std::ios::binary | std::ios::trunc);
  for (std::size_t i = 0; i < 1 + prefix * rows_per_cell; ++i) rec << lines[i] << '\n';
  std::ofstream ck(out.checkpoint, std::ios::binary | std::ios::trunc);
  for (std::size_t i = 0; i < prefix; ++i) ck << i << '\n';
  if (!rec || !ck) throw Error(ErrorKind::SinkWriteFailure, "cannot rewrite " + out.records.string());
  return prefix;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config,
                                   const std::optional<SweepOutput>& output) {
  const auto cells = expand_grid(config);
  const std::size_t rows_per_cell =
      static_cast<std::size_t>(config.n_simu) * config.projections.size();

  std::optional<SweepOutput> out = output;
  std::ofstream records_file;
  std::ofstream checkpoint_file;
  std::size_t first = 0;
  if (out) {
    if (out->checkpoint.empty()) out->checkpoint = out->records.string() + ".ckpt";
    if (out->resume && std::filesystem::exists(out->records)) {
      first = recover(*out, rows_per_cell);
    }
    if (first == 0) {
      std::ofstream fresh(out->records, std::ios::binary | std::ios::trunc);
      fresh << kRecordHeader << '\n';
      std::ofstream ck(out->checkpoint, std::ios::binary | std::ios::trunc);
      if (!fresh || !ck) {
        throw Error(ErrorKind::SinkWriteFailure, "cannot create " + out->records.string());
      }
    }
    records_file.open(out->records, std::ios::binary | std::ios::app);
    checkpoint_file.open(out->checkpoint, std::ios::binary | std::ios::app);
    if (!records_file || !checkpoint_file) {
      throw Error(ErrorKind::SinkWriteFailure, "cannot open " + out->records.string());
    }
  }

  std::vector<SweepRecord> all;
  std::map<std::size_t, std::vector<SweepRecord>> pending;
  std::size_t next_to_write = first;
  std::mutex mu;
  std::exception_ptr error;
  std::atomic<std::size_t> next_cell{first};
  std::atomic<bool> stop{false};

  auto flush_ready = [&] {
    while (!pending.empty() && pending.begin()->first == next_to_write) {
      auto recs = std::move(pending.begin()->second);
      pending.erase(pending.begin());
      if (out) {
        std::string block;
        for (const auto& r : recs) {
          block += format_record(r);
          block += '\n';
        }
        records_file << block;
        records_file.flush();
        if (!records_file) throw Error(ErrorKind::SinkWriteFailure, "write to " + out->records.string() + " failed");
        checkpoint_file << next_to_write << '\n';
        checkpoint_file.flush();
        if (!checkpoint_file) {
          throw Error(ErrorKind::SinkWriteFailure, "write to " + out->checkpoint.string() + " failed");
        }
      }
      for (auto& r : recs) all.push_back(std::move(r));
      ++next_to_write;
    }
  };

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next_cell.fetch_add(1);
      if (i >= cells.size()) break;
      try {
        auto recs = run_cell(config, cells[i]);
        std::lock_guard<std::mutex> lock(mu);
        pending.emplace(i, std::move(recs));
        flush_ready();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  const int threads = std::max(1, std::min<int>(config.n_workers, static_cast<int>(cells.size() - first)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return all;
}

std::vector<SweepRecord> finite_sample_scenario(const SweepConfig& config) {
  if (config.mode != SweepMode::FiniteSampleCurve) {
    reject("finite_sample_scenario needs mode finite_sample_curve");
  }
  return run_sweep(config);
}

}  // namespace projsep
