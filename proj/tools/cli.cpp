#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "projsep/classify.hpp"
#include "projsep/config.hpp"
#include "projsep/error.hpp"
#include "projsep/fixtures.hpp"
#include "projsep/metrics.hpp"
#include "projsep/projections.hpp"
#include "projsep/summary.hpp"
#include "projsep/sweep.hpp"

namespace projsep::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<ProjectionKind> parse_projections(const std::string& list) {
  std::vector<ProjectionKind> out;
  for (const auto& name : split_list(list)) out.push_back(parse_projection(name));
  if (out.empty()) throw Error(ErrorKind::ConfigRejected, "projections: empty list");
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SinkWriteFailure: return kSink;
    case ErrorKind::SingularEmbeddedCovariance: return kSingular;
    default: return kUsage;
  }
}

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  f.flush();
  return static_cast<bool>(f);
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string out = ".";
  std::string q, p, gamma, projections, ridge, train_frac, mc_samples;
  bool resume = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  std::ifstream in(a.config, std::ios::binary);
  if (!in) throw Error(ErrorKind::ConfigRejected, "config: cannot read " + a.config);
  std::stringstream text;
  text << in.rdbuf();
  const fs::path base = fs::absolute(a.config).parent_path();
  SweepSpec spec = parse_sweep_spec(text.str(), base);

  auto override_with = [&spec](const char* key, const std::string& value) {
    if (!value.empty()) apply_setting(spec, key, value);
  };
  if (a.seed) override_with("seed", std::to_string(*a.seed));
  if (a.workers) override_with("workers", std::to_string(*a.workers));
  override_with("q", a.q);
  override_with("p", a.p);
  override_with("gamma", a.gamma);
  override_with("projections", a.projections);
  override_with("ridge", a.ridge);
  override_with("train_frac", a.train_frac);
  override_with("mc_samples", a.mc_samples);

  load_inputs(spec);
  spec.config.validate();

  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::SinkWriteFailure, "cannot create " + dir.string());

  SweepOutput sink;
  sink.records = dir / "records.csv";
  sink.checkpoint = dir / "records.ckpt";
  sink.resume = a.resume;

  const std::string started = utc_now();
  const auto records = run_sweep(spec.config, sink);
  const std::string finished = utc_now();

  std::ostringstream manifest;
  manifest << "# projsep " << kVersion << '\n'
           << "# started " << started << '\n'
           << "# finished " << finished << '\n'
           << "# records " << sink.records.string() << '\n'
           << format_sweep_spec(spec);
  if (!write_file(dir / "manifest.cfg", manifest.str())) {
    throw Error(ErrorKind::SinkWriteFailure, "cannot write " + (dir / "manifest.cfg").string());
  }

  std::size_t failed = 0;
  for (const auto& r : records) failed += !r.ok();
  out << records.size() << " records (" << failed << " failed) -> " << sink.records.string()
      << '\n';
  return kOk;
}

// ------------------------------------------------------------ summarize

int cmd_summarize(const std::string& records_path, const std::string& group_by,
                  const std::string& baseline, std::string out_path, std::ostream& out) {
  const auto records = read_records(fs::path(records_path));
  const auto summary = summarize(records, split_list(group_by), baseline);
  const auto table = summary.table();
  if (out_path.empty()) out_path = (fs::path(records_path).parent_path() / "summary.csv").string();
  if (!write_file(out_path, summary_csv(table))) {
    throw Error(ErrorKind::SinkWriteFailure, "cannot write " + out_path);
  }
  out << "metric: " << summary.metric << ", baseline: " << baseline << '\n'
      << aligned_table(table);
  return kOk;
}

// ----------------------------------------------------------------- eval

struct EvalArgs {
  std::string dataset;
  std::string label_column;
  double gamma = 0.0;
  int p = 0;
  int q = 5;
  std::string projections = "pca,rp,sparse_rp";
  std::uint64_t seed = 0;
  double train_frac = 0.7;
  std::string ridge = "auto";
  double qda_ridge = 0.0;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  ReadOptions options;
  options.label_column = a.label_column;
  const auto source =
      std::make_shared<const LabeledDataset>(to_labeled_dataset(read_delimited(a.dataset, options)));
  const int p = a.p > 0 ? a.p : source->p();
  const auto kinds = parse_projections(a.projections);
  const double ridge = a.ridge == "auto" ? -1.0 : std::stod(a.ridge);

  const RngStream root = derive_stream(a.seed, {});
  auto data_stream = root.fork(0);
  const auto overlap = draw_empirical_overlap(p, EmpiricalCovParams{a.gamma, source}, data_stream);
  const auto data = LabeledDataset::from_classes(overlap.x_1, overlap.x_2);
  auto split_stream = root.fork(1);
  const auto [train, val] = train_validation_split(data, a.train_frac, split_stream);

  out << "n1=" << overlap.x_1.rows() << " n2=" << overlap.x_2.rows() << " p=" << p
      << " q=" << a.q << " gamma=" << g17(a.gamma) << " train=" << train.n()
      << " validation=" << val.n() << '\n';

  bool singular = false;
  for (auto kind : kinds) {
    const std::string name = to_string(kind);
    try {
      std::optional<ProjectionMatrix> w;
      switch (kind) {
        case ProjectionKind::Pca:
        case ProjectionKind::EmpPca:
          // Unsupervised: all rows, labels unused.
          w = pca_projection(pooled_covariance(data.x), a.q);
          break;
        case ProjectionKind::Rp: {
          auto s = root.fork(2);
          w = random_projection(p, a.q, s);
          break;
        }
        case ProjectionKind::SparseRp: {
          auto s = root.fork(3);
          w = sparse_random_projection(p, a.q, s);
          break;
        }
        case ProjectionKind::BhattOptimal:
        case ProjectionKind::EmpBhattOptimal: {
          const auto stats = empirical_covariances(train);
          w = bhattacharyya_optimal_projection(stats.cov_1, stats.cov_2, a.q,
                                               ridge < 0.0 ? default_ridge(stats.cov_1) : ridge);
          break;
        }
      }
      QdaOptions qda_options;
      qda_options.ridge = a.qda_ridge;
      const auto qda = EmbeddedQda::fit(train, *w, qda_options);
      const double loss = oos_error(qda, val);
      const double se = std::sqrt(loss * (1.0 - loss) / val.n());
      out << name << " oos_loss=" << g17(loss) << " se=" << g17(se) << '\n';
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularEmbeddedCovariance) throw;
      singular = true;
      out << name << " singular embedded covariance (q=" << a.q << ")\n";
      err << name << ": " << e.what() << '\n';
    }
  }
  return singular ? kSingular : kOk;
}

// --------------------------------------------------------------- oracle

struct OracleArgs {
  std::string model;
  std::string projections = "pca,bhatt_optimal,rp,sparse_rp";
  int q = 1;
  int p = 10;
  double alpha = 4.0;
  double delta = 1.0;
  long mc_samples = 100000;
  std::uint64_t seed = 0;
  std::string ridge = "auto";
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  CovariancePair pair = [&] {
    if (a.model == "example1") return example_shared_subspace(a.p, a.q, a.alpha, a.delta);
    if (a.model == "example2") return example_disjoint_subspace(a.p, a.q, a.alpha, a.delta);
    const auto colon = a.model.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::ConfigRejected,
                  "model: expected example1, example2 or cov1_file:cov2_file, got '" + a.model + "'");
    }
    return CovariancePair{SpdMatrix::make_strict(read_matrix(a.model.substr(0, colon))),
                          SpdMatrix::make_strict(read_matrix(a.model.substr(colon + 1)))};
  }();
  const auto kinds = parse_projections(a.projections);
  const double ridge = a.ridge == "auto" ? -1.0 : std::stod(a.ridge);
  const auto model = TwoClassGaussian::centered(pair.first, pair.second);
  const int p = model.dim();
  const RngStream root = derive_stream(a.seed, {});

  out << "model=" << a.model << " p=" << p << " q=" << a.q << '\n';
  for (auto kind : kinds) {
    std::optional<ProjectionMatrix> w;
    switch (kind) {
      case ProjectionKind::Pca:
        w = pca_projection(SpdMatrix::make(pair.first.entries() + pair.second.entries()), a.q);
        break;
      case ProjectionKind::Rp: {
        auto s = root.fork(1);
        w = random_projection(p, a.q, s);
        break;
      }
      case ProjectionKind::SparseRp: {
        auto s = root.fork(2);
        w = sparse_random_projection(p, a.q, s);
        break;
      }
      case ProjectionKind::BhattOptimal:
        w = bhattacharyya_optimal_projection(pair.first, pair.second, a.q,
                                             ridge < 0.0 ? default_ridge(pair.first) : ridge);
        break;
      default:
        throw Error(ErrorKind::ConfigRejected,
                    "projections: " + to_string(kind) + " needs data; use eval or a sweep");
    }
    const double overlap = embedded_overlap(model, *w);
    const auto risk = mc_bayes_risk(model, *w, a.mc_samples, root.fork(0));
    out << to_string(kind) << " overlap=" << g17(overlap) << " mc_risk=" << g17(risk.estimate)
        << " se=" << g17(risk.std_error) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projection class-separability harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Run a configured sweep; writes records.csv and manifest.cfg");
  sw->add_option("--config", sweep.config, "key=value sweep configuration")->required()->check(CLI::ExistingFile);
  sw->add_option("--seed", sweep.seed, "Master seed (overrides the config)");
  sw->add_option("--workers", sweep.workers, "Worker threads (overrides the config)");
  sw->add_option("--out", sweep.out, "Output directory")->capture_default_str();
  sw->add_option("--q", sweep.q, "Comma-separated q grid");
  sw->add_option("--p", sweep.p, "Comma-separated p grid");
  sw->add_option("--gamma", sweep.gamma, "Comma-separated column-overlap grid");
  sw->add_option("--projections", sweep.projections, "Comma-separated projection names");
  sw->add_option("--ridge", sweep.ridge, "Optimal-projection ridge, number or auto");
  sw->add_option("--train-frac", sweep.train_frac, "Training fraction in the data modes");
  sw->add_option("--mc-samples", sweep.mc_samples, "Monte Carlo samples per risk estimate");
  sw->add_flag("--resume", sweep.resume, "Continue from the checkpoint in --out");

  std::string records_path, group_by, baseline = "pca", summary_out;
  auto* su = app.add_subcommand("summarize", "Regret and sign-frequency table from records.csv");
  su->add_option("records", records_path, "Records CSV")->required()->check(CLI::ExistingFile);
  su->add_option("--group-by", group_by, "Comma-separated grouping columns");
  su->add_option("--baseline", baseline, "Baseline projection")->capture_default_str();
  su->add_option("--out", summary_out, "Summary CSV (default: summary.csv next to the records)");

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Embedded QDA out-of-sample loss on a labelled dataset");
  ev->add_option("dataset", eval.dataset, "Comma- or tab-delimited data")->required()->check(CLI::ExistingFile);
  ev->add_option("--label-column", eval.label_column, "Label column name or zero-based index")->required();
  ev->add_option("--gamma", eval.gamma, "Column overlap in [0, 1]")->capture_default_str();
  ev->add_option("--p", eval.p, "Columns to subsample (default: all)");
  ev->add_option("--q", eval.q, "Embedding dimension")->capture_default_str();
  ev->add_option("--projections", eval.projections, "pca, rp, sparse_rp, bhatt_optimal")->capture_default_str();
  ev->add_option("--seed", eval.seed, "Seed")->capture_default_str();
  ev->add_option("--train-frac", eval.train_frac, "Training fraction")->capture_default_str();
  ev->add_option("--ridge", eval.ridge, "Optimal-projection ridge, number or auto")->capture_default_str();
  ev->add_option("--qda-ridge", eval.qda_ridge, "Relative ridge on embedded covariances")->capture_default_str();

  OracleArgs oracle;
  auto* orc = app.add_subcommand("oracle", "Embedded overlap and Monte Carlo Bayes risk of a known model");
  orc->add_option("model", oracle.model, "example1, example2 or cov1_file:cov2_file")->required();
  orc->add_option("--projections", oracle.projections, "pca, rp, sparse_rp, bhatt_optimal")->capture_default_str();
  orc->add_option("--q", oracle.q, "Embedding dimension")->capture_default_str();
  orc->add_option("--p", oracle.p, "Ambient dimension of the named examples")->capture_default_str();
  orc->add_option("--alpha", oracle.alpha, "Example parameter alpha")->capture_default_str();
  orc->add_option("--delta", oracle.delta, "Example parameter delta")->capture_default_str();
  orc->add_option("--mc-samples", oracle.mc_samples, "Monte Carlo samples")->capture_default_str();
  orc->add_option("--seed", oracle.seed, "Seed")->capture_default_str();
  orc->add_option("--ridge", oracle.ridge, "Optimal-projection ridge, number or auto")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sw) return cmd_sweep(sweep, out);
    if (*su) return cmd_summarize(records_path, group_by, baseline, summary_out, out);
    if (*ev) return cmd_eval(eval, out, err);
    if (*orc) return cmd_oracle(oracle, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace projsep::cli
