#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "projsep/fixtures.hpp"
#include "projsep/generators.hpp"
#include "projsep/sweep.hpp"

using namespace projsep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("projsep_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// Value of `key=` on the output line starting with `name`.
double value_of(const std::string& out, const std::string& name, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(name + " ", 0) != 0) continue;
    const auto pos = line.find(key + "=");
    if (pos == std::string::npos) continue;
    return std::stod(line.substr(pos + key.size() + 1));
  }
  ADD_FAILURE() << "no " << name << " " << key << " in:\n" << out;
  return NAN;
}

/// Writes a labelled CSV with class sizes n1 and n2 drawn from (cov_1, cov_2).
void write_dataset(const std::filesystem::path& path, const CovariancePair& pair, int n1, int n2,
                   std::uint64_t seed) {
  RngStream rng(seed, {});
  auto a = rng.fork(0);
  auto b = rng.fork(1);
  const int p = pair.first.dim();
  const Matrix x1 = sample_gaussian(Vector::Zero(p), pair.first, n1, a);
  const Matrix x2 = sample_gaussian(Vector::Zero(p), pair.second, n2, b);
  std::ofstream out(path);
  for (int j = 0; j < p; ++j) out << "g" << j << ",";
  out << "group\n";
  out.precision(17);
  for (const auto& [x, label] : {std::pair{&x1, "tumor"}, std::pair{&x2, "normal"}}) {
    for (int i = 0; i < x->rows(); ++i) {
      for (int j = 0; j < p; ++j) out << (*x)(i, j) << ",";
      out << label << "\n";
    }
  }
}

void write_config(const std::filesystem::path& path, const std::string& body) {
  std::ofstream(path) << body;
}

const char* kSmallIw =
    "family=inverse_wishart\nmode=overlap\np=10,15\nq=1,3\ndf_ratio=1,2\nn_simu=4\n"
    "projections=pca,rp,sparse_rp\nseed=1\nworkers=2\n";

}  // namespace

TEST(Cli, NoSubcommandOrUnknownFlagIsUsageError) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"oracle", "example2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, HelpListsFlags) {
  const auto r = run({"sweep", "--help"});
  EXPECT_EQ(r.code, 0);
  const auto text = r.out + r.err;
  for (const char* flag : {"--config", "--seed", "--workers", "--out", "--resume"})
    EXPECT_NE(text.find(flag), std::string::npos) << flag;
  const auto top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  for (const char* cmd : {"sweep", "summarize", "eval", "oracle"})
    EXPECT_NE((top.out + top.err).find(cmd), std::string::npos) << cmd;
}

TEST(Cli, OracleDisjointSubspace) {
  const auto r = run({"oracle", "example2", "--q", "2", "--projections", "pca,bhatt_optimal"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(value_of(r.out, "pca", "overlap"), 0.5);
  EXPECT_NEAR(value_of(r.out, "bhatt_optimal", "overlap"), 0.4, 1e-12);
  const double risk = value_of(r.out, "pca", "mc_risk");
  const double se = value_of(r.out, "pca", "se");
  EXPECT_NEAR(risk, 0.5, 3 * se);
}

TEST(Cli, OracleSharedSubspace) {
  const auto r = run({"oracle", "example1", "--q", "1", "--projections", "pca"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out, "pca", "overlap"), 0.447213595499958, 1e-12);
}

TEST(Cli, OracleFromMatrixFiles) {
  const auto dir = scratch("oracle_files");
  std::ofstream(dir / "a.csv") << "1,0\n0,1\n";
  std::ofstream(dir / "b.csv") << "4,0\n0,1\n";
  const auto r = run({"oracle", (dir / "a.csv").string() + ":" + (dir / "b.csv").string(), "--q", "1",
                      "--projections", "bhatt_optimal", "--mc-samples", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out, "bhatt_optimal", "overlap"), 0.447213595499958, 1e-12);
  EXPECT_EQ(run({"oracle", "nosuchmodel"}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepTwiceIsIdentical) {
  const auto dir = scratch("sweep_twice");
  write_config(dir / "iw.cfg", kSmallIw);
  const auto a = run({"sweep", "--config", (dir / "iw.cfg").string(), "--seed", "7", "--out",
                      (dir / "a").string()});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto b = run({"sweep", "--config", (dir / "iw.cfg").string(), "--seed", "7", "--out",
                      (dir / "b").string(), "--workers", "1"});
  ASSERT_EQ(b.code, 0) << b.err;
  const auto ra = slurp(dir / "a" / "records.csv");
  EXPECT_EQ(ra.substr(0, ra.find('\n')), kRecordHeader);
  EXPECT_EQ(ra, slurp(dir / "b" / "records.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "a" / "manifest.cfg"));
  EXPECT_NE(a.out.find("records"), std::string::npos);

  // The manifest alone reproduces the records.
  const auto c = run({"sweep", "--config", (dir / "a" / "manifest.cfg").string(), "--out",
                      (dir / "c").string()});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(ra, slurp(dir / "c" / "records.csv"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepOverrides) {
  const auto dir = scratch("sweep_overrides");
  write_config(dir / "iw.cfg", kSmallIw);
  const auto r = run({"sweep", "--config", (dir / "iw.cfg").string(), "--q", "2", "--p", "10",
                      "--projections", "pca,bhatt_optimal", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto records = read_records(dir / "records.csv");
  EXPECT_EQ(records.size(), 4u * 4u * 2u);  // 4 df cells, 4 replicates, 2 projections
  for (const auto& rec : records) EXPECT_EQ(rec.q, 2);
  const auto manifest = slurp(dir / "manifest.cfg");
  EXPECT_NE(manifest.find("q=2\n"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepRejectsSmallDfWithFieldName) {
  const auto dir = scratch("sweep_bad_df");
  write_config(dir / "bad.cfg", "family=inverse_wishart\np=10\nq=1\ndf_ratio=0.5\n");
  const auto r = run({"sweep", "--config", (dir / "bad.cfg").string(), "--out", dir.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("df_ratio"), std::string::npos) << r.err;
  write_config(dir / "typo.cfg", "family=inverse_wishart\npp=10\n");
  EXPECT_EQ(run({"sweep", "--config", (dir / "typo.cfg").string(), "--out", dir.string()}).code, 2);
  EXPECT_EQ(run({"sweep", "--config", (dir / "missing.cfg").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepUnwritableOutput) {
  const auto dir = scratch("sweep_sink");
  write_config(dir / "iw.cfg", kSmallIw);
  // A regular file where the output directory should be.
  std::ofstream(dir / "blocked") << "x";
  const auto r = run({"sweep", "--config", (dir / "iw.cfg").string(), "--out", (dir / "blocked").string()});
  EXPECT_EQ(r.code, 3) << r.err;
  std::filesystem::remove_all(dir);
}

TEST(Cli, Summarize) {
  const auto dir = scratch("summarize");
  write_config(dir / "iw.cfg", kSmallIw);
  ASSERT_EQ(run({"sweep", "--config", (dir / "iw.cfg").string(), "--out", dir.string()}).code, 0);
  const auto r = run({"summarize", (dir / "records.csv").string(), "--group-by", "p,q"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("regret_rp"), std::string::npos);
  const auto csv = slurp(dir / "summary.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,q,mean_pca,regret_rp,pos_rp,regret_sparse_rp,pos_sparse_rp,n,failed");
  // Four (p, q) groups plus the header.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(run({"summarize", (dir / "records.csv").string(), "--group-by", "colour"}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, EvalSeparatedClasses) {
  const auto dir = scratch("eval_sep");
  const int p = 20, q = 5;
  write_dataset(dir / "data.csv", example_shared_subspace(p, q, 16, 1), 300, 600, 41);
  const auto r = run({"eval", (dir / "data.csv").string(), "--label-column", "group", "--q", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(value_of(r.out, "pca", "oos_loss"), 0.2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, EvalFullOverlapIsCoinFlip) {
  const auto dir = scratch("eval_gamma1");
  const int p = 20;
  write_dataset(dir / "data.csv", example_shared_subspace(p, 5, 16, 1), 300, 600, 42);
  const auto r = run({"eval", (dir / "data.csv").string(), "--label-column", "group", "--q", "3",
                      "--gamma", "1", "--projections", "pca,rp,sparse_rp,bhatt_optimal"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* name : {"pca", "rp", "sparse_rp", "bhatt_optimal"}) {
    const double loss = value_of(r.out, name, "oos_loss");
    // 180 validation rows; the binomial SE at 0.5 is about 0.037.
    EXPECT_NEAR(loss, 0.5, 3 * std::sqrt(0.25 / 180)) << name;
  }
  std::filesystem::remove_all(dir);
}

TEST(Cli, EvalSingularWhenQExceedsClassSize) {
  const auto dir = scratch("eval_singular");
  write_dataset(dir / "data.csv", example_shared_subspace(10, 2, 4, 1), 6, 12, 43);
  const auto r = run({"eval", (dir / "data.csv").string(), "--label-column", "group", "--q", "5",
                      "--projections", "pca"});
  EXPECT_EQ(r.code, 4) << r.out << r.err;
  EXPECT_NE(r.out.find("singular"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, EvalIngestionErrors) {
  const auto dir = scratch("eval_bad");
  std::ofstream(dir / "bad.csv") << "a,b,group\n1,2,x\n3,nan,y\n";
  const auto r = run({"eval", (dir / "bad.csv").string(), "--label-column", "group"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"eval", (dir / "bad.csv").string(), "--label-column", "nope"}).code, 2);
  std::filesystem::remove_all(dir);
}
