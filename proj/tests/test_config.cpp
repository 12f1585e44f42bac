#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "projsep/config.hpp"
#include "test_support.hpp"

using namespace projsep;
using test_support::kind_of;

namespace {

std::string message_of(const std::string& text) {
  try {
    auto spec = parse_sweep_spec(text);
    spec.config.validate();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(SweepSpec, ParsesIwConfig) {
  const auto spec = parse_sweep_spec(
      "# comment line\n"
      "family = inverse_wishart\n"
      "mode=overlap\n"
      "p=20, 50   # trailing comment\n"
      "q=1,2,5\n"
      "df_ratio=1,1.5,2\n"
      "n_simu=20\n"
      "projections=pca,rp,sparse_rp\n"
      "seed=42\n"
      "workers=4\n"
      "ridge=auto\n");
  const auto& c = spec.config;
  EXPECT_EQ(c.family, SweepFamily::InverseWishart);
  EXPECT_EQ(c.p_grid, (std::vector<int>{20, 50}));
  EXPECT_EQ(c.q_grid, (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(c.df_ratios, (std::vector<double>{1, 1.5, 2}));
  EXPECT_EQ(c.n_simu, 20);
  EXPECT_EQ(c.master_seed, 42u);
  EXPECT_EQ(c.n_workers, 4);
  EXPECT_LT(c.ridge, 0.0);
  EXPECT_NO_THROW(c.validate());
}

TEST(SweepSpec, LatentKeys) {
  const auto spec = parse_sweep_spec(
      "family=latent\np=50\nq=2\nshare=none,q,theta\nmixing=dense,sparse\nsparse_density=0.2\n");
  EXPECT_EQ(spec.config.shares.size(), 3u);
  EXPECT_EQ(spec.config.sparse_mixing, (std::vector<bool>{false, true}));
  EXPECT_EQ(spec.config.sparse_density, 0.2);
}

TEST(SweepSpec, RoundTrip) {
  const auto spec = parse_sweep_spec(
      "family=inverse_wishart\nmode=finite_sample_curve\np=200\nq=5\ndf_ratio=2\n"
      "n=20,40\nn_simu=3\nprojections=pca,emp_pca,emp_bhatt_optimal\nseed=9\n"
      "train_frac=0.6\nmc_samples=5000\nridge=0.001\nqda_ridge=0.01\n");
  const auto text = format_sweep_spec(spec);
  const auto back = parse_sweep_spec(text);
  EXPECT_EQ(format_sweep_spec(back), text);
  EXPECT_EQ(back.config.n_grid, (std::vector<int>{20, 40}));
  EXPECT_EQ(back.config.train_frac, 0.6);
  EXPECT_EQ(back.config.ridge, 0.001);
  EXPECT_EQ(back.config.qda_ridge, 0.01);
  EXPECT_EQ(back.config.mode, SweepMode::FiniteSampleCurve);
}

TEST(SweepSpec, UnknownKeyNamesLineAndKey) {
  const auto msg = message_of("family=latent\ncolour=blue\n");
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("colour"), std::string::npos) << msg;
  EXPECT_EQ(kind_of([] { parse_sweep_spec("p 20\n"); }), ErrorKind::ConfigRejected);
}

TEST(SweepSpec, BadValuesNameTheKey) {
  const auto msg = message_of("q=1,two\n");
  EXPECT_NE(msg.find("q"), std::string::npos) << msg;
  EXPECT_NE(message_of("family=gaussian\n").find("family"), std::string::npos);
  EXPECT_EQ(message_of("family=gaussian\n").find("ConfigRejected: family: ConfigRejected"),
            std::string::npos);
}

TEST(SweepSpec, DfRatioBelowOneNamesField) {
  const auto msg = message_of("family=inverse_wishart\np=20\nq=1\ndf_ratio=0.5,2\n");
  EXPECT_NE(msg.find("df_ratio"), std::string::npos) << msg;
  auto spec = parse_sweep_spec("family=inverse_wishart\np=20\nq=1\ndf_ratio=0.5\n");
  EXPECT_EQ(kind_of([&] { spec.config.validate(); }), ErrorKind::DegreesOfFreedomTooSmall);
}

TEST(SweepSpec, LoadsRelativeInputs) {
  const auto dir = std::filesystem::temp_directory_path() / "projsep_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.csv") << "2,0\n0,2\n";
    std::ofstream(dir / "b.csv") << "1,0\n0,1\n";
    std::ofstream(dir / "d.csv") << "x,y,cls\n1,2,a\n3,4,b\n5,6,b\n";
  }
  auto fixed = parse_sweep_spec("family=fixed\nq=1\ncov_1=a.csv\ncov_2=b.csv\n", dir);
  load_inputs(fixed);
  ASSERT_TRUE(fixed.config.fixed_pair.has_value());
  EXPECT_EQ(fixed.config.fixed_pair->first.entries()(0, 0), 2.0);

  auto emp = parse_sweep_spec("family=empirical\np=2\nq=1\ngamma=0\ndataset=d.csv\nlabel_column=cls\n", dir);
  load_inputs(emp);
  ASSERT_TRUE(emp.config.dataset);
  EXPECT_EQ(emp.config.dataset->count(1), 1);

  auto missing = parse_sweep_spec("family=empirical\np=2\nq=1\ngamma=0\ndataset=d.csv\n", dir);
  EXPECT_EQ(kind_of([&] { load_inputs(missing); }), ErrorKind::ConfigRejected);
  std::filesystem::remove_all(dir);
}
