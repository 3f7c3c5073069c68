#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "secmimo/cli.hpp"
#include "secmimo/experiments.hpp"

using namespace secmimo;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("metrics subcommand reproduces the optimal sparsity") {
  CliRun r = cli({"metrics", "--eta", "0.1", "--n-t", "512"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho_star = 0.323183") != std::string::npos);
  CHECK(r.out.find("l_t_star = 165") != std::string::npos);
}

TEST_CASE("validate subcommand exit codes") {
  CHECK(cli({"validate"}).code == 0);
  CHECK(cli({"validate"}).out == "ok\n");

  CliRun bad = cli({"validate", "--set", "m_t=10", "--set", "l_t=4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("m_t <= l_t") != std::string::npos);

  CliRun unknown = cli({"validate", "--set", "bogus=1"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("bogus") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"rate", "--no-such-flag"}).code == 1);
  CHECK(cli({"sweep"}).code == 1);  // --grid is required
  CHECK(cli({"figure"}).code == 1);
}

TEST_CASE("unsupported regimes exit 3") {
  CliRun r = cli({"rate", "--method", "theorem1", "--set", "n_t=512",
                  "--set", "n_r=512", "--set", "n_e=512", "--set", "l_t=496",
                  "--set", "l_r=496", "--set", "l_e=496"});
  CHECK(r.code == 3);
  CHECK(r.err.find("unsupported regime") != std::string::npos);
}

TEST_CASE("rate subcommand with dB snr equals explicit linear power") {
  CliRun db = cli({"rate", "--method", "theorem1", "--snr", "10db"});
  CliRun lin = cli({"rate", "--method", "theorem1", "--snr", "10"});
  CliRun pw = cli({"rate", "--method", "theorem1", "--power", "10"});
  CHECK(db.code == 0);
  CHECK(db.out == lin.out);
  CHECK(db.out == pw.out);
  CHECK(db.out.find("r_s = ") != std::string::npos);
}

TEST_CASE("monte carlo rate runs are reproducible") {
  std::vector<std::string> args{"rate",  "--method", "monte-carlo",
                                "--trials", "30",    "--seed", "4",
                                "--workers", "2"};
  CliRun a = cli(args);
  CliRun b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("std_err = ") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
  CliRun r = cli({"bounds", "--n-t", "512", "--n-r", "512", "--n-e", "512",
                  "--l-t", "165", "--l-r", "165", "--l-e", "165"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bound_low = ") != std::string::npos);
  CHECK(r.out.find("bound_high = ") != std::string::npos);
}

TEST_CASE("leakage subcommand") {
  CliRun r = cli({"leakage", "--trials", "200", "--seed", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("an_to_bob = ") != std::string::npos);
  CHECK(r.out.find("info_to_eve_mc = ") != std::string::npos);
}

TEST_CASE("config file loading with overrides") {
  const std::string path = "cli_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# test\nn_t=64\nn_r=64\nn_e=64\nl_t=16\nl_r=16\nl_e=16\n";
  }
  CliRun r = cli({"validate", "--config", path, "--set", "phi=0.7"});
  CHECK(r.code == 0);
  CliRun missing = cli({"validate", "--config", "no_such_file.cfg"});
  CHECK(missing.code == 2);
  std::remove(path.c_str());
}

TEST_CASE("sweep subcommand writes CSV to stdout") {
  CliRun r = cli({"sweep", "--axis", "l_t", "--grid", "28,48",
                  "--methods", "theorem1"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "# ");
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 4);  // meta + header + 2 rows
}

TEST_CASE("sweep grid syntax lo:step:hi") {
  CliRun r = cli({"sweep", "--axis", "snr_db", "--grid", "0:10:20",
                  "--methods", "theorem1"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 5);
  CliRun bad = cli({"sweep", "--axis", "snr_db", "--grid", "20:5:0",
                    "--methods", "theorem1"});
  CHECK(bad.code == 2);
}

TEST_CASE("figure subcommand matches the library preset byte-for-byte") {
  const std::string path = "cli_test_fig3.tmp";
  CliRun r = cli({"figure", "fig3", "--trials", "2", "--seed", "7",
                  "--workers", "1", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path, std::ios::binary);
  std::stringstream got;
  got << f.rdbuf();
  CHECK(got.str() == to_csv(figure_preset("fig3", 2, 7, 1)));
  std::remove(path.c_str());
}

TEST_CASE("figure --list names every preset") {
  CliRun r = cli({"figure", "--list"});
  CHECK(r.code == 0);
  for (const auto& n : figure_names())
    CHECK(r.out.find(n) != std::string::npos);
}

TEST_CASE("help exits 0") {
  CHECK(cli({"--help"}).code == 0);
}
