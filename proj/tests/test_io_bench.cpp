#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hvss/bench.hpp"
#include "hvss/fronts.hpp"
#include "hvss/io.hpp"
#include "hvss/rng.hpp"

using namespace hvss;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("hvss_io_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("points csv round-trips coordinates exactly") {
  const fs::path dir = temp_dir();
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 2 + rng.below(6);
    const std::size_t n = rng.below(40);
    std::vector<double> rows(n * d);
    for (double& v : rows) {
      v = rng.uniform01();
      if (rng.below(8) == 0) v *= 1e-300;  // exercise extreme exponents
      if (rng.below(8) == 0) v *= 1e300;
    }
    const fs::path file = dir / ("t" + std::to_string(trial) + ".csv");
    io::write_points_csv(file, PointsView{rows.data(), n, d});
    const io::PointTable back = io::read_points_csv(file);
    REQUIRE(back.count == n);
    REQUIRE(back.dim == d);
    CHECK(std::memcmp(back.rows.data(), rows.data(),
                      rows.size() * sizeof(double)) == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("csv reader reports malformed input with line numbers") {
  const fs::path dir = temp_dir();
  const fs::path file = dir / "bad.csv";

  {
    std::ofstream out(file);
    out << "f1,f2\n0.5,0.5\nnot-a-number,0.1\n";
  }
  CHECK_THROWS_WITH_AS(io::read_points_csv(file),
                       doctest::Contains(":3"), std::runtime_error);

  {
    std::ofstream out(file);
    out << "f1,f2\n0.5\n";
  }
  CHECK_THROWS_WITH_AS(io::read_points_csv(file),
                       doctest::Contains(":2"), std::runtime_error);

  {
    std::ofstream out(file);
    out << "x,y\n0.5,0.5\n";
  }
  CHECK_THROWS_AS(io::read_points_csv(file), std::runtime_error);

  fs::remove_all(dir);
}

TEST_CASE("empty table reads back as a header-only file") {
  const fs::path dir = temp_dir();
  const fs::path file = dir / "empty.csv";
  io::write_points_csv(file, PointsView{nullptr, 0, 3});
  const io::PointTable back = io::read_points_csv(file);
  CHECK(back.count == 0);
  CHECK(back.dim == 3);
  fs::remove_all(dir);
}

TEST_CASE("index digest is stable and order-sensitive") {
  const std::vector<std::size_t> a{1, 2, 3};
  const std::vector<std::size_t> b{3, 2, 1};
  CHECK(bench::index_digest(a) == bench::index_digest(a));
  CHECK(bench::index_digest(a) != bench::index_digest(b));
  CHECK(bench::index_digest({}) == 1469598103934665603ull);
}

TEST_CASE("bench matrix has one record per cell and algorithm") {
  bench::BenchConfig cfg;
  cfg.shapes = {FrontShape::Spherical};
  cfg.dims = {3, 4, 5};
  cfg.pool_sizes = {60, 100};
  cfg.k = 10;
  cfg.repeats = 5;
  cfg.algorithms = {Algorithm::Greedy, Algorithm::GreedyUpdate,
                    Algorithm::LazyGreedy};
  cfg.seed_base = 11;

  const auto outcome = bench::run(cfg);
  CHECK(outcome.records.size() == 90);  // 1 * 3 * 2 * 5 * 3
  CHECK(outcome.all_consistent);
  for (const auto& rec : outcome.records) {
    CHECK(rec.seconds > 0.0);
    CHECK(rec.hv > 0.0);
    CHECK(rec.digest_ok);
  }
}

TEST_CASE("single-cell bench config") {
  bench::BenchConfig cfg;
  cfg.shapes = {FrontShape::InvertedSpherical};
  cfg.dims = {3};
  cfg.pool_sizes = {40};
  cfg.k = 5;
  cfg.repeats = 1;
  cfg.algorithms = {Algorithm::Greedy};
  cfg.seed_base = 3;
  const auto outcome = bench::run(cfg);
  REQUIRE(outcome.records.size() == 1);
  CHECK(outcome.records[0].digest != 0);
  CHECK(outcome.all_consistent);
}

TEST_CASE("bench records and summary serialize with the pinned schema") {
  const fs::path dir = temp_dir();
  bench::BenchConfig cfg;
  cfg.shapes = {FrontShape::Spherical, FrontShape::Discontinuous};
  cfg.dims = {3};
  cfg.pool_sizes = {50};
  cfg.k = 6;
  cfg.repeats = 3;
  cfg.algorithms = {Algorithm::Greedy, Algorithm::LazyGreedy};
  cfg.seed_base = 17;

  const auto outcome = bench::run(cfg);
  const fs::path csv = dir / "records.csv";
  bench::write_records_csv(csv, outcome.records);
  bench::write_summary_json(dir / "records.csv.summary.json", cfg, outcome);

  std::ifstream in(csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "algorithm,shape,dim,pool,k,repeat,seconds,hvc_evals,hv,digest");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++lines;
  }
  CHECK(lines == outcome.records.size());

  // Per-cell mean seconds equals the arithmetic mean of its repeats.
  std::ifstream sin(dir / "records.csv.summary.json");
  nlohmann::json summary;
  sin >> summary;
  CHECK(summary.at("all_consistent").get<bool>());
  for (const auto& cell : summary.at("cells")) {
    const std::string alg = cell.at("algorithm");
    const std::string shape = cell.at("shape");
    double total = 0.0;
    std::size_t count = 0;
    for (const auto& rec : outcome.records) {
      if (algorithm_id(rec.algorithm) == alg && shape_id(rec.shape) == shape) {
        total += rec.seconds;
        ++count;
      }
    }
    REQUIRE(count == 3);
    CHECK(cell.at("mean_seconds").get<double>() ==
          doctest::Approx(total / 3.0).epsilon(1e-12));
  }
  fs::remove_all(dir);
}

TEST_CASE("bench config json loads with defaults") {
  const fs::path dir = temp_dir();
  const fs::path file = dir / "cfg.json";
  {
    std::ofstream out(file);
    out << R"({"shapes":["spherical","discontinuous"],"dims":[3,5],
               "pool_sizes":[100],"k":10,"repeats":2,"seed_base":42})";
  }
  const auto cfg = bench::load_config(file);
  CHECK(cfg.shapes.size() == 2);
  CHECK(cfg.dims == std::vector<std::size_t>{3, 5});
  CHECK(cfg.algorithms.size() == 3);  // defaults to all
  CHECK(cfg.reference_value == 1.1);
  CHECK(cfg.seed_base == 42);

  {
    std::ofstream out(file);
    out << R"({"shapes":["weird"],"dims":[3],"pool_sizes":[10],"k":2})";
  }
  CHECK_THROWS_AS(bench::load_config(file), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("bench runs are bitwise repeatable") {
  bench::BenchConfig cfg;
  cfg.shapes = {FrontShape::Spherical, FrontShape::Discontinuous};
  cfg.dims = {3};
  cfg.pool_sizes = {60};
  cfg.k = 8;
  cfg.repeats = 2;
  cfg.algorithms = {Algorithm::Greedy, Algorithm::GreedyUpdate,
                    Algorithm::LazyGreedy};
  cfg.seed_base = 5;

  const auto a = bench::run(cfg);
  const auto b = bench::run(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].digest == b.records[i].digest);
    CHECK(a.records[i].hv == b.records[i].hv);
    CHECK(a.records[i].hvc_evaluations == b.records[i].hvc_evaluations);
  }
}
