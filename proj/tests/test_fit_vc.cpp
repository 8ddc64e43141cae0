#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "netalg/csv.hpp"
#include "netalg/errors.hpp"
#include "netalg/power_fit.hpp"
#include "netalg/vc_bound.hpp"

using namespace netalg;
using doctest::Approx;

TEST_CASE("fit: exact recovery of a noiseless power law") {
  std::vector<FitPoint> points;
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 40.0, 100.0})
    points.push_back({x, 2.0 * std::pow(x, 0.5)});
  const auto fit = fit_power_law(points);
  CHECK(fit.a == Approx(2.0).epsilon(1e-9));
  CHECK(fit.b == Approx(0.5).epsilon(1e-9));
  CHECK(fit.r2 >= 1.0 - 1e-9);
  CHECK(fit.n_points == 7);
}

TEST_CASE("fit: an outlier lowers r2") {
  std::vector<FitPoint> clean;
  for (double x : {1.0, 2.0, 4.0, 8.0, 16.0}) clean.push_back({x, 3.0 * std::pow(x, 1.5)});
  auto noisy = clean;
  noisy.push_back({32.0, 1.0});  // far off the line
  CHECK(fit_power_law(noisy).r2 < fit_power_law(clean).r2);
}

TEST_CASE("fit: error paths") {
  CHECK_THROWS_AS(fit_power_law({{1.0, 1.0}, {2.0, 2.0}}), NumericError);
  CHECK_THROWS_AS(fit_power_law({{1.0, 1.0}, {2.0, -2.0}, {3.0, 3.0}}), NumericError);
  CHECK_THROWS_AS(fit_power_law({{0.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}}), NumericError);
  // degenerate x variance
  CHECK_THROWS_AS(fit_power_law({{2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0}}), NumericError);
}

TEST_CASE("fit: log-x entry point matches the linear-domain fit") {
  std::vector<FitPoint> points;
  std::vector<double> ln_x, y;
  for (double x : {1.0, 3.0, 9.0, 27.0}) {
    const double yy = 0.7 * std::pow(x, 1.2);
    points.push_back({x, yy});
    ln_x.push_back(std::log(x));
    y.push_back(yy);
  }
  const auto a = fit_power_law(points);
  const auto b = fit_power_law_logx(ln_x, y);
  CHECK(a.a == Approx(b.a).epsilon(1e-12));
  CHECK(a.b == Approx(b.b).epsilon(1e-12));
}

TEST_CASE("spearman: monotone, anti-monotone, ties") {
  CHECK(spearman({1, 2, 3, 4}, {10, 20, 30, 40}) == Approx(1.0));
  CHECK(spearman({1, 2, 3, 4}, {9, 7, 5, 3}) == Approx(-1.0));
  CHECK(spearman({1, 2, 3, 4, 5}, {1, 1, 2, 2, 3}) > 0.9);
  CHECK_THROWS_AS(spearman({1, 1, 1}, {1, 2, 3}), NumericError);
}

TEST_CASE("vc bound: worked values") {
  CHECK(vc_bound(2, 1) == Approx(2.0).epsilon(1e-12));
  // MLP 784-128-10 has 101,770 weights over 2 layers
  CHECK(vc_bound(101770, 2) == Approx(101770.0 * 2.0 * std::log2(101770.0)).epsilon(1e-12));
  CHECK(vc_bound(101770, 2) == Approx(3.386e6).epsilon(1e-3));
  CHECK_THROWS_AS(vc_bound(1, 1), NumericError);
  CHECK_THROWS_AS(vc_bound(8, 0), NumericError);
}

TEST_CASE("csv: header-only, quoting, 17-digit floats, determinism") {
  CHECK(render_csv({"a", "b"}, {}) == "a,b\n");
  const auto text = render_csv({"x", "y"}, {{std::string("he,llo"), 0.1}});
  CHECK(text == "x,y\n\"he,llo\",0.10000000000000001\n");
  CHECK_THROWS_AS(render_csv({"one"}, {{1.0, 2.0}}), NumericError);

  const std::vector<CsvRow> rows = {{1, 2.5}, {2, 1.0 / 3.0}};
  CHECK(render_csv({"k", "v"}, rows) == render_csv({"k", "v"}, rows));
  // 17 significant digits round-trip exactly
  const CsvCell cell(1.0 / 3.0);
  CHECK(std::stod(cell.text) == 1.0 / 3.0);
}

TEST_CASE("csv: export writes the rendered bytes") {
  const std::string path = "netalg_export_test.csv";
  export_csv({"k", "v"}, {{4, 0.25}}, path);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "k,v\n4,0.25\n");
  CHECK_THROWS_AS(export_csv({"k"}, {}, "no_such_dir/x.csv"), NumericError);
}
