#include "netalg/power_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netalg/errors.hpp"

namespace netalg {
namespace {

FitResult fit_loglog(const std::vector<double>& lx, const std::vector<double>& ly) {
  const auto n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 0.0) throw NumericError("fit_power_law: degenerate x variance");

  FitResult fit;
  fit.b = sxy / sxx;
  fit.a = std::exp(my - fit.b * mx);
  fit.n_points = static_cast<std::int64_t>(lx.size());
  if (syy <= 0.0) {
    fit.r2 = 1.0;  // all y equal; the flat line is exact
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      const double pred = my + fit.b * (lx[i] - mx);
      ss_res += (ly[i] - pred) * (ly[i] - pred);
    }
    fit.r2 = 1.0 - ss_res / syy;
  }
  return fit;
}

}  // namespace

FitResult fit_power_law(const std::vector<FitPoint>& points) {
  if (points.size() < 3) throw NumericError("fit_power_law needs at least 3 points");
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0))
      throw NumericError("fit_power_law requires strictly positive coordinates");
    lx.push_back(std::log(p.x));
    ly.push_back(std::log(p.y));
  }
  return fit_loglog(lx, ly);
}

FitResult fit_power_law_logx(const std::vector<double>& ln_x, const std::vector<double>& y) {
  if (ln_x.size() != y.size()) throw NumericError("fit_power_law_logx: size mismatch");
  if (ln_x.size() < 3) throw NumericError("fit_power_law needs at least 3 points");
  std::vector<double> ly;
  ly.reserve(y.size());
  for (double v : y) {
    if (!(v > 0.0)) throw NumericError("fit_power_law requires strictly positive coordinates");
    ly.push_back(std::log(v));
  }
  return fit_loglog(ln_x, ly);
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

  std::vector<double> r(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw NumericError("spearman needs paired data");
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
    sxy += (rx[i] - mx) * (ry[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) throw NumericError("spearman: constant input");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace netalg
