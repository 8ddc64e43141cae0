#include "netalg/report_io.hpp"

#include <cmath>

#include <json.hpp>

#include "netalg/csv.hpp"

namespace netalg {

using ordered_json = nlohmann::ordered_json;

std::string global_metrics_to_json(const GlobalMetrics& m) {
  ordered_json j;
  j["gcip"] = m.gcip;
  j["gsip"] = m.gsip;
  j["log2_gcc"] = m.gcc_log2;
  j["gsc"] = m.gsc;
  if (std::isfinite(m.gwc_log2))
    j["log2_gwc"] = m.gwc_log2;
  else
    j["log2_gwc"] = nullptr;
  j["equivalent_layers"] = m.equivalent_layers;
  j["params"] = m.params;
  j["complexity_mode"] = complexity_mode_name(m.complexity_mode);
  j["power_merge"] = power_merge_name(m.power_merge);
  return j.dump(2) + "\n";
}

std::string curves_to_csv(const std::vector<CurveRow>& rows) {
  std::vector<CsvRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows)
    out.push_back({r.node_id, r.depth, r.kind, r.p_local, r.c_local, r.p_cum, r.c_cum});
  return render_csv({"node_id", "depth", "kind", "p_local", "c_local", "P_cum", "log2_C_cum"},
                    out);
}

std::string estimate_to_json(const EstimateResult& r) {
  ordered_json j;
  j["estimate"] = r.estimate;
  j["std_error"] = r.std_error;
  j["n_samples"] = r.n_samples;
  j["distribution"] = distribution_name(r.distribution);
  j["statistic"] = statistic_name(r.statistic);
  return j.dump(2) + "\n";
}

std::string boxfilter_to_csv(const BoxFilterCurve& curve) {
  std::vector<CsvRow> rows;
  rows.reserve(curve.size());
  for (const auto& r : curve) rows.push_back({r.k, r.var_ratio, r.p_formula});
  return render_csv({"K", "var_ratio", "p_formula"}, rows);
}

std::string variance_sweep_to_csv(const std::vector<VarianceSweepRow>& rows) {
  std::vector<CsvRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back({r.input_var, r.output_var});
  return render_csv({"input_var", "output_var"}, out);
}

std::string fit_to_json(const FitResult& fit) {
  ordered_json j;
  j["a"] = fit.a;
  j["b"] = fit.b;
  j["r2"] = fit.r2;
  j["n_points"] = fit.n_points;
  j["x_metric"] = fit.x_metric;
  j["y_metric"] = fit.y_metric;
  return j.dump(2) + "\n";
}

}  // namespace netalg
