#pragma once

#include <string>
#include <vector>

#include "netalg/estimators.hpp"
#include "netalg/layer_algebra.hpp"
#include "netalg/power_fit.hpp"

namespace netalg {

/// {gcip, gsip, log2_gcc, gsc, log2_gwc, equivalent_layers, params,
///  complexity_mode, power_merge}; non-finite log2_gwc renders as null.
std::string global_metrics_to_json(const GlobalMetrics& m);

/// Curve table as CSV with header
/// node_id,depth,kind,p_local,c_local,P_cum,log2_C_cum.
std::string curves_to_csv(const std::vector<CurveRow>& rows);

std::string estimate_to_json(const EstimateResult& r);

/// Box-filter curve as CSV with header K,var_ratio,p_formula.
std::string boxfilter_to_csv(const BoxFilterCurve& curve);

/// Variance sweep as CSV with header input_var,output_var.
std::string variance_sweep_to_csv(const std::vector<VarianceSweepRow>& rows);

std::string fit_to_json(const FitResult& fit);

}  // namespace netalg
