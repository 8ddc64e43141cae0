// netalg: architecture-intrinsic power/complexity analysis of network
// graphs. Subcommands: analyze, compare, zoo build, estimate, fit, vc.
//
// Exit codes: 0 success, 2 I/O or lookup failure, 3 graph validation
// failure, 4 numeric failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "netalg/csv.hpp"
#include "netalg/errors.hpp"
#include "netalg/estimators.hpp"
#include "netalg/graph_json.hpp"
#include "netalg/layer_algebra.hpp"
#include "netalg/model_zoo.hpp"
#include "netalg/power_fit.hpp"
#include "netalg/report_io.hpp"
#include "netalg/shape_inference.hpp"
#include "netalg/vc_bound.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitIo, "cannot open '" + path + "'"};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw CliError{kExitIo, "cannot write '" + path + "'"};
}

struct AnalysisOptions {
  std::string complexity_mode = "multiplicative";
  std::string power_merge = "max";
  std::string constants_path;

  netalg::PropagationConfig config() const {
    return {netalg::complexity_mode_from_name(complexity_mode),
            netalg::power_merge_from_name(power_merge)};
  }

  netalg::ActivationConstants constants() const {
    if (constants_path.empty()) return netalg::ActivationConstants::defaults();
    return netalg::ActivationConstants::from_json(read_file(constants_path));
  }
};

void add_analysis_flags(CLI::App* cmd, AnalysisOptions& opts) {
  cmd->add_option("--complexity-mode", opts.complexity_mode, "multiplicative|additive")
      ->check(CLI::IsMember({"multiplicative", "additive"}));
  cmd->add_option("--power-merge", opts.power_merge, "max|sum")
      ->check(CLI::IsMember({"max", "sum"}));
  cmd->add_option("--constants", opts.constants_path,
                  "JSON file overriding activation constants");
}

netalg::NetworkGraph load_and_check(const std::string& path) {
  netalg::NetworkGraph g;
  try {
    g = netalg::parse_graph(read_file(path));
  } catch (const netalg::ParseError& e) {
    throw CliError{kExitValidation, std::string("parse error: ") + e.what()};
  }
  const auto report = netalg::validate_graph(g);
  if (!report.ok()) {
    std::string msg = "graph validation failed:";
    for (const auto& v : report.violations)
      msg += "\n  [" + netalg::violation_kind_name(v.kind) + "] " +
             (v.node_id.empty() ? "" : v.node_id + ": ") + v.detail;
    throw CliError{kExitValidation, msg};
  }
  try {
    return netalg::infer_shapes(g);
  } catch (const netalg::ShapeError& e) {
    throw CliError{kExitValidation, std::string("shape error: ") + e.what()};
  }
}

int run_analyze(const std::string& path, const AnalysisOptions& opts,
                const std::string& out_csv) {
  const auto g = load_and_check(path);
  const auto config = opts.config();
  const auto constants = opts.constants();
  std::cout << netalg::global_metrics_to_json(
      netalg::global_metrics(g, config, constants));
  if (!out_csv.empty())
    write_file(out_csv, netalg::curves_to_csv(netalg::cumulative_curves(g, config, constants)));
  return kExitOk;
}

int run_compare(const std::vector<std::string>& names, const AnalysisOptions& opts,
                const std::string& format) {
  const auto config = opts.config();
  const auto constants = opts.constants();

  std::vector<netalg::CsvRow> rows;
  for (const auto& name : names) {
    netalg::NetworkGraph g;
    try {
      g = netalg::infer_shapes(netalg::build_by_name(name));
    } catch (const netalg::GraphError& e) {
      throw CliError{kExitIo, e.what()};
    }
    const auto m = netalg::global_metrics(g, config, constants);
    rows.push_back({name, m.gcip, m.gcc_log2, m.gsc, m.gwc_log2,
                    static_cast<long long>(m.params)});
  }
  const std::vector<std::string> header = {"model", "gcip", "log2_gcc", "gsc", "log2_gwc",
                                           "params"};
  if (format == "csv") {
    std::cout << netalg::render_csv(header, rows);
  } else if (format == "json") {
    std::string out = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out += r ? ",\n " : "\n ";
      out += "{\"model\": \"" + rows[r][0].text + "\"";
      for (std::size_t c = 1; c < header.size(); ++c)
        out += ", \"" + header[c] + "\": " + rows[r][c].text;
      out += "}";
    }
    out += "\n]\n";
    std::cout << out;
  } else {
    // Aligned text.
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], r[c].text.size());
    }
    auto print_row = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        std::printf("%-*s%s", static_cast<int>(width[c]), cells[c].c_str(),
                    c + 1 == cells.size() ? "\n" : "  ");
    };
    print_row(header);
    for (const auto& r : rows) {
      std::vector<std::string> cells;
      for (const auto& cell : r) cells.push_back(cell.text);
      print_row(cells);
    }
  }
  return kExitOk;
}

int run_zoo_build(const std::string& name, std::string out_path) {
  netalg::NetworkGraph g;
  try {
    g = netalg::build_by_name(name);
  } catch (const netalg::GraphError& e) {
    throw CliError{kExitIo, e.what()};
  }
  if (out_path.empty()) out_path = name + ".json";
  write_file(out_path, netalg::serialize_graph(g));
  std::cerr << "wrote " << out_path << "\n";
  return kExitOk;
}

int run_fit(const std::string& x_metric, const std::string& y_metric,
            const std::string& points_path, const AnalysisOptions& opts) {
  netalg::FitResult fit;
  if (!points_path.empty()) {
    // Generic mode: CSV with header x,y.
    std::ifstream f(points_path);
    if (!f) throw CliError{kExitIo, "cannot open '" + points_path + "'"};
    std::string line;
    std::getline(f, line);
    std::vector<netalg::FitPoint> points;
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos)
        throw CliError{kExitNumeric, "bad points row: " + line};
      points.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    fit = netalg::fit_power_law(points);
    fit.x_metric = "x";
    fit.y_metric = "y";
  } else {
    // Manifest mode over the builder-backed families.
    const auto config = opts.config();
    const auto constants = opts.constants();
    std::vector<double> ln_x, y;
    for (const auto& [zoo_name, manifest_name] : netalg::builder_manifest_pairs()) {
      const netalg::ModelRecord* record = nullptr;
      for (const auto& r : netalg::load_manifest())
        if (r.name == manifest_name && r.source == "table1") record = &r;
      if (!record) continue;
      const auto acc = y_metric == "top5" ? record->top5 : record->top1;
      if (!acc) continue;
      const auto g = netalg::infer_shapes(netalg::build_by_name(zoo_name));
      const auto m = netalg::global_metrics(g, config, constants);
      double lx = 0.0;
      if (x_metric == "log2_gwc")
        lx = m.gwc_log2 * std::numbers::ln2;
      else if (x_metric == "log2_gcc")
        lx = m.gcc_log2 * std::numbers::ln2;
      else
        lx = std::log(m.gsc);
      ln_x.push_back(lx);
      y.push_back(*acc);
    }
    fit = netalg::fit_power_law_logx(ln_x, y);
    fit.x_metric = x_metric;
    fit.y_metric = y_metric;
  }
  std::cout << netalg::fit_to_json(fit);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"architecture-intrinsic power and complexity metrics"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path, analyze_out;
  AnalysisOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "analyze a graph JSON file");
  analyze->add_option("path", analyze_path, "graph JSON file")->required();
  analyze->add_option("--out", analyze_out, "write the cumulative-curve CSV here");
  add_analysis_flags(analyze, analyze_opts);

  // compare
  std::vector<std::string> compare_names;
  std::string compare_format = "text";
  AnalysisOptions compare_opts;
  auto* compare = app.add_subcommand("compare", "compare zoo models");
  compare->add_option("models", compare_names, "zoo model names")->required();
  compare->add_option("--format", compare_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_analysis_flags(compare, compare_opts);

  // zoo build
  auto* zoo = app.add_subcommand("zoo", "model zoo utilities");
  zoo->require_subcommand(1);
  std::string zoo_name, zoo_out;
  auto* zoo_build = zoo->add_subcommand("build", "write a zoo model as graph JSON");
  zoo_build->add_option("name", zoo_name, "model name, e.g. resnet18")->required();
  zoo_build->add_option("--out", zoo_out, "output path (default <name>.json)");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "data-driven estimators");
  estimate->require_subcommand(1);

  std::string est_fn = "relu", est_dist = "standard_normal", est_stat = "std_ratio", est_out;
  std::int64_t est_n = 1000000;
  std::uint64_t est_seed = 0;
  bool est_sweep = false;
  double sweep_min = 0.1, sweep_max = 5.0;
  int sweep_steps = 50;
  auto* est_act = estimate->add_subcommand("activation", "activation power estimate");
  est_act->add_option("--fn", est_fn, "activation function")->required();
  est_act->add_option("--dist", est_dist, "standard_normal|uniform_sym")
      ->check(CLI::IsMember({"standard_normal", "uniform_sym"}));
  est_act->add_option("--stat", est_stat, "std_ratio|var_ratio")
      ->check(CLI::IsMember({"std_ratio", "var_ratio"}));
  est_act->add_option("--n", est_n, "sample count");
  est_act->add_option("--seed", est_seed, "RNG seed");
  est_act->add_flag("--sweep", est_sweep, "emit an input/output variance sweep CSV instead");
  est_act->add_option("--var-min", sweep_min, "sweep: smallest input variance");
  est_act->add_option("--var-max", sweep_max, "sweep: largest input variance");
  est_act->add_option("--var-steps", sweep_steps, "sweep: grid size");
  est_act->add_option("--out", est_out, "write CSV here instead of stdout");

  int box_len = 15000, box_vectors = 100, box_kmax = 500;
  std::uint64_t box_seed = 0;
  std::string box_out;
  auto* est_box = estimate->add_subcommand("boxfilter", "mean-filter compression curve");
  est_box->add_option("--len", box_len, "vector length");
  est_box->add_option("--vectors", box_vectors, "number of random vectors");
  est_box->add_option("--kmax", box_kmax, "largest filter size");
  est_box->add_option("--seed", box_seed, "RNG seed");
  est_box->add_option("--out", box_out, "write CSV here instead of stdout");

  int soft_len = 15000, soft_trials = 100;
  std::uint64_t soft_seed = 0;
  auto* est_soft = estimate->add_subcommand("softmax", "softmax power estimate");
  est_soft->add_option("--len", soft_len, "vector length");
  est_soft->add_option("--trials", soft_trials, "number of vectors");
  est_soft->add_option("--seed", soft_seed, "RNG seed");

  // fit
  std::string fit_x = "log2_gwc", fit_y = "top1", fit_points;
  AnalysisOptions fit_opts;
  auto* fit = app.add_subcommand("fit", "power-law fit of accuracy vs complexity");
  fit->add_option("--x", fit_x, "x metric")->check(CLI::IsMember({"log2_gwc", "log2_gcc", "gsc"}));
  fit->add_option("--y", fit_y, "y metric")->check(CLI::IsMember({"top1", "top5"}));
  fit->add_option("--points", fit_points, "fit a generic x,y CSV instead of the manifest");
  add_analysis_flags(fit, fit_opts);

  // vc
  std::int64_t vc_weights = 0, vc_layers = 0;
  auto* vc = app.add_subcommand("vc", "VC-dimension bound W*L*log2(W)");
  vc->add_option("--weights", vc_weights, "number of weights W")->required();
  vc->add_option("--layers", vc_layers, "number of layers L")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_path, analyze_opts, analyze_out);
    if (*compare) return run_compare(compare_names, compare_opts, compare_format);
    if (*zoo_build) return run_zoo_build(zoo_name, zoo_out);
    if (*est_act) {
      const auto fn = netalg::activation_from_name(est_fn);
      const auto dist = netalg::distribution_from_name(est_dist);
      if (est_sweep) {
        const auto rows = netalg::activation_variance_sweep(fn, dist, sweep_min, sweep_max,
                                                            sweep_steps, est_n, est_seed);
        const auto csv = netalg::variance_sweep_to_csv(rows);
        if (est_out.empty())
          std::cout << csv;
        else
          write_file(est_out, csv);
      } else {
        const auto r = netalg::estimate_activation_power(
            fn, dist, netalg::statistic_from_name(est_stat), est_n, est_seed);
        std::cout << netalg::estimate_to_json(r);
      }
      return kExitOk;
    }
    if (*est_box) {
      const auto curve = netalg::boxfilter_experiment(box_len, box_vectors, box_kmax, box_seed);
      const auto csv = netalg::boxfilter_to_csv(curve);
      if (box_out.empty())
        std::cout << csv;
      else
        write_file(box_out, csv);
      return kExitOk;
    }
    if (*est_soft) {
      std::cout << netalg::estimate_to_json(
          netalg::softmax_power_estimate(soft_len, soft_trials, soft_seed));
      return kExitOk;
    }
    if (*fit) return run_fit(fit_x, fit_y, fit_points, fit_opts);
    if (*vc) {
      std::cout << netalg::CsvCell(netalg::vc_bound(vc_weights, vc_layers)).text << "\n";
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const netalg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const netalg::ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const netalg::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const netalg::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
