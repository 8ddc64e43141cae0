#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netalg/layer_algebra.hpp"
#include "netalg/log2_ops.hpp"
#include "netalg/model_zoo.hpp"
#include "netalg/shape_inference.hpp"
#include "testutil.hpp"

using namespace netalg;
using doctest::Approx;

namespace {

const ActivationConstants& constants() {
  static const auto c = ActivationConstants::defaults();
  return c;
}

GlobalMetrics metrics_of(const NetworkGraph& g, PropagationConfig config = {}) {
  return global_metrics(infer_shapes(g), config, constants());
}

}  // namespace

TEST_CASE("three-layer mlp chain: power product and complexity modes") {
  const auto g = build_mlp({784, 128, 10}, ActivationFn::relu);
  const auto m = metrics_of(g);

  // (128/784) * 0.584 * (10/128)
  CHECK(m.gcip == Approx(7.4489795918367346e-3).epsilon(1e-12));

  const double c1 = dense_metrics(784, 128).c_local;
  const double c2 = 1.713;
  const double c3 = dense_metrics(128, 10).c_local;
  CHECK(m.gcc_log2 == Approx(std::log2(c1) + std::log2(c2) + std::log2(c3)).epsilon(1e-12));
  CHECK(m.gcc_log2 == Approx(8.199).epsilon(1e-3));
  CHECK(m.gsc == Approx(c1 + c2 + c3).epsilon(1e-12));
  CHECK(m.gsc == Approx(28.65).epsilon(1e-3));

  const auto additive = metrics_of(g, {ComplexityMode::additive, PowerMerge::max});
  CHECK(additive.gcc_log2 == additive.gsc);  // chain: additive GCC is the plain sum
  CHECK(additive.gcip == m.gcip);
}

TEST_CASE("all-neutral graph: unit power, zero complexity") {
  auto g = NetworkGraph{"neutral",
                        TensorShape{4},
                        {{"in", layer::Input{}, {}, {}},
                         {"id", layer::Identity{}, {"in"}, {}}}};
  const auto m = metrics_of(g);
  CHECK(m.gcip == 1.0);
  CHECK(m.gcc_log2 == 0.0);
  CHECK(m.gsc == 0.0);
  CHECK(m.gsip == 2.0);
  CHECK(std::isinf(m.gwc_log2));  // gsc == 0 leaves gwc undefined
  CHECK(m.equivalent_layers == 1);
}

TEST_CASE("diamond: duplicated identical branches merge idempotently") {
  auto two_branch = NetworkGraph{
      "dup",
      TensorShape{64},
      {{"in", layer::Input{}, {}, {}},
       {"d0", layer::Dense{32}, {"in"}, {}},
       {"b1", layer::Activation{ActivationFn::relu}, {"d0"}, {}},
       {"b2", layer::Activation{ActivationFn::relu}, {"d0"}, {}},
       {"add", layer::Add{}, {"b1", "b2"}, {}}}};
  auto single = NetworkGraph{"single",
                             TensorShape{64},
                             {{"in", layer::Input{}, {}, {}},
                              {"d0", layer::Dense{32}, {"in"}, {}},
                              {"b1", layer::Activation{ActivationFn::relu}, {"d0"}, {}}}};
  const auto dup = metrics_of(two_branch);
  const auto chain = metrics_of(single);
  CHECK(dup.gcip == chain.gcip);  // max(x, x) = x, Add is neutral

  // complexity merge sums the branches: C = 2 * branch value
  CHECK(dup.gcc_log2 == Approx(chain.gcc_log2 + 1.0).epsilon(1e-12));
}

TEST_CASE("residual block: identity shortcut restores the pre-block power") {
  // branch product < 1, so max picks the shortcut
  auto g = NetworkGraph{
      "res",
      TensorShape{16, 16, 8},
      {{"in", layer::Input{}, {}, {}},
       {"c1", layer::Conv2D{3, 3, 1, Padding::same(), 8, false}, {"in"}, {}},
       {"a1", layer::Activation{ActivationFn::relu}, {"c1"}, {}},
       {"c2", layer::Conv2D{3, 3, 1, Padding::same(), 8, false}, {"a1"}, {}},
       {"sc", layer::Identity{}, {"in"}, {}},
       {"add", layer::Add{}, {"c2", "sc"}, {}}}};
  const auto inferred = infer_shapes(g);
  const auto node_ms = all_node_metrics(inferred, constants());
  const auto p_cum = propagate_power(inferred, node_ms, {});

  const auto idx = node_index(inferred);
  const double branch_product =
      node_ms[idx.at("c1")].p_local * node_ms[idx.at("a1")].p_local * node_ms[idx.at("c2")].p_local;
  CHECK(branch_product < 1.0);
  CHECK(p_cum[idx.at("add")] == p_cum[idx.at("in")]);

  // complexity after the merge: C_before * (1 + branch product of capacities)
  const auto c_cum = propagate_complexity(inferred, node_ms, {});
  const double branch_c = std::log2(node_ms[idx.at("c1")].c_local) +
                          std::log2(node_ms[idx.at("a1")].c_local) +
                          std::log2(node_ms[idx.at("c2")].c_local);
  CHECK(c_cum[idx.at("add")] == Approx(std::log2(1.0 + std::exp2(branch_c))).epsilon(1e-12));
}

TEST_CASE("chain law: random branch-free graphs") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    CAPTURE(seed);
    const auto g = infer_shapes(testutil::random_chain(seed));
    const auto node_ms = all_node_metrics(g, constants());

    double product = 1.0;
    for (const auto& m : node_ms) product *= m.p_local;
    const auto global = global_metrics(g, {}, constants());
    CHECK(global.gcip == Approx(product).epsilon(1e-12));

    const auto additive = global_metrics(g, {ComplexityMode::additive, PowerMerge::max},
                                         constants());
    CHECK(additive.gcc_log2 == additive.gsc);
  }
}

TEST_CASE("fan-out duplicates the cumulative power into each branch") {
  auto g = NetworkGraph{"fan",
                        TensorShape{64},
                        {{"in", layer::Input{}, {}, {}},
                         {"d", layer::Dense{16}, {"in"}, {}},
                         {"b1", layer::Identity{}, {"d"}, {}},
                         {"b2", layer::Identity{}, {"d"}, {}},
                         {"m", layer::Add{}, {"b1", "b2"}, {}}}};
  const auto inferred = infer_shapes(g);
  const auto node_ms = all_node_metrics(inferred, constants());
  const auto p_cum = propagate_power(inferred, node_ms, {});
  const auto idx = node_index(inferred);
  CHECK(p_cum[idx.at("b1")] == p_cum[idx.at("d")]);
  CHECK(p_cum[idx.at("b2")] == p_cum[idx.at("d")]);
}

TEST_CASE("power merge: sum mode adds branch powers") {
  auto g = NetworkGraph{"sum",
                        TensorShape{64},
                        {{"in", layer::Input{}, {}, {}},
                         {"b1", layer::Identity{}, {"in"}, {}},
                         {"b2", layer::Identity{}, {"in"}, {}},
                         {"m", layer::Add{}, {"b1", "b2"}, {}}}};
  const auto max_mode = metrics_of(g);
  const auto sum_mode = metrics_of(g, {ComplexityMode::multiplicative, PowerMerge::sum});
  CHECK(max_mode.gcip == 1.0);
  CHECK(sum_mode.gcip == 2.0);
}

TEST_CASE("multiplicative mode clamps sub-unit capacities at factor 1") {
  // a lone 1x1 conv has c_local = 0; it must not zero the running product
  auto g = NetworkGraph{
      "clamp",
      TensorShape{8, 8, 2},
      {{"in", layer::Input{}, {}, {}},
       {"c", layer::Conv2D{3, 3, 1, Padding::same(), 4, false}, {"in"}, {}},
       {"one", layer::Conv2D{1, 1, 1, Padding::valid(), 4, false}, {"c"}, {}}}};
  const auto m = metrics_of(g);
  const double conv_c = conv_metrics(3, 3, 4, TensorShape{8, 8, 2}, TensorShape{8, 8, 4}).c_local;
  CHECK(m.gcc_log2 == Approx(std::log2(conv_c)).epsilon(1e-12));
}

TEST_CASE("shortcut monotonicity: inserting an identity shortcut never lowers GCIP or GCC") {
  int spans = 0;
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    CAPTURE(seed);
    const auto chain = testutil::random_chain(seed);
    const auto inferred = infer_shapes(chain);
    const auto [from, to] = testutil::find_shortcut_span(inferred, seed);
    if (from == to) continue;
    ++spans;
    const auto shortcut = testutil::with_identity_shortcut(chain, from, to);
    REQUIRE(validate_graph(shortcut).ok());

    const auto base = metrics_of(chain);
    const auto with = metrics_of(shortcut);
    CHECK(with.gcip >= base.gcip);
    CHECK(with.gcc_log2 >= base.gcc_log2);

    const auto base_sum = metrics_of(chain, {ComplexityMode::additive, PowerMerge::sum});
    const auto with_sum = metrics_of(shortcut, {ComplexityMode::additive, PowerMerge::sum});
    CHECK(with_sum.gcip >= base_sum.gcip);
    CHECK(with_sum.gcc_log2 >= base_sum.gcc_log2);
  }
  CHECK(spans > 30);  // the generator must exercise the property often
}

TEST_CASE("log-domain accumulation survives very deep stacks") {
  // 4000 dense layers of width 512: the linear-domain complexity product is
  // around 2^(4000 * 18), far beyond double range, but log2 stays finite.
  NetworkGraph g;
  g.name = "deep";
  g.input_shape = TensorShape{512};
  g.nodes.push_back({"n0", layer::Input{}, {}, std::nullopt});
  for (int i = 1; i <= 4000; ++i)
    g.nodes.push_back(
        {"n" + std::to_string(i), layer::Dense{512}, {"n" + std::to_string(i - 1)}, std::nullopt});
  const auto m = metrics_of(g);
  CHECK(std::isfinite(m.gcc_log2));
  CHECK(m.gcc_log2 == Approx(4000.0 * std::log2(18.0)).epsilon(1e-9));
  CHECK(m.gcip == 1.0);

  const auto resnet = metrics_of(build_resnet(152));
  CHECK(std::isfinite(resnet.gcc_log2));
  CHECK(resnet.gcc_log2 > 500.0);
}

TEST_CASE("cumulative curves: ordering, running product, autoencoder endpoint") {
  const auto mlp = infer_shapes(build_mlp({784, 128, 10}, ActivationFn::relu));
  const auto rows = cumulative_curves(mlp, {}, constants());
  REQUIRE(rows.size() == mlp.nodes.size());
  double running = 1.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    running *= rows[i].p_local;
    CHECK(rows[i].p_cum == Approx(running).epsilon(1e-12));
    if (i) CHECK(rows[i].depth > rows[i - 1].depth);  // chain: strictly increasing
  }

  const auto ae = infer_shapes(build_autoencoder({64, 32, 16, 8, 16, 32, 64}));
  const auto ae_rows = cumulative_curves(ae, {}, constants());
  CHECK(ae_rows.back().p_cum == Approx(1.0).epsilon(1e-12));

  // determinism: two runs produce identical tables
  const auto again = cumulative_curves(ae, {}, constants());
  REQUIRE(again.size() == ae_rows.size());
  for (std::size_t i = 0; i < ae_rows.size(); ++i) {
    CHECK(again[i].node_id == ae_rows[i].node_id);
    CHECK(again[i].p_cum == ae_rows[i].p_cum);
    CHECK(again[i].c_cum == ae_rows[i].c_cum);
  }
}

TEST_CASE("resnet curves show waves: power dips inside blocks, recovers at adds") {
  const auto g = infer_shapes(build_resnet(34));
  const auto rows = cumulative_curves(g, {}, constants());
  const auto idx = node_index(g);
  const auto node_ms = all_node_metrics(g, constants());
  const auto p_cum = propagate_power(g, node_ms, {});

  int recoveries = 0;
  for (const auto& n : g.nodes) {
    if (!std::holds_alternative<layer::Add>(n.kind)) continue;
    // the add output exceeds the main-branch tail (first input)
    const double tail = p_cum[idx.at(n.inputs[0])];
    const double merged = p_cum[idx.at(n.id)];
    if (merged > tail) ++recoveries;
  }
  CHECK(recoveries == 16);  // every block's shortcut dominates its branch
  CHECK(rows.size() == g.nodes.size());
}

TEST_CASE("log2_sum2 agrees with linear-domain addition on safe magnitudes") {
  CHECK(log2_sum2(3.0, 3.0) == Approx(4.0).epsilon(1e-12));
  CHECK(log2_sum2(std::log2(5.0), std::log2(11.0)) == Approx(std::log2(16.0)).epsilon(1e-12));
  CHECK(log2_sum2(-std::numeric_limits<double>::infinity(), 2.5) == 2.5);
  // huge exponents stay finite
  CHECK(log2_sum2(5000.0, 5000.0) == Approx(5001.0).epsilon(1e-12));
}
