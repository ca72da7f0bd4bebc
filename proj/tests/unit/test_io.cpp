#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "imexilw/config.hpp"
#include "imexilw/driver.hpp"
#include "imexilw/error.hpp"
#include "imexilw/norms.hpp"
#include "imexilw/problems.hpp"

namespace imexilw {
namespace {

using nlohmann::json;

ErrorCode parse_code(const json& j) {
  try {
    parse_config(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

TEST(Config, Defaults) {
  const ScenarioConfig c = parse_config(json::object());
  EXPECT_EQ(c.dimension, 1);
  EXPECT_EQ(c.tableau, "ars443");
  EXPECT_DOUBLE_EQ(c.cfl, 0.8);
  EXPECT_FALSE(c.splitting.has_value());
}

TEST(Config, RejectsBadInput) {
  EXPECT_EQ(parse_code(json::array()), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"dimension", 3}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"cfl", -1.0}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"domain", {0.0, 1.0, 2.0}}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"refinements", {40, 20}}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"splitting", "diagonal"}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"boundaries", {{"left", "sticky"}}}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"boundaries", {{"left", {{"kind", "inflow_state"}}}}}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"extrapolation", {{"weights", "cubic"}}}}), ErrorCode::ConfigError);
  EXPECT_EQ(parse_code({{"cfl", "fast"}}), ErrorCode::ConfigError);
}

TEST(Config, MissingFileIsIoError) {
  try {
    load_config("/nonexistent/scenario.json");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(Config, RoundTrip) {
  const json j = json::parse(R"({
    "name": "rt", "dimension": 2,
    "model": {"name": "reactive_euler", "gamma": 1.4},
    "splitting": "characteristic", "cfl": 0.6, "t_end": 0.25,
    "domain": [0.0, 2.0, 0.0, 1.0], "obstacles": [[0.5, 1.0, 0.0, 0.5]],
    "eta": {"x": 0.3, "y": 0.6}, "refinements": [20, 40],
    "boundaries": {
      "left": {"kind": "inflow_state", "state": {"rho": 1.0, "u": 1.0, "v": 0.0, "p": 1.0, "Y": 0.0}},
      "obstacles": "wall"
    }
  })");
  const ScenarioConfig a = parse_config(j);
  const ScenarioConfig b = parse_config(to_json(a));
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(b.splitting, Splitting::Characteristic);
  EXPECT_DOUBLE_EQ(b.eta_x, 0.3);
  EXPECT_DOUBLE_EQ(b.eta_y, 0.6);
  ASSERT_EQ(b.obstacles.size(), 1u);
  EXPECT_DOUBLE_EQ(b.obstacles[0].x1, 1.0);
  EXPECT_EQ(b.boundaries.at("left").kind, "inflow_state");
  EXPECT_DOUBLE_EQ(b.model_parameters.at("gamma").get<double>(), 1.4);
}

TEST(Problems, ParseStateFromPressureOrEnergy) {
  auto model = make_model("reactive_euler", json::object());
  const State from_p = parse_state(*model, {{"rho", 2.0}, {"u", 1.0}, {"v", -1.0}, {"p", 3.0}, {"Y", 0.5}});
  // E = p / (gamma - 1) + rho (u^2 + v^2) / 2 + q rho Y
  EXPECT_NEAR(from_p(3), 15.0 + 2.0 + 50.0, 1e-12);
  const State from_e = parse_state(*model, {{"rho", 2.0}, {"u", 1.0}, {"v", -1.0}, {"E", 67.0}, {"Y", 0.5}});
  EXPECT_LE((from_p - from_e).cwiseAbs().maxCoeff(), 1e-12);
  const State raw = parse_state(*model, {2.0, 2.0, -2.0, 67.0, 1.0});
  EXPECT_LE((raw - from_p).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(parse_state(*model, {1.0, 2.0}), Error);
  EXPECT_THROW(make_model("maxwell", json::object()), Error);
}

TEST(Norms, DiscreteNorms) {
  const ErrorNorms n = error_norms({3.0, -4.0}, 0.5);
  EXPECT_DOUBLE_EQ(n.l1, 3.5);
  EXPECT_DOUBLE_EQ(n.l2, std::sqrt(12.5));
  EXPECT_DOUBLE_EQ(n.linf, 4.0);
}

TEST(Norms, ObservedOrder) {
  EXPECT_DOUBLE_EQ(observed_order(8.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(observed_order(1e-3, 1e-3), 0.0);
}

TEST(Norms, ReportOrdersNeedHalvedSpacing) {
  const ConvergenceReport r = make_report("r", {{20, 0.05, {8e-3, 8e-3, 8e-3}, 10},
                                                {40, 0.025, {1e-3, 1e-3, 2e-3}, 20},
                                                {100, 0.01, {1e-4, 1e-4, 1e-4}, 50}});
  ASSERT_EQ(r.orders.size(), 2u);
  EXPECT_DOUBLE_EQ(r.orders[0][0], 3.0);
  EXPECT_DOUBLE_EQ(r.orders[0][2], 2.0);
  EXPECT_TRUE(std::isnan(r.orders[1][1]));
  const std::string table = format_report(r);
  EXPECT_NE(table.find("8.00e-03"), std::string::npos);
  EXPECT_NE(table.find("3.00"), std::string::npos);
  EXPECT_NE(report_csv(r).find("dx"), std::string::npos);
}

ScenarioConfig small_burgers() {
  return parse_config({{"name", "small"},
                       {"model", "burgers_source"},
                       {"exact", "exp_t_plus_x"},
                       {"t_end", 0.5},
                       {"refinements", {40, 80, 160}},
                       {"extrapolation", {{"weights", "linear"}}},
                       {"boundaries", {{"left", {{"kind", "dirichlet"}, {"component", 0}}}, {"right", "extrapolate"}}}});
}

TEST(Driver, RunReportsErrors) {
  RunOptions opts;
  opts.write_output = false;
  opts.resolution = 20;
  const RunResult r = run_scenario(small_burgers(), opts);
  EXPECT_TRUE(r.reached_end);
  EXPECT_TRUE(r.finite);
  EXPECT_EQ(r.resolution, 20);
  EXPECT_NEAR(r.time, 0.5, 1e-14);
  ASSERT_TRUE(r.errors.has_value());
  EXPECT_LT(r.errors->linf, 1e-2);
  EXPECT_FALSE(r.min_density.has_value());
}

TEST(Driver, ConvergenceStudyIsThirdOrder) {
  RunOptions opts;
  opts.write_output = false;
  std::vector<RunResult> runs;
  const ConvergenceReport rep = convergence_study(small_burgers(), opts, &runs);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(runs.size(), 3u);
  EXPECT_GE(rep.orders.back()[0], 2.7);
  EXPECT_GE(rep.orders.back()[1], 2.7);
}

}  // namespace
}  // namespace imexilw
