#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "imexilw/error.hpp"
#include "imexilw/model.hpp"

namespace imexilw {
namespace {

using testing::Gen;
using testing::kPropertyCases;

struct Case {
  std::string name;
  ModelPtr model;
  std::function<State(Gen&)> state;
  bool any_direction = false;
};

std::vector<Case> cases() {
  auto euler = reactive_euler();
  return {
      {"burgers_source", scalar_burgers_source(), [](Gen& g) { return g.scalar(-3.0, 3.0); }},
      {"linear_advection", linear_advection(1.5), [](Gen& g) { return g.scalar(-3.0, 3.0); }},
      {"linear_relax", linear_relaxation(0.5), [](Gen& g) { return g.pair(-2.0, 2.0); }},
      {"nonlinear_relax", nonlinear_relaxation(0.5), [](Gen& g) { return g.nonlinear_relax_state(); }},
      {"reactive_euler", euler, [euler](Gen& g) { return euler->conserved(g.euler_primitive()); }, true},
  };
}

Direction draw_direction(Gen& g, const Case& c) {
  if (c.any_direction) return g.direction();
  return g.integer(0, 1) == 0 ? kXDirection : Direction{-1.0, 0.0};
}

double scale(const Matrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

TEST(ModelProperties, LeftTimesRightIsIdentity) {
  for (const Case& c : cases()) {
    Gen g(11);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Eigensystem e = c.model->eigensystem(u, draw_direction(g, c));
      const int m = c.model->components();
      const double err = (e.left * e.right - Matrix::Identity(m, m)).cwiseAbs().maxCoeff();
      EXPECT_LE(err, 1e-9) << c.name << " case " << k;
    }
  }
}

TEST(ModelProperties, LeftJacobianRightIsDiagonal) {
  for (const Case& c : cases()) {
    Gen g(12);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Direction d = draw_direction(g, c);
      const Eigensystem e = c.model->eigensystem(u, d);
      const Matrix a = c.model->flux_jacobian(u, d);
      const Matrix lar = e.left * a * e.right;
      const Matrix diag = e.eigenvalues.asDiagonal();
      EXPECT_LE((lar - diag).cwiseAbs().maxCoeff(), 1e-9 * scale(a)) << c.name << " case " << k;
    }
  }
}

TEST(ModelProperties, MaxSpeedIsSpectralRadius) {
  for (const Case& c : cases()) {
    Gen g(13);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Direction d = draw_direction(g, c);
      const Eigensystem e = c.model->eigensystem(u, d);
      const double radius = e.eigenvalues.cwiseAbs().maxCoeff();
      EXPECT_GE(c.model->max_speed(u, d), radius * (1.0 - 1e-12)) << c.name;
    }
  }
}

TEST(ModelProperties, FluxJacobianMatchesFiniteDifferences) {
  for (const Case& c : cases()) {
    Gen g(14);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Direction d = draw_direction(g, c);
      const Matrix exact = c.model->flux_jacobian(u, d);
      const Matrix fd = finite_difference_jacobian([&](const State& v) { return c.model->flux(v, d); }, u);
      EXPECT_LE((exact - fd).cwiseAbs().maxCoeff(), 1e-5 * scale(exact)) << c.name << " case " << k;
    }
  }
}

TEST(ModelProperties, SourceJacobianMatchesFiniteDifferences) {
  for (const Case& c : cases()) {
    if (!c.model->has_source()) continue;
    Gen g(15);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Matrix exact = c.model->source_jacobian(u);
      const Matrix fd = finite_difference_jacobian([&](const State& v) { return c.model->source(v); }, u);
      EXPECT_LE((exact - fd).cwiseAbs().maxCoeff(), 1e-5 * scale(exact)) << c.name << " case " << k;
    }
  }
}

TEST(ModelProperties, ImplicitSolveSatisfiesStageEquation) {
  for (const Case& c : cases()) {
    if (!c.model->has_source()) continue;
    Gen g(16);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const double coeff = g.uniform(1e-4, 0.05);
      // rhs built from a known solution keeps the root admissible
      const State rhs = u - coeff * c.model->source(u);
      const State sol = c.model->solve_implicit(rhs, coeff);
      const State residual = sol - coeff * c.model->source(sol) - rhs;
      EXPECT_LE(residual.cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff()))
          << c.name << " case " << k;
    }
  }
}

TEST(ModelProperties, RotationRoundTrip) {
  for (const Case& c : cases()) {
    Gen g(17);
    for (int k = 0; k < kPropertyCases; ++k) {
      const State u = c.state(g);
      const Direction d = g.direction();
      const State back = c.model->rotate(c.model->rotate(u, d.nx, d.ny), d.nx, -d.ny);
      EXPECT_LE((back - u).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, u.cwiseAbs().maxCoeff())) << c.name;
    }
  }
}

TEST(ReactiveEuler, RotatedFluxIsDirectionalFlux) {
  auto euler = reactive_euler();
  Gen g(18);
  for (int k = 0; k < kPropertyCases; ++k) {
    const State u = euler->conserved(g.euler_primitive());
    const Direction d = g.direction();
    const State local = euler->rotate(u, d.nx, d.ny);
    const State expected = euler->rotate(euler->flux(local, kXDirection), d.nx, -d.ny);
    const State f = euler->flux(u, d);
    EXPECT_LE((f - expected).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, f.cwiseAbs().maxCoeff()));
  }
}

TEST(ReactiveEuler, PrimitiveRoundTrip) {
  auto euler = reactive_euler();
  Gen g(19);
  for (int k = 0; k < kPropertyCases; ++k) {
    const Primitive w = g.euler_primitive();
    const Primitive back = euler->primitive(euler->conserved(w));
    EXPECT_NEAR(back.rho, w.rho, 1e-12 * w.rho);
    EXPECT_NEAR(back.u, w.u, 1e-12);
    EXPECT_NEAR(back.v, w.v, 1e-12);
    EXPECT_NEAR(back.p, w.p, 1e-10 * w.p);
    EXPECT_NEAR(back.Y, w.Y, 1e-12);
  }
}

TEST(ReactiveEuler, TotalEnergyIncludesChemicalEnergy) {
  auto euler = reactive_euler();
  Primitive w{1.0, 0.0, 0.0, 1.0, 0.5};
  // p / (gamma - 1) + q rho Y = 5 + 25
  EXPECT_NEAR(euler->total_energy(w), 30.0, 1e-12);
  EXPECT_NEAR(euler->temperature(euler->conserved(w)), 1.0, 1e-12);
  EXPECT_NEAR(euler->sound_speed(euler->conserved(w)), std::sqrt(1.2), 1e-12);
}

TEST(ReactiveEuler, SourceConsumesReactant) {
  auto euler = reactive_euler();
  const State u = euler->conserved({1.0, 0.0, 0.0, 10.0, 0.8});
  const State q = euler->source(u);
  EXPECT_LT(q(4), 0.0);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(q(k), 0.0);
}

TEST(ReactiveEuler, StiffImplicitSolveStaysPhysical) {
  auto euler = reactive_euler();
  const State rhs = euler->conserved({1.0, 0.3, -0.2, 80.0, 0.9});
  const State u = euler->solve_implicit(rhs, 10.0);
  const Primitive w = euler->primitive(u);
  EXPECT_GT(w.p, 0.0);
  EXPECT_GE(w.Y, -1e-12);
  EXPECT_LT(w.Y, 0.9);
  EXPECT_NEAR(u(0), rhs(0), 1e-12);
}

TEST(ReactiveEuler, RejectsNonphysicalStates) {
  auto euler = reactive_euler();
  State u = euler->conserved({1.0, 0.0, 0.0, 1.0, 0.0});
  u(3) = -1.0;
  try {
    euler->check_admissible(u);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonphysicalState);
  }
}

TEST(ReactiveEuler, RejectsBadParameters) {
  EXPECT_THROW(reactive_euler({1.0, 50.0, 50.0, 2566.4}), Error);
}

TEST(Relaxation, RejectsNonpositiveEpsilon) {
  for (double eps : {0.0, -1.0}) {
    try {
      linear_relaxation(eps);
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonpositiveEpsilon);
    }
    EXPECT_THROW(nonlinear_relaxation(eps), Error);
  }
}

TEST(Relaxation, StiffLimitProjectsOntoEquilibrium) {
  for (const ModelPtr& m : {linear_relaxation(1e-10), nonlinear_relaxation(1e-10)}) {
    State rhs(2);
    rhs << 0.7, 0.4;
    const State u = m->solve_implicit(rhs, 0.1);
    EXPECT_NEAR(u(0), 0.7, 1e-15);
    // equilibrium u + v = 0 up to O(epsilon)
    EXPECT_NEAR(u(0) + u(1), 0.0, 1e-8) << m->name();
  }
}

TEST(Relaxation, NonlinearAdmissibility) {
  auto m = nonlinear_relaxation(1.0);
  State u(2);
  u << -1.0, -0.5;
  try {
    m->check_admissible(u);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleState);
  }
}

TEST(Newton, MatchesClosedFormSolves) {
  Gen g(20);
  for (const ModelPtr& m : {linear_relaxation(0.3), nonlinear_relaxation(0.3), scalar_burgers_source()}) {
    for (int k = 0; k < 20; ++k) {
      const State u = m->components() == 1 ? g.scalar(0.5, 2.0) : g.nonlinear_relax_state();
      const double coeff = g.uniform(1e-3, 0.05);
      const State rhs = u - coeff * m->source(u);
      const State newton = newton_implicit_solve(*m, rhs, coeff);
      EXPECT_LE((newton - m->solve_implicit(rhs, coeff)).cwiseAbs().maxCoeff(), 1e-10) << m->name();
    }
  }
}

TEST(ScalarLaw, UserFlux) {
  auto m = scalar_law("cubic", [](double u) { return u * u * u; }, [](double u) { return 3.0 * u * u; });
  State u(1);
  u(0) = 2.0;
  EXPECT_DOUBLE_EQ(m->flux(u, kXDirection)(0), 8.0);
  EXPECT_DOUBLE_EQ(m->flux_jacobian(u, kXDirection)(0, 0), 12.0);
  EXPECT_DOUBLE_EQ(m->max_speed(u, kXDirection), 12.0);
  EXPECT_FALSE(m->has_source());
}

}  // namespace
}  // namespace imexilw
