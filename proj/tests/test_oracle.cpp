#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qsnell/errors.hpp"
#include "qsnell/oracle.hpp"

using namespace qsnell;
using namespace qsnell::oracle;
using std::numbers::pi;

namespace
{

constexpr auto kLiteral = EvanescentMode::PaperLiteral;
constexpr auto kConsistent = EvanescentMode::DispersionConsistent;

ScatteringConfig make(double energy, double theta, double v1, double v2 = 0.0, double v3 = 0.0, double d = 0.0)
{
  return {energy, theta, {v1, v2, v3, d}};
}

double gap(const AmplitudeSet& a, const AmplitudeSet& b)
{
  return std::max({std::abs(a.r_main - b.r_main), std::abs(a.r_tilde - b.r_tilde), std::abs(a.t_main - b.t_main),
                   std::abs(a.t_tilde - b.t_tilde)});
}

}  // namespace

TEST_CASE("dense solve with partial pivoting")
{
  // zero leading pivot forces a row swap
  ComplexMatrix<4> a{{{0, 2, 0, 1}, {1, 0, 0, 0}, {0, 0, Complex(0, 1), 0}, {0, 1, 0, 3}}};
  const ComplexVector<4> x_true{Complex(1, -1), 2, Complex(0, 3), -0.5};
  ComplexVector<4> b{};
  for (int r = 0; r < 4; ++r)
  {
    for (int c = 0; c < 4; ++c)
    {
      b[r] += a[r][c] * x_true[c];
    }
  }
  const ComplexVector<4> x = solve_linear_system(a, b);
  for (int i = 0; i < 4; ++i)
  {
    CHECK(std::abs(x[i] - x_true[i]) < 1e-15);
  }

  ComplexMatrix<4> singular{{{1, 2, 0, 0}, {2, 4, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  CHECK_THROWS_AS(solve_linear_system(singular, {1, 1, 1, 1}), SingularSystem);
}

TEST_CASE("continuity solve for the free and complex cases")
{
  const AmplitudeSet free = continuity_linear_solve(make(1.0, 0.7, 0.0), kLiteral);
  CHECK(gap(free, {0, 0, 1, 0}) < 1e-15);

  const ScatteringConfig step = make(3.0, pi / 4, 1.0);
  const AmplitudeSet solved = continuity_linear_solve(step, kLiteral);
  const double n_sq = 2.0 / 3.0;
  const double root = std::sqrt(n_sq - 0.5);
  const double eq12 = (1 - n_sq) / std::pow(std::cos(pi / 4) + root, 2);
  CHECK(std::abs(solved.r_main - eq12) < 1e-12);
  CHECK(std::abs(solved.r_tilde) < 1e-15);
  CHECK(std::abs(solved.t_tilde) < 1e-15);
}

TEST_CASE("continuity solve agrees with the closed-form chain")
{
  for (auto mode : {kLiteral, kConsistent})
  {
    CHECK(gap(continuity_linear_solve(make(1.0, pi / 4, 0.0, 1.0 / 3.0), mode),
              solve_amplitudes(make(1.0, pi / 4, 0.0, 1.0 / 3.0), mode)) < 1e-10);
    CHECK(gap(continuity_linear_solve(make(0.8, 1.1, 1.5, 0.3, 0.4, -0.6), mode),
              solve_amplitudes(make(0.8, 1.1, 1.5, 0.3, 0.4, -0.6), mode)) < 1e-10);
  }
  // numpy reference, paper-literal
  const AmplitudeSet ref{{0.03415599685418313, 0.01520172313615816},
                         {0.0630461111941858, -0.11265221571836163},
                         {1.045607750649801, 0.00451770951634001},
                         {0.06227099478290583, 0.06674571244829343}};
  CHECK(gap(continuity_linear_solve(make(1.0, pi / 4, 0.0, 1.0 / 3.0), kLiteral), ref) < 1e-12);
}

TEST_CASE("free plane wave satisfies the free equation to second order")
{
  const ScatteringConfig free = make(2.0, 0.0, 0.0);
  const double p = std::sqrt(2.0);
  const FieldSampler plane = [p](PlanePoint pt) { return embed(std::exp(Complex(0, p * pt.z))); };
  const PlanePoint at{0.2, -0.8};
  const ResidualReport r = pde_residual(plane, at, 1e-3, free, kLiteral);
  CHECK(r.max_abs_residual < 1e-5);
  CHECK(r.grid_spacing == 1e-3);
  CHECK(r.location_of_max.z == at.z);

  const std::vector<PlanePoint> pts{at};
  const ConvergenceStudy study = pde_convergence(plane, pts, 0.02, free, kLiteral, Sector::Full);
  CHECK(study.order() == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("printed solutions under the quaternionic equation")
{
  const ScatteringConfig c = make(1.0, pi / 4, 0.0, 1.0 / 3.0);
  const std::vector<PlanePoint> beyond{{0.1, 0.6}, {-0.3, 1.0}};
  const std::vector<PlanePoint> before{{0.1, -0.6}, {-0.3, -1.0}};
  for (auto mode : {kLiteral, kConsistent})
  {
    const Wavefield field(c, mode);
    const FieldSampler f = [&field](PlanePoint pt) { return field(pt); };
    const double h = recommended_step(field.kinematics());

    const ConvergenceStudy two = pde_convergence(f, beyond, h, c, mode, Sector::Full);
    CHECK(two.order() == doctest::Approx(2.0).epsilon(0.05));
    const ConvergenceStudy one = pde_convergence(f, before, h, c, mode, Sector::First);
    CHECK(one.order() == doctest::Approx(2.0).epsilon(0.05));

    const ConvergenceStudy j = pde_convergence(f, before, h, c, mode, Sector::Second);
    if (mode == kConsistent)
    {
      CHECK(j.order() == doctest::Approx(2.0).epsilon(0.05));
    }
    else
    {
      // defect |kappa^2 - p_y^2 - p^2| = 2 p^2 sin^2 theta times |g|
      const ResidualReport plateau = pde_residual(f, before, 1e-4, c, mode);
      const Kinematics k = field.kinematics();
      const double g = std::abs(field.amplitudes().r_tilde) * std::exp(k.p_z_star * -0.6);
      CHECK(plateau.second_sector == doctest::Approx(2.0 * 0.5 * g).epsilon(1e-4));
      CHECK(plateau.second_sector > 1e-3);
      CHECK(std::abs(j.order()) < 0.01);
    }
  }
}

TEST_CASE("stencil guards")
{
  const ScatteringConfig c = make(1.0, 0.3, 0.5, 0.0, 0.0, 0.5);
  const FieldSampler zero = [](PlanePoint) { return Quaternion{}; };
  CHECK_THROWS_AS(pde_residual(zero, PlanePoint{0.0, 0.48}, 0.01, c, kLiteral), StencilViolation);
  CHECK_NOTHROW(pde_residual(zero, PlanePoint{0.0, 0.53}, 0.01, c, kLiteral));
  CHECK_THROWS_AS(pde_residual(zero, PlanePoint{0.0, 2.0}, 0.0, c, kLiteral), DomainError);
}

TEST_CASE("recommended step")
{
  const Kinematics k = derive_kinematics(make(1.0, pi / 4, 0.0, 1.0 / 3.0));
  CHECK(recommended_step(k) == doctest::Approx(2 * pi / 1.201169863750362 / 200).epsilon(1e-12));
}

TEST_CASE("dispersion residual")
{
  const ScatteringConfig free = make(1.7, 0.9, 0.0);
  CHECK(dispersion_residual(derive_kinematics(free), free) < 1e-15);
  const ScatteringConfig mixed = make(1.0, 1.1, 0.6, 0.2, -0.5);
  CHECK(dispersion_residual(derive_kinematics(mixed), mixed) < 1e-12);
}

TEST_CASE("critical angle identity probe")
{
  const IdentityProbe half = critical_identity_probe(0.5);
  CHECK(half.direct == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.derived_rhs == 0.5);
  CHECK(half.paper_rhs == 0.75);
  CHECK(half.paper_residual() == doctest::Approx(0.25).epsilon(1e-12));

  const IdentityProbe tiny = critical_identity_probe(1e-9);
  CHECK(std::abs(tiny.direct) < 1e-8);
  CHECK(std::abs(tiny.paper_rhs) < 1e-8);

  const IdentityProbe high = critical_identity_probe(0.9);
  CHECK(std::abs(high.direct - 0.18) < 1e-12);
  CHECK(high.derived_residual() < 1e-12);

  CHECK_THROWS_AS(critical_identity_probe(0.0), DomainError);
  CHECK_THROWS_AS(critical_identity_probe(1.0), DomainError);
}

TEST_CASE("reports are deterministic")
{
  const ScatteringConfig c = make(1.0, 0.6, 0.2, 0.25, -0.3, 0.1);
  const Wavefield field(c, kLiteral);
  const FieldSampler f = [&field](PlanePoint pt) { return field(pt); };
  const std::vector<PlanePoint> pts{{0.3, -1.0}, {0.1, 0.9}};
  const ResidualReport a = pde_residual(f, pts, 0.01, c, kLiteral);
  const ResidualReport b = pde_residual(f, pts, 0.01, c, kLiteral);
  CHECK(a.max_abs_residual == b.max_abs_residual);
  CHECK(a.location_of_max.z == b.location_of_max.z);
  CHECK(gap(continuity_linear_solve(c, kLiteral), continuity_linear_solve(c, kLiteral)) == 0.0);
}
