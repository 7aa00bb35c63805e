#include "qsnell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qsnell/errors.hpp"

namespace qsnell::oracle
{

namespace
{

constexpr Complex I{0.0, 1.0};

// prefactor * exp(rate * z*), evaluated on the line y* = 0.
struct BasisWave
{
  Quaternion prefactor;
  Complex rate;

  [[nodiscard]] SymplecticPair value(double z) const
  {
    return symplectic_split(prefactor * embed(std::exp(rate * z)));
  }
  [[nodiscard]] SymplecticPair derivative(double z) const
  {
    return symplectic_split(prefactor * embed(rate * std::exp(rate * z)));
  }
};

double sector_residual(const ResidualReport& r, Sector sector)
{
  switch (sector)
  {
    case Sector::First:
      return r.first_sector;
    case Sector::Second:
      return r.second_sector;
    case Sector::Full:
      break;
  }
  return r.max_abs_residual;
}

}  // namespace

ComplexVector<4> solve_linear_system(ComplexMatrix<4> a, ComplexVector<4> b)
{
  constexpr std::size_t n = 4;
  for (std::size_t col = 0; col < n; ++col)
  {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
    {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col]))
      {
        pivot = row;
      }
    }
    if (a[pivot][col] == Complex{})
    {
      throw SingularSystem("continuity system is singular at column " + std::to_string(col));
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row)
    {
      const Complex factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k)
      {
        a[row][k] -= factor * a[col][k];
      }
      b[row] -= factor * b[col];
    }
  }
  ComplexVector<4> x{};
  for (std::size_t i = n; i-- > 0;)
  {
    Complex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k)
    {
      acc -= a[i][k] * x[k];
    }
    x[i] = acc / a[i][i];
  }
  return x;
}

AmplitudeSet continuity_linear_solve(const ScatteringConfig& config, EvanescentMode mode)
{
  const Kinematics kin = derive_kinematics(config);
  const double p = kin.p_z_star;
  const double d = config.potential.d_star;
  const Quaternion one(1.0);
  const Quaternion j = Quaternion::unit_j();

  const BasisWave incident{one, I * p};
  // Unknown order: R, R~ (region I), T, T~ (region II).
  const std::array<BasisWave, 4> basis{{
      {one, -I * p},
      {j, Complex(evanescent_decay(kin, mode), 0.0)},
      {one + j * embed(kin.beta), I * kin.Q_z_star},
      {embed(kin.alpha) + j, I * kin.Q_tilde_z_star},
  }};
  // Region-I waves enter with +, region-II waves with -.
  constexpr std::array<double, 4> side{1.0, 1.0, -1.0, -1.0};

  ComplexMatrix<4> a{};
  ComplexVector<4> b{};
  for (std::size_t u = 0; u < 4; ++u)
  {
    const SymplecticPair v = basis[u].value(d);
    const SymplecticPair dv = basis[u].derivative(d);
    a[0][u] = side[u] * v.first;
    a[1][u] = side[u] * dv.first;
    a[2][u] = side[u] * v.second;
    a[3][u] = side[u] * dv.second;
  }
  const SymplecticPair inc = incident.value(d);
  const SymplecticPair dinc = incident.derivative(d);
  b = {-inc.first, -dinc.first, -inc.second, -dinc.second};

  const ComplexVector<4> x = solve_linear_system(a, b);
  return {x[0], x[1], x[2], x[3]};
}

ResidualReport pde_residual(const FieldSampler& field, std::span<const PlanePoint> points, double h,
                            const ScatteringConfig& config, EvanescentMode mode)
{
  if (!(h > 0.0))
  {
    throw DomainError("finite-difference step must be positive");
  }
  config.validate();
  const StepPotential& v = config.potential;
  const Quaternion i = Quaternion::unit_i();
  const Quaternion coupling = i * Quaternion(0.0, v.v1, v.v2, v.v3);

  ResidualReport report;
  report.grid_spacing = h;
  report.mode = mode;
  for (const PlanePoint& pt : points)
  {
    if (std::abs(pt.z - v.d_star) < 3.0 * h)
    {
      throw StencilViolation("stencil at z* = " + std::to_string(pt.z) + " reaches the interface");
    }
    const Quaternion c = field(pt);
    const Quaternion yp = field({pt.y + h, pt.z});
    const Quaternion ym = field({pt.y - h, pt.z});
    const Quaternion zp = field({pt.y, pt.z + h});
    const Quaternion zm = field({pt.y, pt.z - h});
    const Quaternion laplacian = (yp + ym + zp + zm - 4.0 * c) * (1.0 / (h * h));

    Quaternion residual = -(i * (config.energy * c) * i) + laplacian;
    if (pt.z > v.d_star)
    {
      residual += coupling * c;
    }

    const SymplecticPair parts = symplectic_split(residual);
    const double total = norm(residual);
    report.first_sector = std::max(report.first_sector, std::abs(parts.first));
    report.second_sector = std::max(report.second_sector, std::abs(parts.second));
    if (total >= report.max_abs_residual)
    {
      report.max_abs_residual = total;
      report.location_of_max = pt;
    }
  }
  return report;
}

ResidualReport pde_residual(const FieldSampler& field, PlanePoint point, double h, const ScatteringConfig& config,
                            EvanescentMode mode)
{
  return pde_residual(field, std::span<const PlanePoint>(&point, 1), h, config, mode);
}

double recommended_step(const Kinematics& kin)
{
  const double k_max = std::max({kin.p, std::abs(kin.Q_z_star), std::abs(kin.Q_tilde_z_star)});
  return 2.0 * std::numbers::pi / k_max / 200.0;
}

double ConvergenceStudy::coarse_residual() const { return sector_residual(coarse, sector); }

double ConvergenceStudy::fine_residual() const { return sector_residual(fine, sector); }

double ConvergenceStudy::order() const { return std::log2(coarse_residual() / fine_residual()); }

ConvergenceStudy pde_convergence(const FieldSampler& field, std::span<const PlanePoint> points, double h,
                                 const ScatteringConfig& config, EvanescentMode mode, Sector sector)
{
  return {pde_residual(field, points, h, config, mode), pde_residual(field, points, h / 2.0, config, mode), sector};
}

double dispersion_residual(const Kinematics& kin, const ScatteringConfig& config)
{
  const double E = config.energy;
  const StepPotential& v = config.potential;
  const double vq = v.quaternionic_modulus();
  const double s = std::sqrt((E - vq) * (E + vq));
  const double py_sq = kin.p_y_star * kin.p_y_star;
  const double propagating = std::abs(py_sq + kin.Q_z_star * kin.Q_z_star - (s - v.v1));
  const double evanescent = std::abs(py_sq + kin.Q_tilde_z_star * kin.Q_tilde_z_star + (s + v.v1));
  return std::max(propagating, evanescent);
}

double IdentityProbe::derived_residual() const { return std::abs(direct - derived_rhs); }

double IdentityProbe::paper_residual() const { return std::abs(direct - paper_rhs); }

IdentityProbe critical_identity_probe(double x)
{
  if (!(x > 0.0 && x < 1.0))
  {
    throw DomainError("identity probe needs 0 < x < 1");
  }
  const auto sin4 = [](double a, double b) {
    const double s = std::sin(*critical_angle(a, b).value());
    return s * s * s * s;
  };
  IdentityProbe probe;
  probe.x = x;
  probe.direct = sin4(0.0, x) - sin4(x, 0.0);
  probe.derived_rhs = 2.0 * x * (1.0 - x);
  probe.paper_rhs = x * (2.0 - x);
  return probe;
}

}  // namespace qsnell::oracle
