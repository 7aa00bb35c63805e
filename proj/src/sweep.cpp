#include "qsnell/sweep.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsnell/errors.hpp"

namespace qsnell
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegree = std::numbers::pi / 180.0;
const std::string kInvalid = "invalid";

void require_count(int count)
{
  if (count < 2)
  {
    throw DomainError("a sweep needs at least 2 points, got " + std::to_string(count));
  }
}

PlanePoint offset(PlanePoint base, double dy, double dz) { return {base.y + dy, base.z + dz}; }

void append_segment(std::vector<Cell>& row, const std::optional<RaySegment>& seg)
{
  if (seg)
  {
    row.insert(row.end(), {seg->start.y, seg->start.z, seg->end.y, seg->end.z});
  }
  else
  {
    row.insert(row.end(), {kNaN, kNaN, kNaN, kNaN});
  }
}

double angle_or_nan(const CriticalAngle& c)
{
  switch (c.kind)
  {
    case CriticalAngle::Kind::Angle:
      return c.angle;
    case CriticalAngle::Kind::AllAnglesReflect:
      return 0.0;
    case CriticalAngle::Kind::NoTotalReflection:
      break;
  }
  return kNaN;
}

struct SeriesPoint
{
  double modulus = kNaN;
  double phase = kNaN;
  std::string regime = kInvalid;
};

SeriesPoint reflection_point(const ScatteringConfig& config, EvanescentMode mode)
{
  try
  {
    const Regime regime = classify_regime(config);
    const Complex r = config.potential.is_complex() ? reflection_complex(config)
                                                    : reflection_quaternionic(config, mode);
    return {std::abs(r), std::arg(r), std::string(to_string(regime))};
  }
  catch (const DomainError&)
  {
    return {};
  }
}

}  // namespace

RayDiagram ray_diagram(const ScatteringConfig& config)
{
  const Kinematics kin = derive_kinematics(config);
  const double theta = config.theta;
  const PlanePoint hit{0.0, config.potential.d_star};
  const auto lab = [theta](PlanePoint star) { return unrotate_frame(theta, star); };

  RayDiagram diagram;
  diagram.theta = theta;
  diagram.regime = kin.regime;
  diagram.index_sq = kin.N_sq;
  diagram.incident = {lab(offset(hit, -std::sin(theta), -std::cos(theta))), lab(hit)};
  diagram.reflected = {lab(hit), lab(offset(hit, std::sin(theta), -std::cos(theta)))};
  if (kin.regime == Regime::Propagating)
  {
    const double phi = *refraction_angle(theta, std::sqrt(kin.N_sq));
    diagram.refraction = phi;
    diagram.refracted = RaySegment{lab(hit), lab(offset(hit, std::sin(phi), std::cos(phi)))};
  }
  return diagram;
}

Table snell_table(const ScatteringConfig& config)
{
  const RayDiagram d = ray_diagram(config);
  Table t;
  t.columns = {"energy",      "v1",          "v2",          "v3",          "theta_rad",    "theta_deg",
               "index_sq",    "index",       "refraction_rad", "refraction_deg", "regime",  "incident_y0",
               "incident_z0", "incident_y1", "incident_z1", "reflected_y0", "reflected_z0", "reflected_y1",
               "reflected_z1", "refracted_y0", "refracted_z0", "refracted_y1", "refracted_z1"};
  const StepPotential& v = config.potential;
  const double phi = d.refraction.value_or(kNaN);
  std::vector<Cell> row{config.energy,
                        v.v1,
                        v.v2,
                        v.v3,
                        d.theta,
                        d.theta / kDegree,
                        d.index_sq,
                        d.index_sq >= 0.0 ? std::sqrt(d.index_sq) : kNaN,
                        phi,
                        phi / kDegree,
                        std::string(to_string(d.regime))};
  append_segment(row, d.incident);
  append_segment(row, d.reflected);
  append_segment(row, d.refracted);
  t.add_row(std::move(row));
  return t;
}

std::vector<double> sample_range(double start, double stop, int count)
{
  require_count(count);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  const double step = (stop - start) / count;
  for (int i = 0; i < count; ++i)
  {
    xs.push_back(start + i * step);
  }
  return xs;
}

Table critical_table(const CriticalSweep& sweep)
{
  Table t;
  t.columns = {"x", "theta_c_complex_rad", "theta_c_complex_deg", "theta_c_quaternionic_rad",
               "theta_c_quaternionic_deg"};
  if (sweep.epsilon)
  {
    t.columns.insert(t.columns.end(), {"theta_c_perturbed_rad", "theta_c_perturbed_deg"});
  }
  t.columns.emplace_back("regime");

  for (double x : sample_range(sweep.start, sweep.stop, sweep.count))
  {
    bool valid = true;
    const auto evaluate = [&valid](double a, double b) {
      try
      {
        return angle_or_nan(critical_angle(a, b));
      }
      catch (const DomainError&)
      {
        valid = false;
        return kNaN;
      }
    };
    std::vector<Cell> row{x};
    std::vector<double> angles{evaluate(x, 0.0), evaluate(0.0, x)};
    if (sweep.epsilon)
    {
      angles.push_back(evaluate(x, *sweep.epsilon * x));
    }
    for (double a : angles)
    {
      row.insert(row.end(), {a, a / kDegree});
    }
    row.emplace_back(valid ? std::string("valid") : kInvalid);
    t.add_row(std::move(row));
  }
  return t;
}

Table reflect_table(const ReflectSweep& sweep)
{
  Table t;
  if (sweep.axis == SweepAxis::PotentialRatio)
  {
    t.columns = {"ratio"};
  }
  else
  {
    t.columns = {"theta_rad", "theta_deg"};
  }
  t.columns.insert(t.columns.end(), {"abs_r_complex", "arg_r_complex", "regime_complex", "abs_r_quaternionic",
                                     "arg_r_quaternionic", "regime_quaternionic"});

  for (double x : sample_range(sweep.start, sweep.stop, sweep.count))
  {
    ScatteringConfig base;
    base.energy = sweep.energy;
    base.potential.d_star = sweep.d_star;
    double m = sweep.modulus;
    std::vector<Cell> row;
    if (sweep.axis == SweepAxis::PotentialRatio)
    {
      base.theta = sweep.theta;
      m = x * sweep.energy;
      row.emplace_back(x);
    }
    else
    {
      base.theta = x * kDegree;
      row.insert(row.end(), {base.theta, x});
    }

    ScatteringConfig complex_cfg = base;
    complex_cfg.potential.v1 = m;
    ScatteringConfig quat_cfg = base;
    quat_cfg.potential.v2 = m;

    for (const SeriesPoint& s : {reflection_point(complex_cfg, sweep.mode), reflection_point(quat_cfg, sweep.mode)})
    {
      row.insert(row.end(), {s.modulus, s.phase, s.regime});
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table wavefield_table(const ScatteringConfig& config, EvanescentMode mode, const WavefieldGrid& grid)
{
  require_count(grid.points);
  const Wavefield field(config, mode);
  const double d = config.potential.d_star;

  Table t;
  t.columns = {"y_star", "z_star", "region", "psi_w", "psi_x", "psi_y", "psi_z", "psi_norm"};
  const double dy = (grid.y_max - grid.y_min) / (grid.points - 1);
  const double dz = (grid.z_max - grid.z_min) / (grid.points - 1);
  for (int iy = 0; iy < grid.points; ++iy)
  {
    const double y = grid.y_min + iy * dy;
    for (int iz = 0; iz < grid.points; ++iz)
    {
      const double z = grid.z_min + iz * dz;
      const bool first = z <= d;
      const Quaternion psi = first ? field.region_I({y, z}).value : field.region_II({y, z}).value;
      t.add_row({y, z, std::string(first ? "I" : "II"), psi.w, psi.x, psi.y, psi.z, norm(psi)});
    }
  }
  return t;
}

}  // namespace qsnell
