#ifndef QSNELL_SWEEP_HPP
#define QSNELL_SWEEP_HPP

#include <optional>
#include <vector>

#include "qsnell/kinematics.hpp"
#include "qsnell/scattering.hpp"
#include "qsnell/table.hpp"

// Table builders behind the `snell`, `critical`, `reflect` and `wavefield`
// subcommands. Points that fall outside an operation's domain are kept as
// rows with regime "invalid" so row count always equals the requested count.

namespace qsnell
{

struct RaySegment
{
  PlanePoint start;
  PlanePoint end;
};

/// Lab-frame rays of unit length meeting the interface at the origin of the y* axis.
struct RayDiagram
{
  double theta = 0.0;
  std::optional<double> refraction;  ///< phi; absent under total reflection
  RaySegment incident;
  RaySegment reflected;
  std::optional<RaySegment> refracted;
  Regime regime = Regime::Propagating;
  double index_sq = 1.0;  ///< N^2 (n^2 for a complex step)
};

RayDiagram ray_diagram(const ScatteringConfig& config);
Table snell_table(const ScatteringConfig& config);

/// Half-open sampling start + i (stop - start) / count, i = 0 .. count-1.
std::vector<double> sample_range(double start, double stop, int count);

struct CriticalSweep
{
  double start = 0.0;
  double stop = 1.0;
  int count = 100;
  /// Adds theta_C(x, epsilon * x): a complex step x with a proportional quaternionic part.
  std::optional<double> epsilon;
};

Table critical_table(const CriticalSweep& sweep);

enum class SweepAxis
{
  PotentialRatio,  ///< |V|/E swept at fixed incidence angle
  IncidenceAngle,  ///< theta swept (degrees on the CLI) at fixed |V|
};

/**
 * Complex (V1 = m) and pure quaternionic (V2 = m) series at equal modulus m.
 * Along PotentialRatio, m = x E and theta is fixed; along IncidenceAngle,
 * m is the fixed modulus and x is the angle in degrees.
 */
struct ReflectSweep
{
  SweepAxis axis = SweepAxis::PotentialRatio;
  double start = 0.0;
  double stop = 1.0;
  int count = 100;
  double energy = 1.0;
  double theta = 0.0;    ///< radians, PotentialRatio axis
  double modulus = 0.0;  ///< |V|, IncidenceAngle axis
  double d_star = 0.0;
  EvanescentMode mode = EvanescentMode::PaperLiteral;
};

Table reflect_table(const ReflectSweep& sweep);

/// Inclusive grid over y* in [y_min, y_max] and z* in [z_min, z_max].
struct WavefieldGrid
{
  double y_min = 0.0;
  double y_max = 0.0;
  double z_min = -2.0;
  double z_max = 2.0;
  int points = 41;  ///< samples per axis
};

Table wavefield_table(const ScatteringConfig& config, EvanescentMode mode, const WavefieldGrid& grid);

}  // namespace qsnell

#endif  // QSNELL_SWEEP_HPP
