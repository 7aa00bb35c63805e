#include "qsnell/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsnell/errors.hpp"

namespace qsnell
{

namespace
{

void require_positive_energy(double energy)
{
  if (!(energy > 0.0) || !std::isfinite(energy))
  {
    throw DomainError("energy must be positive and finite, got " + std::to_string(energy));
  }
}

// sqrt(E^2 - |V_q|^2), the quaternionic energy scale.
double reduced_energy(const StepPotential& v, double energy)
{
  const double vq = v.quaternionic_modulus();
  if (!(energy > vq))
  {
    throw BelowQuaternionicThreshold("energy " + std::to_string(energy) +
                                     " must exceed the quaternionic modulus " + std::to_string(vq));
  }
  // (E - vq)(E + vq) keeps precision when vq is close to E
  return std::sqrt((energy - vq) * (energy + vq));
}

Regime regime_for(double N_sq, double sin_sq)
{
  if (N_sq <= 0.0)
  {
    return Regime::Tunneling;
  }
  if (N_sq <= sin_sq)
  {
    return Regime::TotalInternalReflection;
  }
  return Regime::Propagating;
}

}  // namespace

double StepPotential::quaternionic_modulus() const { return std::hypot(v2, v3); }

double StepPotential::modulus() const { return std::hypot(v1, v2, v3); }

void ScatteringConfig::validate() const
{
  require_positive_energy(energy);
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2))
  {
    throw DomainError("incidence angle must lie in [0, pi/2), got " + std::to_string(theta));
  }
  if (!std::isfinite(potential.v1) || !std::isfinite(potential.v2) || !std::isfinite(potential.v3) ||
      !std::isfinite(potential.d_star))
  {
    throw DomainError("potential parameters must be finite");
  }
  reduced_energy(potential, energy);
}

std::string_view to_string(Regime regime)
{
  switch (regime)
  {
    case Regime::Propagating:
      return "propagating";
    case Regime::TotalInternalReflection:
      return "total-internal-reflection";
    case Regime::Tunneling:
      return "tunneling";
  }
  return "unknown";
}

double momentum_magnitude(double energy)
{
  require_positive_energy(energy);
  return std::sqrt(energy);
}

double ComplexIndex::value() const
{
  if (imaginary())
  {
    throw DomainError("complex refractive index is imaginary (V1 > E)");
  }
  return std::sqrt(n_sq);
}

ComplexIndex index_complex(double v1, double energy)
{
  require_positive_energy(energy);
  return {1.0 - v1 / energy};
}

QuaternionicIndex index_quaternionic(const StepPotential& potential, double energy)
{
  require_positive_energy(energy);
  const double s = reduced_energy(potential, energy);
  QuaternionicIndex out;
  out.N_sq = s / energy - potential.v1 / energy;
  if (out.N_sq >= 0.0)
  {
    out.N = std::sqrt(out.N_sq);
  }
  return out;
}

std::optional<double> refraction_angle(double theta, double index)
{
  if (!(theta >= 0.0 && theta < std::numbers::pi / 2))
  {
    throw DomainError("incidence angle must lie in [0, pi/2)");
  }
  if (!(index > 0.0))
  {
    throw DomainError("refraction needs a positive index");
  }
  const double s = std::sin(theta) / index;
  if (s > 1.0)
  {
    return std::nullopt;
  }
  return std::asin(s);
}

CriticalAngle critical_angle(double a, double b)
{
  if (!(b >= 0.0))
  {
    throw DomainError("quaternionic ratio must be non-negative");
  }
  if (!(b < 1.0))
  {
    throw BelowQuaternionicThreshold("quaternionic ratio |V_q|/E must be below 1");
  }
  const double N_sq = std::sqrt((1.0 - b) * (1.0 + b)) - a;
  if (N_sq <= 0.0)
  {
    return {CriticalAngle::Kind::AllAnglesReflect, 0.0};
  }
  if (N_sq > 1.0)
  {
    return {CriticalAngle::Kind::NoTotalReflection, 0.0};
  }
  return {CriticalAngle::Kind::Angle, std::asin(std::sqrt(N_sq))};
}

double index_perturbative(double n, double eps)
{
  if (!(n > 0.0))
  {
    throw DomainError("perturbative index needs n > 0");
  }
  return n - eps * eps / (4.0 * n);
}

Complex decaying_sqrt(Complex value)
{
  Complex root = std::sqrt(value);
  if (root.imag() < 0.0)
  {
    root = -root;
  }
  return root;
}

Kinematics derive_kinematics(const ScatteringConfig& config)
{
  config.validate();
  const double E = config.energy;
  const StepPotential& v = config.potential;
  const double s = reduced_energy(v, E);

  Kinematics k;
  k.p = std::sqrt(E);
  k.p_y_star = k.p * std::sin(config.theta);
  k.p_z_star = k.p * std::cos(config.theta);
  const double py_sq = k.p_y_star * k.p_y_star;

  k.n_sq = 1.0 - v.v1 / E;
  k.N_sq = s / E - v.v1 / E;

  k.q_z_star = decaying_sqrt(Complex(E - v.v1 - py_sq, 0.0));
  k.Q_z_star = decaying_sqrt(Complex(s - v.v1 - py_sq, 0.0));
  k.Q_tilde_z_star = decaying_sqrt(Complex(-(s + v.v1) - py_sq, 0.0));

  // V2 j + V3 k acting from the left on f + j g couples the sectors through w = V3 + i V2.
  const Complex w(v.v3, v.v2);
  k.alpha = -std::conj(w) / (E + s);
  k.beta = -w / (E + s);

  k.regime = regime_for(k.N_sq, std::sin(config.theta) * std::sin(config.theta));
  return k;
}

Regime classify_regime(const ScatteringConfig& config) { return derive_kinematics(config).regime; }

PlanePoint rotate_frame(double theta, PlanePoint lab)
{
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {lab.y * c + lab.z * s, -lab.y * s + lab.z * c};
}

PlanePoint unrotate_frame(double theta, PlanePoint star)
{
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {star.y * c - star.z * s, star.y * s + star.z * c};
}

}  // namespace qsnell
