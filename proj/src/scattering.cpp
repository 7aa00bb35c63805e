#include "qsnell/scattering.hpp"

#include <cmath>
#include <string>

#include "qsnell/errors.hpp"

namespace qsnell
{

namespace
{

constexpr Complex I{0.0, 1.0};

void require_complex_potential(const ScatteringConfig& config)
{
  if (!config.potential.is_complex())
  {
    throw DomainError("potential has a quaternionic part; use reflection_quaternionic");
  }
}

Complex interface_phase(const Kinematics& kin, double d_star)
{
  return std::exp(2.0 * I * kin.p_z_star * d_star);
}

// Symplectic pair times the common transverse factor exp(i p_y* y*).
Quaternion join_transverse(Complex first, Complex second, Complex transverse)
{
  return symplectic_join({first * transverse, second * transverse});
}

WaveSample region_I_at(const Kinematics& kin, const AmplitudeSet& amps, double d_star, PlanePoint star,
                       EvanescentMode mode)
{
  if (star.z > d_star)
  {
    throw WrongRegion("region I requires z* <= d*");
  }
  const double p = kin.p_z_star;
  const double kappa = evanescent_decay(kin, mode);
  const Complex transverse = std::exp(I * kin.p_y_star * star.y);

  const Complex incoming = std::exp(I * p * star.z);
  const Complex reflected = amps.r_main * std::exp(-I * p * star.z);
  const Complex j_wave = amps.r_tilde * std::exp(kappa * star.z);

  WaveSample out;
  out.value = join_transverse(incoming + reflected, j_wave, transverse);
  out.dz = join_transverse(I * p * (incoming - reflected), kappa * j_wave, transverse);
  return out;
}

WaveSample region_II_at(const Kinematics& kin, const AmplitudeSet& amps, double d_star, PlanePoint star)
{
  if (star.z < d_star)
  {
    throw WrongRegion("region II requires z* >= d*");
  }
  const Complex transverse = std::exp(I * kin.p_y_star * star.y);

  const Complex prop = amps.t_main * std::exp(I * kin.Q_z_star * star.z);
  const Complex evan = amps.t_tilde * std::exp(I * kin.Q_tilde_z_star * star.z);
  const Complex dprop = I * kin.Q_z_star * prop;
  const Complex devan = I * kin.Q_tilde_z_star * evan;

  // (1 + j beta) T e^{iQz} + (alpha + j) T~ e^{iQ~z}
  WaveSample out;
  out.value = join_transverse(prop + kin.alpha * evan, kin.beta * prop + evan, transverse);
  out.dz = join_transverse(dprop + kin.alpha * devan, kin.beta * dprop + devan, transverse);
  return out;
}

}  // namespace

std::string_view to_string(EvanescentMode mode)
{
  return mode == EvanescentMode::PaperLiteral ? "paper-literal" : "dispersion-consistent";
}

EvanescentMode parse_evanescent_mode(std::string_view text)
{
  if (text == "paper-literal")
  {
    return EvanescentMode::PaperLiteral;
  }
  if (text == "dispersion-consistent")
  {
    return EvanescentMode::DispersionConsistent;
  }
  throw DomainError("unknown evanescent mode '" + std::string(text) + "'");
}

double evanescent_decay(const Kinematics& kin, EvanescentMode mode)
{
  if (mode == EvanescentMode::PaperLiteral)
  {
    return kin.p_z_star;
  }
  return std::sqrt(kin.p * kin.p + kin.p_y_star * kin.p_y_star);
}

Complex reflection_complex(const ScatteringConfig& config)
{
  require_complex_potential(config);
  const Kinematics kin = derive_kinematics(config);
  const double c = std::cos(config.theta);
  const double s = std::sin(config.theta);
  const Complex root = decaying_sqrt(Complex(kin.n_sq - s * s, 0.0));
  const Complex denom = c + root;
  return (1.0 - kin.n_sq) / (denom * denom) * interface_phase(kin, config.potential.d_star);
}

double total_reflection_phase(const ScatteringConfig& config)
{
  require_complex_potential(config);
  const Kinematics kin = derive_kinematics(config);
  const double s = std::sin(config.theta);
  const double excess = s * s - kin.n_sq;
  if (!(excess > 0.0))
  {
    throw DomainError("incidence angle is not beyond the critical angle");
  }
  return 2.0 * (kin.p_z_star * config.potential.d_star - std::atan(std::sqrt(excess) / std::cos(config.theta)));
}

ReflectionFactors reflection_factors(const ScatteringConfig& config, EvanescentMode mode)
{
  const Kinematics kin = derive_kinematics(config);
  const double p = kin.p_z_star;
  const double kappa = evanescent_decay(kin, mode);
  const Complex Q = kin.Q_z_star;
  const Complex Qt = kin.Q_tilde_z_star;
  const Complex ab = kin.alpha * kin.beta;

  const Complex j_sector = I * Qt - kappa;
  const Complex mixing = ab * (kappa - I * Q);
  return {(p + Q) * j_sector + mixing * (p + Qt), (p - Q) * j_sector + mixing * (p - Qt)};
}

Complex reflection_quaternionic(const ScatteringConfig& config, EvanescentMode mode)
{
  const ReflectionFactors f = reflection_factors(config, mode);
  return f.a_minus / f.a_plus * interface_phase(derive_kinematics(config), config.potential.d_star);
}

AmplitudeSet solve_amplitudes(const ScatteringConfig& config, EvanescentMode mode)
{
  const Kinematics kin = derive_kinematics(config);
  const double p = kin.p_z_star;
  const double d = config.potential.d_star;
  const double kappa = evanescent_decay(kin, mode);
  const Complex Q = kin.Q_z_star;
  const Complex Qt = kin.Q_tilde_z_star;
  const Complex a_plus = reflection_factors(config, mode).a_plus;

  // Common factor 2 p exp(i p d) / A+ of every amplitude.
  const Complex lead = 2.0 * p * std::exp(I * p * d) / a_plus;

  AmplitudeSet amps;
  amps.r_main = reflection_quaternionic(config, mode);
  amps.t_main = lead * (I * Qt - kappa) * std::exp(-I * Q * d);
  amps.t_tilde = lead * kin.beta * (kappa - I * Q) * std::exp(-I * Qt * d);
  amps.r_tilde = lead * kin.beta * I * (Qt - Q) * std::exp(-kappa * d);
  return amps;
}

WaveSample wave_region_I_sample(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star,
                                EvanescentMode mode)
{
  return region_I_at(derive_kinematics(config), amps, config.potential.d_star, star, mode);
}

WaveSample wave_region_II_sample(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star)
{
  return region_II_at(derive_kinematics(config), amps, config.potential.d_star, star);
}

Wavefield::Wavefield(const ScatteringConfig& config, EvanescentMode mode)
    : config_(config), mode_(mode), kin_(derive_kinematics(config)), amps_(solve_amplitudes(config, mode))
{
}

Quaternion Wavefield::operator()(PlanePoint star) const
{
  return star.z <= config_.potential.d_star ? region_I(star).value : region_II(star).value;
}

WaveSample Wavefield::region_I(PlanePoint star) const
{
  return region_I_at(kin_, amps_, config_.potential.d_star, star, mode_);
}

WaveSample Wavefield::region_II(PlanePoint star) const
{
  return region_II_at(kin_, amps_, config_.potential.d_star, star);
}

}  // namespace qsnell
