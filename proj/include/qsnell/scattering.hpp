#ifndef QSNELL_SCATTERING_HPP
#define QSNELL_SCATTERING_HPP

#include <string_view>

#include "qsnell/kinematics.hpp"
#include "qsnell/quaternion.hpp"

namespace qsnell
{

/**
 * Decay constant kappa of the region-I j-sector wave j R~ exp(kappa z*).
 *
 * PaperLiteral uses kappa = p_z*, which is what the closed form has been
 * published with. DispersionConsistent uses kappa = p sqrt(1 + sin^2 theta),
 * the only value for which j R~ exp(kappa z*) exp(i p_y* y*) solves the free
 * quaternionic equation. Both coincide at normal incidence.
 */
enum class EvanescentMode
{
  PaperLiteral,
  DispersionConsistent,
};

std::string_view to_string(EvanescentMode mode);
/// Accepts "paper-literal" and "dispersion-consistent"; throws DomainError otherwise.
EvanescentMode parse_evanescent_mode(std::string_view text);

double evanescent_decay(const Kinematics& kin, EvanescentMode mode);

/// Complex amplitudes; the j-structure lives in the basis factors (1 + j beta), (alpha + j), j.
struct AmplitudeSet
{
  Complex r_main;
  Complex r_tilde;
  Complex t_main;
  Complex t_tilde;
};

/// Reflection amplitude for a purely complex step (V2 = V3 = 0).
Complex reflection_complex(const ScatteringConfig& config);

/// Phase of r above the critical angle; throws DomainError below it.
double total_reflection_phase(const ScatteringConfig& config);

/// Numerator and denominator of R = (A- / A+) exp(2 i p_z* d*).
struct ReflectionFactors
{
  Complex a_plus;
  Complex a_minus;
};

ReflectionFactors reflection_factors(const ScatteringConfig& config, EvanescentMode mode);

Complex reflection_quaternionic(const ScatteringConfig& config, EvanescentMode mode);

/// Closed-form chain: T~ in terms of T from the j-sector, then T and R from the
/// 1-sector, R~ from the j-sector value equation.
AmplitudeSet solve_amplitudes(const ScatteringConfig& config, EvanescentMode mode);

/// Quaternion value and z*-derivative of a wavefunction at one point.
struct WaveSample
{
  Quaternion value;
  Quaternion dz;
};

/// Psi_I for z* <= d*; throws WrongRegion otherwise.
WaveSample wave_region_I_sample(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star,
                                EvanescentMode mode);
/// Psi_II for z* >= d*; throws WrongRegion otherwise.
WaveSample wave_region_II_sample(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star);

inline Quaternion wave_region_I(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star,
                                EvanescentMode mode)
{
  return wave_region_I_sample(config, amps, star, mode).value;
}

inline Quaternion wave_region_II(const ScatteringConfig& config, const AmplitudeSet& amps, PlanePoint star)
{
  return wave_region_II_sample(config, amps, star).value;
}

/**
 * Solved scattering state for one configuration; evaluates Psi on either side
 * of the interface without re-deriving kinematics per point.
 */
class Wavefield
{
public:
  Wavefield(const ScatteringConfig& config, EvanescentMode mode);

  [[nodiscard]] const ScatteringConfig& config() const { return config_; }
  [[nodiscard]] const Kinematics& kinematics() const { return kin_; }
  [[nodiscard]] const AmplitudeSet& amplitudes() const { return amps_; }
  [[nodiscard]] EvanescentMode mode() const { return mode_; }

  /// Region I for z* <= d*, region II beyond.
  [[nodiscard]] Quaternion operator()(PlanePoint star) const;
  [[nodiscard]] WaveSample region_I(PlanePoint star) const;
  [[nodiscard]] WaveSample region_II(PlanePoint star) const;

private:
  ScatteringConfig config_;
  EvanescentMode mode_;
  Kinematics kin_;
  AmplitudeSet amps_;
};

}  // namespace qsnell

#endif  // QSNELL_SCATTERING_HPP
