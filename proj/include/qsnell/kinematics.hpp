#ifndef QSNELL_KINEMATICS_HPP
#define QSNELL_KINEMATICS_HPP

#include <optional>
#include <string_view>

#include "qsnell/quaternion.hpp"

// Natural units throughout: hbar = 2m = 1, so p^2 = E.

namespace qsnell
{

/// Step potential i V1 + j V2 + k V3 beyond the interface z* = d*, zero before it.
struct StepPotential
{
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
  double d_star = 0.0;

  [[nodiscard]] double quaternionic_modulus() const;
  [[nodiscard]] double modulus() const;
  [[nodiscard]] bool is_complex() const { return v2 == 0.0 && v3 == 0.0; }
};

struct ScatteringConfig
{
  double energy = 1.0;
  double theta = 0.0;  ///< incidence angle from the z* axis, radians in [0, pi/2)
  StepPotential potential;

  /// Throws DomainError / BelowQuaternionicThreshold when the config is outside
  /// E > 0, 0 <= theta < pi/2, E > |V_q|.
  void validate() const;
};

enum class Regime
{
  Propagating,              ///< N^2 > sin^2 theta
  TotalInternalReflection,  ///< 0 < N^2 <= sin^2 theta
  Tunneling,                ///< N^2 <= 0
};

std::string_view to_string(Regime regime);

struct Kinematics
{
  double p = 0.0;
  double p_y_star = 0.0;
  double p_z_star = 0.0;
  Complex q_z_star;  ///< transmitted momentum for the V1-only problem
  Complex Q_z_star;  ///< propagating quaternionic branch
  Complex Q_tilde_z_star;  ///< evanescent quaternionic branch
  double n_sq = 0.0;
  double N_sq = 0.0;
  Complex alpha;
  Complex beta;
  Regime regime = Regime::Propagating;
};

double momentum_magnitude(double energy);

/// n^2 = 1 - V1/E. Negative n^2 means the index is imaginary and every angle reflects.
struct ComplexIndex
{
  double n_sq = 1.0;

  [[nodiscard]] bool imaginary() const { return n_sq < 0.0; }
  /// n for a real index; throws DomainError when imaginary.
  [[nodiscard]] double value() const;
};

ComplexIndex index_complex(double v1, double energy);

struct QuaternionicIndex
{
  double N_sq = 1.0;
  std::optional<double> N;  ///< present iff N_sq >= 0
};

QuaternionicIndex index_quaternionic(const StepPotential& potential, double energy);

/// sin(theta) = index * sin(phi); nullopt past the critical angle.
std::optional<double> refraction_angle(double theta, double index);

struct CriticalAngle
{
  enum class Kind
  {
    Angle,              ///< total reflection above `angle`
    NoTotalReflection,  ///< N^2 > 1
    AllAnglesReflect,   ///< N^2 <= 0
  };

  Kind kind = Kind::Angle;
  double angle = 0.0;  ///< meaningful for Kind::Angle only

  [[nodiscard]] std::optional<double> value() const
  {
    return kind == Kind::Angle ? std::optional<double>(angle) : std::nullopt;
  }
};

/// theta_C(a, b) with a = V1/E and b = |V_q|/E.
CriticalAngle critical_angle(double a, double b);

/// Small-|V_q| expansion of N around the complex index n, eps = |V_q|/E.
double index_perturbative(double n, double eps);

Kinematics derive_kinematics(const ScatteringConfig& config);
Regime classify_regime(const ScatteringConfig& config);

/// Root of `value` with non-negative imaginary part; for real positive input
/// the positive real root.
Complex decaying_sqrt(Complex value);

struct PlanePoint
{
  double y = 0.0;
  double z = 0.0;
};

/// Lab (y, z) to stratified (y*, z*).
PlanePoint rotate_frame(double theta, PlanePoint lab);
/// Stratified (y*, z*) back to lab (y, z).
PlanePoint unrotate_frame(double theta, PlanePoint star);

}  // namespace qsnell

#endif  // QSNELL_KINEMATICS_HPP
