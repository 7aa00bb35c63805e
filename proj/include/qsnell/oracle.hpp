#ifndef QSNELL_ORACLE_HPP
#define QSNELL_ORACLE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <span>

#include "qsnell/kinematics.hpp"
#include "qsnell/quaternion.hpp"
#include "qsnell/scattering.hpp"

// Brute-force cross-checks for the closed forms in kinematics and scattering.
// Nothing here calls solve_amplitudes or reflection_factors.

namespace qsnell::oracle
{

template <std::size_t N>
using ComplexMatrix = std::array<std::array<Complex, N>, N>;

template <std::size_t N>
using ComplexVector = std::array<Complex, N>;

/// Gaussian elimination with partial pivoting; throws SingularSystem on a zero pivot.
ComplexVector<4> solve_linear_system(ComplexMatrix<4> a, ComplexVector<4> b);

/**
 * Matches Psi_I and Psi_II and their z*-derivatives at z* = d* by building
 * each basis wave as a quaternion, splitting it symplectically, and solving
 * the resulting 4x4 complex system for (R, R~, T, T~).
 */
AmplitudeSet continuity_linear_solve(const ScatteringConfig& config, EvanescentMode mode);

struct ResidualReport
{
  double max_abs_residual = 0.0;
  double first_sector = 0.0;   ///< max |residual| in the 1-part
  double second_sector = 0.0;  ///< max |residual| in the j-part
  double grid_spacing = 0.0;
  PlanePoint location_of_max;
  EvanescentMode mode = EvanescentMode::PaperLiteral;
};

using FieldSampler = std::function<Quaternion(PlanePoint)>;

/**
 * Residual of -i E Psi i + (d_yy + d_zz) Psi + i (i V1 + j V2 + k V3) Psi with
 * second-order central differences (five-point Laplacian). The potential
 * term is applied only where z* > d*. Every stencil must stay at least 3h
 * from the interface or StencilViolation is thrown.
 */
ResidualReport pde_residual(const FieldSampler& field, std::span<const PlanePoint> points, double h,
                            const ScatteringConfig& config, EvanescentMode mode);

ResidualReport pde_residual(const FieldSampler& field, PlanePoint point, double h, const ScatteringConfig& config,
                            EvanescentMode mode);

/// h <= shortest wavelength / 200 over |p|, |Q|, |Q~|.
double recommended_step(const Kinematics& kin);

enum class Sector
{
  Full,
  First,
  Second,
};

struct ConvergenceStudy
{
  ResidualReport coarse;  ///< at h
  ResidualReport fine;    ///< at h / 2
  Sector sector = Sector::Full;

  [[nodiscard]] double coarse_residual() const;
  [[nodiscard]] double fine_residual() const;
  /// log2(coarse / fine)
  [[nodiscard]] double order() const;
};

ConvergenceStudy pde_convergence(const FieldSampler& field, std::span<const PlanePoint> points, double h,
                                 const ScatteringConfig& config, EvanescentMode mode, Sector sector);

/// Worst residual of the propagating and evanescent dispersion relations.
double dispersion_residual(const Kinematics& kin, const ScatteringConfig& config);

struct IdentityProbe
{
  double x = 0.0;
  double direct = 0.0;       ///< sin^4 theta_C(0, x) - sin^4 theta_C(x, 0)
  double derived_rhs = 0.0;  ///< 2 x (1 - x)
  double paper_rhs = 0.0;    ///< x (2 - x), as printed
  [[nodiscard]] double derived_residual() const;
  [[nodiscard]] double paper_residual() const;
};

IdentityProbe critical_identity_probe(double x);

}  // namespace qsnell::oracle

#endif  // QSNELL_ORACLE_HPP
