#ifndef QSNELL_ERRORS_HPP
#define QSNELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsnell
{

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// E <= sqrt(V2^2 + V3^2): the quaternionic square root turns complex.
class BelowQuaternionicThreshold : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Evaluation point lies on the wrong side of the interface.
class WrongRegion : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Finite-difference stencil would straddle the interface.
class StencilViolation : public DomainError
{
public:
  using DomainError::DomainError;
};

class SingularSystem : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsnell

#endif  // QSNELL_ERRORS_HPP
