#include "qsnell/quaternion.hpp"

#include <cmath>

#include "qsnell/errors.hpp"

namespace qsnell
{

double norm(const Quaternion& q)
{
  // hypot keeps the result exact for single-component inputs
  return std::hypot(std::hypot(q.w, q.x), std::hypot(q.y, q.z));
}

Quaternion inverse(const Quaternion& q)
{
  const double n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  if (!(n2 > 0.0))
  {
    throw DomainError("inverse of a zero-norm quaternion");
  }
  return conjugate(q) * (1.0 / n2);
}

}  // namespace qsnell
