#ifndef QSNELL_QUATERNION_HPP
#define QSNELL_QUATERNION_HPP

#include <complex>

namespace qsnell
{

using Complex = std::complex<double>;

/**
 * Real quaternion q = w + x i + y j + z k under the Hamilton product.
 *
 * Complex numbers embed as (re, im, 0, 0). Every quaternion also has a
 * unique symplectic form q = first + j * second with first, second complex:
 * first = w + x i and second = y - z i (note j c = conj(c) j).
 */
struct Quaternion
{
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double scalar) : w(scalar) {}
  explicit Quaternion(const Complex& c) : w(c.real()), x(c.imag()) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion& operator+=(const Quaternion& o)
  {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o)
  {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s)
  {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion hamilton_product(const Quaternion& a, const Quaternion& b)
{
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

double norm(const Quaternion& q);

/// Throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& q);

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return hamilton_product(a, b); }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

struct SymplecticPair
{
  Complex first;
  Complex second;

  friend bool operator==(const SymplecticPair&, const SymplecticPair&) = default;
};

/// q = first + j * second, second = y - z i.
inline SymplecticPair symplectic_split(const Quaternion& q) { return {{q.w, q.x}, {q.y, -q.z}}; }

inline Quaternion symplectic_join(const SymplecticPair& p)
{
  return {p.first.real(), p.first.imag(), p.second.real(), -p.second.imag()};
}

/// Embedding of the complex plane spanned by {1, i}.
inline Quaternion embed(const Complex& c) { return Quaternion(c); }

}  // namespace qsnell

#endif  // QSNELL_QUATERNION_HPP
