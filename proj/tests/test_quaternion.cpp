#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "qsnell/errors.hpp"
#include "qsnell/quaternion.hpp"

using namespace qsnell;

namespace
{

constexpr double kEps = std::numeric_limits<double>::epsilon();

const Quaternion i = Quaternion::unit_i();
const Quaternion j = Quaternion::unit_j();
const Quaternion k = Quaternion::unit_k();

double max_abs(const Quaternion& q)
{
  return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

Quaternion draw(std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double w = u(rng);
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {w, x, y, z};
}

}  // namespace

TEST_CASE("defining relations of the Hamilton product")
{
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
  CHECK(i * j * k == Quaternion(-1.0));
}

TEST_CASE("q times its conjugate is the squared norm")
{
  // (1+i+j+k)(1-i-j-k): expanded by hand, every imaginary cross term cancels
  const Quaternion q{1, 1, 1, 1};
  CHECK(q * Quaternion{1, -1, -1, -1} == Quaternion(4.0));
  CHECK(q * conjugate(q) == Quaternion(norm(q) * norm(q)));
}

TEST_CASE("conjugate")
{
  CHECK(conjugate(i) == -i);
  CHECK(conjugate(Quaternion(3.0)) == Quaternion(3.0));
  CHECK(conjugate(i * j) == -k);
  CHECK(conjugate(j) * conjugate(i) == -k);
}

TEST_CASE("norm")
{
  CHECK(norm(i + j) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(norm(Quaternion{}) == 0.0);
  CHECK(norm(Quaternion{0, 0, -5, 0}) == 5.0);
}

TEST_CASE("inverse")
{
  CHECK(inverse(i) == -i);
  CHECK(inverse(Quaternion(2.0)) == Quaternion(0.5));
  CHECK(inverse(Quaternion{1, 1, 1, 1}) == Quaternion{0.25, -0.25, -0.25, -0.25});
  CHECK_THROWS_AS(inverse(Quaternion{}), DomainError);
}

TEST_CASE("symplectic decomposition")
{
  // k = j (-i)
  CHECK(symplectic_split(k) == SymplecticPair{{0, 0}, {0, -1}});
  CHECK(j * embed({0, -1}) == k);
  CHECK(symplectic_split(Quaternion{1, 1, 0, 0}) == SymplecticPair{{1, 1}, {0, 0}});

  const Quaternion q{0.3, -1.2, 2.5, 0.7};
  const SymplecticPair p = symplectic_split(q);
  const Quaternion rebuilt = embed(p.first) + j * embed(p.second);
  CHECK(max_abs(rebuilt - q) == 0.0);
}

TEST_CASE("complex embedding is a homomorphism")
{
  const Complex a(1.5, -0.25);
  const Complex b(-0.75, 2.0);
  CHECK(embed(a) + embed(b) == embed(a + b));
  CHECK(max_abs(embed(a) * embed(b) - embed(a * b)) <= 2 * kEps * std::abs(a) * std::abs(b));
}

TEST_CASE("algebra laws on random samples")
{
  std::mt19937_64 rng(20261019);
  for (int n = 0; n < 1000; ++n)
  {
    const Quaternion a = draw(rng);
    const Quaternion b = draw(rng);
    const Quaternion c = draw(rng);

    const double scale = norm(a) * norm(b) * norm(c);
    CHECK(max_abs((a * b) * c - a * (b * c)) <= 8 * kEps * scale);

    const double nn = norm(a) * norm(b);
    CHECK(std::abs(norm(a * b) - nn) <= 4 * kEps * nn);

    CHECK(max_abs(a * inverse(a) - Quaternion(1.0)) <= 8 * kEps);
    CHECK(max_abs(conjugate(a * b) - conjugate(b) * conjugate(a)) <= 8 * kEps * nn);

    CHECK(symplectic_join(symplectic_split(a)) == a);

    const Complex z(b.w, b.x);
    CHECK(j * embed(z) == embed(std::conj(z)) * j);

    const Quaternion left = i * a;
    const Quaternion right = a * i;
    CHECK(left.w == right.w);
    CHECK(left.x == right.x);
    CHECK(left.y == -right.y);
    CHECK(left.z == -right.z);
  }
}
