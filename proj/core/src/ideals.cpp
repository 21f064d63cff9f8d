#include "pellsurf/ideals.hpp"

#include <array>
#include <vector>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

std::array<QuadInt, 2> basis(IntegralIdeal const& i) {
  return {QuadInt{i.a, 0}, QuadInt{i.b, i.c}};
}

}  // namespace

IntegralIdeal unit_ideal() { return {1, 0, 1}; }

IntegralIdeal lattice_hnf(std::span<QuadInt const> generators) {
  // Row (x, y) holds the current omega-gcd; `a` accumulates the integers
  // eliminated from the omega column.
  BigInt x = 0, y = 0, a = 0;
  for (auto const& g : generators) {
    if (g.c == 0) {
      a = gcd(a, g.b);
      continue;
    }
    if (y == 0) {
      x = g.b;
      y = g.c;
      continue;
    }
    ExtendedGcd e = xgcd(y, g.c);
    BigInt nx = e.x * x + e.y * g.b;
    // (g.c/e.g)*row - (y/e.g)*gen has zero omega part.
    BigInt residue = (g.c / e.g) * x - (y / e.g) * g.b;
    a = gcd(a, residue);
    x = std::move(nx);
    y = e.g;
  }
  if (a == 0 || y == 0) {
    throw Error(Errc::InvalidArgument, "generators do not span a full-rank lattice");
  }
  if (y < 0) {
    x = -x;
    y = -y;
  }
  return {a, mod(x, a), y};
}

bool is_ideal(FieldContext const& ctx, IntegralIdeal const& i) {
  if (i.a <= 0 || i.c <= 0 || i.b < 0 || i.b >= i.a) return false;
  QuadInt const omega{0, 1};
  for (auto const& v : basis(i)) {
    QuadInt w = qi_mul(ctx, v, omega);
    // w = s*a + t*(b + c omega) with integers s, t.
    if (w.c % i.c != 0) return false;
    BigInt t = w.c / i.c;
    if ((w.b - t * i.b) % i.a != 0) return false;
  }
  return true;
}

IntegralIdeal ideal_from_element(FieldContext const& ctx, QuadInt const& alpha) {
  if (alpha.b == 0 && alpha.c == 0) {
    throw Error(Errc::ZeroElement, "the zero element does not generate an ideal");
  }
  std::array<QuadInt, 2> gens{alpha, qi_mul(ctx, alpha, QuadInt{0, 1})};
  return lattice_hnf(gens);
}

IntegralIdeal ideal_mul(FieldContext const& ctx, IntegralIdeal const& i1,
                        IntegralIdeal const& i2) {
  std::vector<QuadInt> gens;
  gens.reserve(4);
  for (auto const& x : basis(i1)) {
    for (auto const& y : basis(i2)) gens.push_back(qi_mul(ctx, x, y));
  }
  return lattice_hnf(gens);
}

IntegralIdeal ideal_pow(FieldContext const& ctx, IntegralIdeal const& i, unsigned k) {
  IntegralIdeal result = unit_ideal();
  IntegralIdeal base = i;
  while (k > 0) {
    if (k & 1U) result = ideal_mul(ctx, result, base);
    k >>= 1;
    if (k > 0) base = ideal_mul(ctx, base, base);
  }
  return result;
}

IntegralIdeal ideal_sum(FieldContext const&, IntegralIdeal const& i1, IntegralIdeal const& i2) {
  auto b1 = basis(i1);
  auto b2 = basis(i2);
  std::array<QuadInt, 4> gens{b1[0], b1[1], b2[0], b2[1]};
  return lattice_hnf(gens);
}

IntegralIdeal ideal_conj(FieldContext const& ctx, IntegralIdeal const& i) {
  auto b = basis(i);
  std::array<QuadInt, 2> gens{b[0], qi_conj(ctx, b[1])};
  return lattice_hnf(gens);
}

BigInt ideal_norm(IntegralIdeal const& i) { return i.a * i.c; }

QuadraticForm ideal_to_form(FieldContext const& ctx, IntegralIdeal const& i) {
  if (i.c != 1) {
    throw Error(Errc::NonPrimitiveIdeal,
                "ideal has content " + to_string(i.c) + "; divide it out first");
  }
  BigInt n = q0_eval(ctx, i.b, 1);
  if (n % i.a != 0) {
    throw Error(Errc::InvalidArgument, "lattice is not an ideal of the maximal order");
  }
  return {i.a, 2 * i.b + ctx.sigma(), n / i.a};
}

}  // namespace pellsurf
