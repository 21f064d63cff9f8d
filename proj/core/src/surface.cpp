#include "pellsurf/surface.hpp"

#include "pellsurf/error.hpp"

namespace pellsurf {

std::string format_point(SurfacePoint const& p) {
  return to_string(p.a) + "," + to_string(p.b) + "," + to_string(p.c);
}

SurfacePoint point_check(FieldContext const& ctx, unsigned n, BigInt const& a,
                         BigInt const& b, BigInt const& c) {
  if (n == 0) throw Error(Errc::InvalidArgument, "level n must be >= 1");
  SurfacePoint p{n, a, b, c};
  if (q0_eval(ctx, b, c) != pow(a, n)) {
    throw Error(Errc::NotOnSurface, "(" + format_point(p) + ") is not on S_" +
                                        std::to_string(n) + ": Q0(B,C) = " +
                                        to_string(q0_eval(ctx, b, c)) + " != A^n");
  }
  if (gcd(b, c) != 1) {
    throw Error(Errc::NotPrimitive, "(" + format_point(p) + ") is not primitive");
  }
  if (n % 2 == 0 && a < 0) {
    throw Error(Errc::BadSign, "(" + format_point(p) + "): A must be positive for even n");
  }
  if (n == 1 && gcd(a, ctx.delta()) != 1) {
    throw Error(Errc::S1GcdViolation,
                "(" + format_point(p) + "): points on S_1 need gcd(A, delta) = 1");
  }
  return p;
}

SurfacePoint identity(FieldContext const&, unsigned n) { return {n, 1, 1, 0}; }

SurfacePoint negate(FieldContext const& ctx, SurfacePoint const& p) {
  BigInt b = p.b + ctx.sigma() * p.c;
  if (p.a > 0) return {p.n, p.a, std::move(b), -p.c};
  return {p.n, p.a, -b, p.c};
}

AddTrace add_traced(FieldContext const& ctx, SurfacePoint const& p1, SurfacePoint const& p2) {
  if (p1.n != p2.n) {
    throw Error(Errc::MixedLevels, "cannot add points of levels " + std::to_string(p1.n) +
                                       " and " + std::to_string(p2.n));
  }
  unsigned n = p1.n;
  QuadInt prod = qi_mul(ctx, p1.element(), p2.element());
  BigInt d = gcd(prod.b, prod.c);
  auto e = integer_nth_root(d, n);
  if (!e) {
    throw Error(Errc::GcdNotPower, "gcd " + to_string(d) + " of (" + format_point(p1) +
                                       ") + (" + format_point(p2) + ") is not an n-th power");
  }
  BigInt e2 = *e * *e;
  BigInt aa = p1.a * p2.a;
  if (aa % e2 != 0) {
    throw Error(Errc::Internal, "A1 A2 not divisible by e^2");
  }
  SurfacePoint sum{n, aa / e2, prod.b / d, prod.c / d};
  return {std::move(prod.b), std::move(prod.c), std::move(d), std::move(*e), std::move(sum)};
}

SurfacePoint add(FieldContext const& ctx, SurfacePoint const& p1, SurfacePoint const& p2) {
  return add_traced(ctx, p1, p2).sum;
}

SurfacePoint scalar_mul(FieldContext const& ctx, SurfacePoint const& p, BigInt k) {
  SurfacePoint base = p;
  if (k < 0) {
    base = negate(ctx, p);
    k = -k;
  }
  SurfacePoint result = identity(ctx, p.n);
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) result = add(ctx, result, base);
    k >>= 1;
    if (k > 0) base = add(ctx, base, base);
  }
  return result;
}

YamamotoPoint to_yamamoto(FieldContext const& ctx, SurfacePoint const& p) {
  return {2 * p.b + ctx.sigma() * p.c, p.c, p.a};
}

SurfacePoint from_yamamoto(FieldContext const& ctx, unsigned n, YamamotoPoint const& y) {
  if (n == 0) throw Error(Errc::InvalidArgument, "level n must be >= 1");
  if (y.x * y.x - ctx.delta() * y.y * y.y != 4 * pow(y.z, n) || gcd(y.x, y.z) != 1) {
    throw Error(Errc::NotOnYamamoto, "(" + to_string(y.x) + "," + to_string(y.y) + "," +
                                         to_string(y.z) +
                                         ") violates X^2 - delta Y^2 = 4 Z^n, gcd(X,Z) = 1");
  }
  BigInt t = y.x - ctx.sigma() * y.y;
  if (t % 2 != 0) {
    throw Error(Errc::ParityViolation, "X - sigma Y is odd");
  }
  return point_check(ctx, n, y.z, t / 2, y.y);
}

SurfacePoint lift(FieldContext const& ctx, SurfacePoint const& p, unsigned n) {
  if (n == 0 || n % p.n != 0) {
    throw Error(Errc::NotDivisor, "level " + std::to_string(p.n) + " does not divide " +
                                      std::to_string(n));
  }
  QuadInt alpha = qi_pow(ctx, p.element(), n / p.n);
  // (+-A)^n agree for even n; keep the positive representative.
  BigInt a = (n % 2 == 0) ? abs(p.a) : p.a;
  try {
    return point_check(ctx, n, a, alpha.b, alpha.c);
  } catch (Error const& err) {
    throw Error(Errc::Internal, std::string("lift produced an invalid point: ") + err.what());
  }
}

std::vector<BigInt> prime_factors(BigInt const& x) {
  std::vector<BigInt> out;
  BigInt v = abs(x);
  if (auto small = to_int64(v)) {
    std::int64_t w = *small;
    for (std::int64_t q = 2; q <= w / q; ++q) {
      if (w % q == 0) {
        out.emplace_back(q);
        while (w % q == 0) w /= q;
      }
    }
    if (w > 1) out.emplace_back(w);
    return out;
  }
  for (BigInt q = 2; q * q <= v; ++q) {
    if (v % q == 0) {
      out.push_back(q);
      while (v % q == 0) v /= q;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_power_residue(BigInt const& x, unsigned p, BigInt const& q) {
  BigInt r = mod(x, q);
  if (r == 0) return true;
  BigInt qm1 = q - 1;
  BigInt exponent = qm1 / gcd(BigInt(p), qm1);
  return pow_mod(r, exponent, q) == 1;
}

namespace {

bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

NewpointResult newpoint_test(FieldContext const& ctx, SurfacePoint const& p, unsigned prime_p) {
  if (ctx.delta() >= -4) {
    throw Error(Errc::PreconditionViolated, "newpoint criterion needs delta < -4");
  }
  if (prime_p % 2 == 0 || !is_small_prime(prime_p) || p.n % prime_p != 0) {
    throw Error(Errc::PreconditionViolated,
                "p = " + std::to_string(prime_p) + " must be an odd prime dividing n = " +
                    std::to_string(p.n));
  }
  if (abs(p.a) > kMaxFactorBound) {
    throw Error(Errc::FactorLimitExceeded, "|A| exceeds the trial-division bound 10^12");
  }
  NewpointResult result{NewpointVerdict::Inconclusive, prime_factors(p.a), std::nullopt};
  BigInt x = 2 * p.b + ctx.sigma() * p.c;
  for (auto const& q : result.primes) {
    if (!is_power_residue(x, prime_p, q)) {
      result.verdict = NewpointVerdict::ProvenNew;
      result.witness_prime = q;
      break;
    }
  }
  return result;
}

}  // namespace pellsurf
