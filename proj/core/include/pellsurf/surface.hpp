#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellsurf/qfield.hpp"

namespace pellsurf {

// A primitive integer point (A, B, C) on S_n : Q0(B, C) = A^n.
//
// Plain value; point_check is the single validation point. Each point stands
// for the coset (B + C omega) N^n, so for even n only A > 0 is used, and for
// n = 1 additionally gcd(A, delta) = 1.
struct SurfacePoint {
  unsigned n = 1;
  BigInt a;
  BigInt b;
  BigInt c;

  QuadInt element() const { return {b, c}; }
  friend bool operator==(SurfacePoint const&, SurfacePoint const&) = default;
};

std::string format_point(SurfacePoint const& p);  // "A,B,C"

// Solutions of X^2 - delta Y^2 = 4 Z^n with gcd(X, Z) = 1.
struct YamamotoPoint {
  BigInt x;
  BigInt y;
  BigInt z;

  friend bool operator==(YamamotoPoint const&, YamamotoPoint const&) = default;
};

// Throws NotOnSurface, NotPrimitive, BadSign, S1GcdViolation, InvalidArgument (n == 0).
SurfacePoint point_check(FieldContext const& ctx, unsigned n, BigInt const& a,
                         BigInt const& b, BigInt const& c);

SurfacePoint identity(FieldContext const& ctx, unsigned n);
SurfacePoint negate(FieldContext const& ctx, SurfacePoint const& p);

struct AddTrace {
  BigInt u;  // B1 B2 + m C1 C2
  BigInt v;  // B1 C2 + B2 C1 + sigma C1 C2
  BigInt d;  // gcd(u, v) = e^n
  BigInt e;
  SurfacePoint sum;
};

// Group law with the intermediate quantities exposed. Throws MixedLevels,
// GcdNotPower (a broken invariant).
AddTrace add_traced(FieldContext const& ctx, SurfacePoint const& p1, SurfacePoint const& p2);
SurfacePoint add(FieldContext const& ctx, SurfacePoint const& p1, SurfacePoint const& p2);
SurfacePoint scalar_mul(FieldContext const& ctx, SurfacePoint const& p, BigInt k);

YamamotoPoint to_yamamoto(FieldContext const& ctx, SurfacePoint const& p);
// Throws NotOnYamamoto, ParityViolation, plus point_check errors.
SurfacePoint from_yamamoto(FieldContext const& ctx, unsigned n, YamamotoPoint const& y);

// iota_{m -> n}: (A, B, C) -> (A, B', C') with B' + C' omega = (B + C omega)^(n/m).
// Throws NotDivisor.
SurfacePoint lift(FieldContext const& ctx, SurfacePoint const& p, unsigned n);

enum class NewpointVerdict { ProvenNew, Inconclusive };

inline constexpr std::int64_t kMaxFactorBound = 1'000'000'000'000;

struct NewpointResult {
  NewpointVerdict verdict;
  std::vector<BigInt> primes;  // prime divisors q of |A|
  std::optional<BigInt> witness_prime;  // q with 2B + sigma C not a p-th power mod q
};

// Necessary condition for P to lie in the image of iota_{n/p -> n}.
// Requires delta < -4 and p an odd prime dividing n; throws
// PreconditionViolated or FactorLimitExceeded (|A| > 10^12).
NewpointResult newpoint_test(FieldContext const& ctx, SurfacePoint const& p,
                             unsigned prime_p);

// x is a p-th power residue modulo the prime q.
bool is_power_residue(BigInt const& x, unsigned p, BigInt const& q);

std::vector<BigInt> prime_factors(BigInt const& x);  // trial division, distinct, ascending

}  // namespace pellsurf
