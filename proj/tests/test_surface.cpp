#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pellsurf/error.hpp"
#include "pellsurf/search.hpp"
#include "pellsurf/surface.hpp"

using namespace pellsurf;

namespace {

SurfacePoint P(unsigned n, long a, long b, long c) { return {n, a, b, c}; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST(Surface, PointCheck) {
  auto k = make_context(-23);
  EXPECT_EQ(point_check(k, 3, 2, 1, 1), P(3, 2, 1, 1));
  EXPECT_EQ(point_check(k, 3, 3, 1, 2), P(3, 3, 1, 2));
  // Q0(37, 6) = 1807 while 13^3 = 2197.
  EXPECT_EQ(q0_eval(k, 37, 6), 1807);
  EXPECT_EQ(code_of([&] { point_check(k, 3, 13, 37, 6); }), Errc::NotOnSurface);
  auto r = make_context(229);
  EXPECT_NO_THROW(point_check(r, 3, 9, 93, -11));
  EXPECT_EQ(code_of([&] { point_check(k, 3, 8, 2, 2); }), Errc::NotOnSurface);
  EXPECT_EQ(code_of([&] { point_check(k, 3, 8, 8, 8); }), Errc::NotPrimitive);
  EXPECT_EQ(code_of([&] { point_check(r, 2, -3, 5, 0); }), Errc::NotOnSurface);
  EXPECT_EQ(code_of([&] { point_check(r, 2, -1, 1, 0); }), Errc::BadSign);
  EXPECT_EQ(code_of([&] { point_check(k, 0, 1, 1, 0); }), Errc::InvalidArgument);
  // Q0(1, 1) = -2 for delta = 12, and gcd(2, 12) != 1.
  auto e = make_context(12);
  EXPECT_EQ(code_of([&] { point_check(e, 1, -2, 1, 1); }), Errc::S1GcdViolation);
}

TEST(Surface, NegativeAOddLevel) {
  auto r = make_context(229);
  // Q0(B, C) = -27 for A = -3 at n = 3.
  auto pts = enumerate_points(r, 3, {3, 100, false, 1}).points;
  bool saw_negative = false;
  for (auto const& p : pts) {
    if (p.a < 0) {
      saw_negative = true;
      EXPECT_EQ(q0_eval(r, p.b, p.c), pow(p.a, 3));
    }
  }
  EXPECT_TRUE(saw_negative);
}

TEST(Surface, IdentityAndNegation) {
  auto k = make_context(-23);
  EXPECT_EQ(identity(k, 3), P(3, 1, 1, 0));
  EXPECT_EQ(negate(k, P(3, 2, 1, 1)), P(3, 2, 2, -1));
  EXPECT_EQ(q0_eval(k, 2, -1), 8);
  EXPECT_EQ(negate(k, identity(k, 3)), identity(k, 3));
  auto r = make_context(229);
  EXPECT_EQ(negate(r, P(3, 3, 17, -2)), P(3, 3, 15, 2));
  EXPECT_EQ(q0_eval(r, 15, 2), 27);
}

TEST(Surface, ThreePointIdentityTrace) {
  auto r = make_context(229);
  AddTrace t1 = add_traced(r, P(3, 3, 92, 13), P(3, 3, 17, -2));
  EXPECT_EQ(t1.u, 82);
  EXPECT_EQ(t1.v, 11);
  EXPECT_EQ(t1.d, 1);
  EXPECT_EQ(t1.sum, P(3, 9, 82, 11));
  AddTrace t2 = add_traced(r, t1.sum, P(3, 9, 93, -11));
  EXPECT_EQ(t2.u, 729);
  EXPECT_EQ(t2.v, 0);
  EXPECT_EQ(t2.e, 9);
  EXPECT_EQ(t2.sum, identity(r, 3));
}

TEST(Surface, AdditionExamples) {
  auto k = make_context(-23);
  AddTrace t = add_traced(k, P(3, 2, 1, 1), P(3, 2, 2, -1));
  EXPECT_EQ(t.u, 8);
  EXPECT_EQ(t.v, 0);
  EXPECT_EQ(t.d, 8);
  EXPECT_EQ(t.sum, identity(k, 3));
  AddTrace s = add_traced(k, P(3, 2, 1, 1), P(3, 3, 1, 2));
  EXPECT_EQ(s.u, -11);
  EXPECT_EQ(s.v, 5);
  EXPECT_EQ(s.d, 1);
  EXPECT_EQ(s.sum, P(3, 6, -11, 5));
  EXPECT_EQ(code_of([&] { add(k, P(3, 2, 1, 1), P(1, 1, 1, 0)); }), Errc::MixedLevels);
}

TEST(Surface, ScalarMultiples) {
  auto k = make_context(-23);
  SurfacePoint p = P(3, 2, 1, 1);
  EXPECT_EQ(scalar_mul(k, p, 0), identity(k, 3));
  EXPECT_EQ(scalar_mul(k, p, 1), p);
  EXPECT_EQ(scalar_mul(k, p, 2), P(3, 4, -5, 3));
  EXPECT_EQ(q0_eval(k, -5, 3), 64);
  EXPECT_EQ(scalar_mul(k, p, -1), negate(k, p));
  for (int j = -6; j <= 6; ++j) {
    SurfacePoint lhs = scalar_mul(k, p, j + 1);
    EXPECT_EQ(lhs, add(k, scalar_mul(k, p, j), p)) << j;
  }
}

TEST(Surface, Yamamoto) {
  auto k = make_context(-23);
  EXPECT_EQ(to_yamamoto(k, P(3, 2, 1, 1)), (YamamotoPoint{3, 1, 2}));
  EXPECT_EQ(BigInt(9 + 23), 4 * pow(BigInt(2), 3));
  auto e = make_context(12);
  EXPECT_EQ(to_yamamoto(e, identity(e, 3)), (YamamotoPoint{2, 0, 1}));
  EXPECT_EQ(from_yamamoto(k, 3, {3, 1, 2}), P(3, 2, 1, 1));
  EXPECT_EQ(code_of([&] { from_yamamoto(k, 3, {3, 1, 3}); }), Errc::NotOnYamamoto);
  auto r = make_context(229);
  EXPECT_EQ(code_of([&] { from_yamamoto(r, 2, {1, 1, 0}); }), Errc::NotOnYamamoto);
}

TEST(Surface, YamamotoOtherFields) {
  auto f = make_context(5);
  EXPECT_EQ(from_yamamoto(f, 3, {3, 1, 1}), P(3, 1, 1, 1));
  auto e = make_context(12);
  EXPECT_EQ(from_yamamoto(e, 3, {4, 1, 1}), P(3, 1, 2, 1));
  for (auto const& p : enumerate_points(e, 3, {5, 50, false, 1}).points) {
    EXPECT_EQ(from_yamamoto(e, 3, to_yamamoto(e, p)), p);
  }
}

TEST(Surface, Lifts) {
  auto k = make_context(-23);
  SurfacePoint s1 = point_check(k, 1, 6, 1, -1);
  EXPECT_EQ(lift(k, s1, 3), P(3, 6, -11, 5));
  EXPECT_EQ(lift(k, P(3, 2, 1, 1), 3), P(3, 2, 1, 1));
  EXPECT_EQ(lift(k, P(3, 2, 1, 1), 6), P(6, 2, -5, 3));
  EXPECT_EQ(q0_eval(k, -5, 3), 64);
  EXPECT_EQ(code_of([&] { lift(k, P(3, 2, 1, 1), 4); }), Errc::NotDivisor);
  // Odd to even level on a real field keeps A > 0.
  auto r = make_context(229);
  for (auto const& p : enumerate_points(r, 3, {3, 100, false, 1}).points) {
    SurfacePoint q = lift(r, p, 6);
    EXPECT_GT(q.a, 0);
  }
}

TEST(Surface, NewpointCriterion) {
  auto k = make_context(-23);
  EXPECT_EQ(newpoint_test(k, P(3, 2, 1, 1), 3).verdict, NewpointVerdict::Inconclusive);
  EXPECT_EQ(newpoint_test(k, P(3, 3, 1, 2), 3).verdict, NewpointVerdict::Inconclusive);

  auto cubes = oracle::power_residues(3, 13);
  EXPECT_EQ(cubes, (std::set<std::int64_t>{0, 1, 5, 8, 12}));
  auto pts = enumerate_points(k, 3, {13, 1, false, 1}).points;
  int at_13 = 0;
  for (auto const& p : pts) {
    if (p.a != 13) continue;
    ++at_13;
    std::int64_t x = static_cast<std::int64_t>(mod(2 * p.b + p.c, 13));
    auto r = newpoint_test(k, p, 3);
    EXPECT_EQ(r.verdict == NewpointVerdict::ProvenNew, cubes.count(x) == 0) << format_point(p);
  }
  EXPECT_EQ(at_13, 4);

  EXPECT_EQ(code_of([&] { newpoint_test(k, P(3, 2, 1, 1), 2); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { newpoint_test(k, P(3, 2, 1, 1), 5); }), Errc::PreconditionViolated);
  auto g = make_context(-4);
  EXPECT_EQ(code_of([&] { newpoint_test(g, P(3, 1, 1, 0), 3); }), Errc::PreconditionViolated);
}

TEST(Surface, PowerResidues) {
  for (std::int64_t q : {7, 13, 19, 31}) {
    for (unsigned p : {3u, 5u}) {
      auto set = oracle::power_residues(p, q);
      for (std::int64_t x = -q; x < 2 * q; ++x) {
        EXPECT_EQ(is_power_residue(x, p, q), set.count(((x % q) + q) % q) == 1)
            << x << " " << p << " " << q;
      }
    }
  }
  EXPECT_EQ(prime_factors(360), (std::vector<BigInt>{2, 3, 5}));
  EXPECT_EQ(prime_factors(-13), std::vector<BigInt>{13});
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Surface, GroupLawProperties) {
  for (int delta : {-23, -47, 229, 12, 5}) {
    auto ctx = make_context(delta);
    for (unsigned n : {1u, 3u}) {
      auto pts = enumerate_points(ctx, n, {8, 60, false, 1}).points;
      for (auto const& p : pts) {
        for (auto const& q : pts) {
          AddTrace t = add_traced(ctx, p, q);
          // alpha1 alpha2 = (B3 + C3 omega) e^n exactly.
          QuadInt prod = qi_mul(ctx, p.element(), q.element());
          EXPECT_EQ(prod, qi_scale(t.sum.element(), pow(t.e, n)));
          EXPECT_EQ(t.d, pow(t.e, n));
          if (p.a > 0 && q.a > 0) {
            EXPECT_GT(t.sum.a, 0);
          }
          // iota is a homomorphism.
          unsigned up = 2 * n;
          EXPECT_EQ(lift(ctx, t.sum, up), add(ctx, lift(ctx, p, up), lift(ctx, q, up)))
              << delta << " " << format_point(p) << " " << format_point(q);
        }
        if (p.a > 0) {
          EXPECT_GT(negate(ctx, p).a, 0);
        }
        YamamotoPoint y = to_yamamoto(ctx, p);
        EXPECT_EQ(gcd(y.x, y.z), 1);
        EXPECT_EQ(y.x * y.x - ctx.delta() * y.y * y.y, 4 * pow(y.z, n));
      }
    }
  }
}
