#include <gtest/gtest.h>

#include "pellsurf/classmap.hpp"
#include "pellsurf/error.hpp"

using namespace pellsurf;

namespace {

SurfacePoint P(unsigned n, long a, long b, long c) { return {n, a, b, c}; }
QuadraticForm F(long a, long b, long c) { return {a, b, c}; }

}  // namespace

TEST(ClassMap, TildeForms) {
  auto k = make_context(-23);
  EXPECT_EQ(tilde_form(k, P(3, 2, 1, 1)), F(2, 3, 4));
  auto e = make_context(12);
  QuadraticForm t = tilde_form(e, identity(e, 3));
  EXPECT_EQ(t, F(1, 2, 1));
  EXPECT_EQ(t.discriminant(), 0);
  auto r = make_context(229);
  QuadraticForm f = tilde_form(r, P(3, 3, 92, 13));
  EXPECT_EQ(f, F(3, 197, 9));
  EXPECT_EQ(f.discriminant(), 229 * 13 * 13);
}

TEST(ClassMap, PointForms) {
  auto k = make_context(-23);
  EXPECT_EQ(point_to_form(k, P(3, 2, 1, 1)), F(2, 3, 4));
  EXPECT_EQ(point_to_form(k, identity(k, 3)), principal_form(k));
  auto r = make_context(229);
  EXPECT_EQ(underive_beta(P(3, 3, 92, 13)), 2);
  EXPECT_EQ(point_to_form(r, P(3, 3, 92, 13)), F(3, 5, -17));
  EXPECT_EQ(point_to_form(r, identity(r, 3)), principal_form(r));
}

TEST(ClassMap, PointIdeals) {
  auto k = make_context(-23);
  IntegralIdeal a = point_ideal(k, P(3, 2, 1, 1));
  EXPECT_EQ(a, (IntegralIdeal{2, 1, 1}));
  EXPECT_EQ(ideal_pow(k, a, 3), ideal_from_element(k, {1, 1}));
  EXPECT_EQ(point_ideal(k, identity(k, 3)), unit_ideal());
  IntegralIdeal b = point_ideal(k, P(3, 6, -11, 5));
  EXPECT_EQ(b.a, 6);
  EXPECT_EQ(b.b, mod(BigInt(-11) * *mod_inverse(5, 6), 6));
  EXPECT_EQ(ideal_pow(k, b, 3), ideal_from_element(k, {-11, 5}));
}

TEST(ClassMap, ClassesOfPoints) {
  auto k = make_context(-23);
  auto g = class_group(k);
  EXPECT_EQ(class_of_point(g, k, identity(k, 3)), g.identity_index());
  std::size_t c211 = class_of_point(g, k, P(3, 2, 1, 1));
  EXPECT_EQ(g.reps()[c211], F(2, -1, 3));
  EXPECT_NE(c211, g.identity_index());
  std::size_t c312 = class_of_point(g, k, P(3, 3, 1, 2));
  EXPECT_EQ(g.reps()[c312], F(2, 1, 3));
  EXPECT_EQ(g.mul(c211, c312), g.identity_index());
  EXPECT_EQ(class_of_point(g, k, P(3, 6, -11, 5)), g.identity_index());
}

TEST(ClassMap, NegativeAOnImaginaryFieldIsRejected) {
  auto k = make_context(-23);
  try {
    point_to_form(k, P(3, -2, 1, 1));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::NegativeA);
  }
}

TEST(ClassMap, KernelMembership) {
  auto k = make_context(-23);
  auto g = class_group(k);
  EXPECT_FALSE(kernel_test(g, k, P(3, 2, 1, 1)));
  EXPECT_TRUE(kernel_test(g, k, identity(k, 3)));
  EXPECT_TRUE(kernel_test(g, k, P(3, 6, -11, 5)));
  EXPECT_EQ(tilde_form(k, P(3, 6, -11, 5))(1, 1), 25);
}

TEST(ClassMap, KernelWitnesses) {
  auto k = make_context(-23);
  auto w = kernel_witness_search(k, P(3, 6, -11, 5), 10);
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(w.witness->first, 1);
  EXPECT_EQ(w.witness->second, 1);
  EXPECT_TRUE(w.conclusive);

  auto none = kernel_witness_search(k, P(3, 2, 1, 1), 10000);
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_TRUE(none.conclusive);
  // Direct check of the ellipse: 2T^2 + 3TU + 4U^2 = 1 has no solution.
  for (int t = -20; t <= 20; ++t) {
    for (int u = -20; u <= 20; ++u) EXPECT_NE(2 * t * t + 3 * t * u + 4 * u * u, 1);
  }

  auto degenerate = kernel_witness_search(k, identity(k, 3), 1);
  EXPECT_FALSE(degenerate.witness.has_value());
  EXPECT_FALSE(degenerate.conclusive);
}

TEST(ClassMap, KernelWitnessAgreesWithClassTest) {
  for (int delta : {-23, -47, -71}) {
    auto ctx = make_context(delta);
    auto g = class_group(ctx);
    for (unsigned n : {3u, 5u}) {
      for (auto const& p : enumerate_points(ctx, n, {8, 1, false, 1}).points) {
        if (p.c == 0) continue;
        auto s = kernel_witness_search(ctx, p, 1000000);
        ASSERT_TRUE(s.conclusive);
        EXPECT_EQ(s.witness.has_value(), kernel_test(g, ctx, p)) << delta << " " << format_point(p);
      }
    }
  }
}

TEST(ClassMap, ImageScans) {
  auto k = make_context(-23);
  auto g = class_group(k);
  auto r1 = image_scan(g, k, 3, 12, 1);
  EXPECT_TRUE(r1.surjective);
  EXPECT_EQ(r1.hit_classes.size(), 3u);
  std::vector<SurfacePoint> small{identity(k, 3), P(3, 2, 1, 1), P(3, 2, 2, -1)};
  EXPECT_TRUE(image_of_points(g, k, 3, small).surjective);

  auto r = make_context(229);
  auto h = class_group(r);
  EXPECT_TRUE(image_scan(h, r, 3, 10, 100).surjective);

  auto e = make_context(12);
  auto he = class_group(e);
  auto r3 = image_scan(he, e, 3, 10, 60);
  EXPECT_TRUE(r3.surjective);
  EXPECT_EQ(r3.hit_classes, std::vector<std::size_t>{he.identity_index()});
}

TEST(ClassMap, SuitesAcrossFields) {
  for (int delta : {-23, -47, -4, -3, 229, 12, 5, 145}) {
    auto ctx = make_context(delta);
    auto g = class_group(ctx);
    for (unsigned n : {1u, 2u, 3u, 4u, 5u}) {
      auto pts = enumerate_points(ctx, n, {n <= 3 ? 10 : 4, 80, false, 1}).points;
      auto hom = homomorphism_suite(g, ctx, n, pts);
      EXPECT_TRUE(hom.passed()) << delta << " n=" << n << " "
                                << (hom.failures.empty() ? "" : hom.failures[0]);
      auto orc = oracle_suite(ctx, n, pts);
      EXPECT_TRUE(orc.passed()) << delta << " n=" << n << " "
                                << (orc.failures.empty() ? "" : orc.failures[0]);
    }
  }
}

TEST(ClassMap, FormInvariantsOnEnumeratedPoints) {
  for (int delta : {-23, -47, -84, 229, 12, 145}) {
    auto ctx = make_context(delta);
    for (unsigned n : {2u, 3u}) {
      for (auto const& p : enumerate_points(ctx, n, {12, 80, false, 1}).points) {
        QuadraticForm t = tilde_form(ctx, p);
        EXPECT_EQ(t.discriminant(), ctx.delta() * p.c * p.c);
        QuadraticForm q = point_to_form(ctx, p);
        EXPECT_EQ(q.discriminant(), ctx.delta());
        EXPECT_TRUE(q.is_primitive());
        if (ctx.is_imaginary()) {
          EXPECT_GT(q.a, 0);
        }
        // B = beta C mod A.
        EXPECT_EQ(mod(p.b - underive_beta(p) * p.c, abs(p.a)), 0);
      }
    }
  }
}
