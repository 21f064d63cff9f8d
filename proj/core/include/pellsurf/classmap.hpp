#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pellsurf/forms.hpp"
#include "pellsurf/ideals.hpp"
#include "pellsurf/search.hpp"
#include "pellsurf/surface.hpp"

namespace pellsurf {

// (A, 2B + sigma C, A^(n-1)), discriminant delta C^2; possibly imprimitive.
// Throws NegativeLeadingCoefficient for delta < 0 and A < 0.
QuadraticForm tilde_form(FieldContext const& ctx, SurfacePoint const& p);

// beta = B / C mod |A| as the least nonnegative residue.
BigInt underive_beta(SurfacePoint const& p);

// Q_P = (A, 2 beta + sigma, Q0(beta, 1) / A): primitive, discriminant delta.
// Throws NegativeA for delta < 0 and A < 0.
QuadraticForm point_to_form(FieldContext const& ctx, SurfacePoint const& p);

// The ideal (|A|, beta + omega) whose n-th power is (B + C omega).
IntegralIdeal point_ideal(FieldContext const& ctx, SurfacePoint const& p);

// Class of Q_P in g; throws Internal if the class is not n-torsion.
std::size_t class_of_point(FormClassGroup const& g, FieldContext const& ctx,
                           SurfacePoint const& p);

bool kernel_test(FormClassGroup const& g, FieldContext const& ctx, SurfacePoint const& p);

struct KernelWitnessSearch {
  std::optional<std::pair<BigInt, BigInt>> witness;  // coprime (T, U)
  bool conclusive = false;  // absence of a witness is a proof
  BigInt t_bound;           // region actually scanned
  BigInt u_bound;
};

// Scans |T|, |U| <= bound for A T^2 + (2B + sigma C) T U + A^(n-1) U^2 = C^2.
// For delta < 0 the scan is clipped to the ellipse and is conclusive once
// bound covers it. C == 0 returns no witness (kernel_test decides that case).
KernelWitnessSearch kernel_witness_search(FieldContext const& ctx, SurfacePoint const& p,
                                          BigInt const& bound);

struct CoverageReport {
  BigInt delta;
  unsigned n = 1;
  BigInt max_a;
  BigInt box;
  std::size_t points = 0;
  std::vector<std::size_t> hit_classes;
  std::vector<std::size_t> torsion;
  bool surjective = false;
};

CoverageReport image_of_points(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                               std::span<SurfacePoint const> points);

CoverageReport image_scan(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                          BigInt const& max_a, BigInt const& box, unsigned threads = 1);

// class_of_point(p + q) == class(p) * class(q) for all pairs, and every
// image class has order dividing n.
SuiteReport homomorphism_suite(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                               std::span<SurfacePoint const> points);

// For points with A > 0: point_to_form ~ ideal_to_form(point_ideal), and
// point_ideal^n == ideal_from_element(B + C omega).
SuiteReport oracle_suite(FieldContext const& ctx, unsigned n,
                         std::span<SurfacePoint const> points);

}  // namespace pellsurf
