#include "pellsurf/classmap.hpp"

#include <algorithm>
#include <set>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

std::string show(SurfacePoint const& p) { return "(" + format_point(p) + ")"; }

}  // namespace

QuadraticForm tilde_form(FieldContext const& ctx, SurfacePoint const& p) {
  if (ctx.is_imaginary() && p.a < 0) {
    throw Error(Errc::NegativeLeadingCoefficient, show(p) + ": A < 0 with delta < 0");
  }
  QuadraticForm f{p.a, 2 * p.b + ctx.sigma() * p.c, pow(p.a, p.n - 1)};
  if (f.discriminant() != ctx.delta() * p.c * p.c) {
    throw Error(Errc::Internal, show(p) + ": tilde form discriminant is not delta C^2");
  }
  return f;
}

BigInt underive_beta(SurfacePoint const& p) {
  BigInt modulus = abs(p.a);
  if (modulus == 1) return 0;
  auto inv = mod_inverse(p.c, modulus);
  if (!inv) {
    throw Error(Errc::Internal, show(p) + ": C is not invertible modulo A");
  }
  return mod(p.b * *inv, modulus);
}

QuadraticForm point_to_form(FieldContext const& ctx, SurfacePoint const& p) {
  if (ctx.is_imaginary() && p.a < 0) {
    throw Error(Errc::NegativeA, show(p) + ": the class map needs A > 0 when delta < 0");
  }
  BigInt beta = underive_beta(p);
  BigInt n0 = q0_eval(ctx, beta, 1);
  if (n0 % p.a != 0) {
    throw Error(Errc::Internal, show(p) + ": Q0(beta, 1) is not divisible by A");
  }
  return {p.a, 2 * beta + ctx.sigma(), n0 / p.a};
}

IntegralIdeal point_ideal(FieldContext const& ctx, SurfacePoint const& p) {
  if (ctx.is_imaginary() && p.a < 0) {
    throw Error(Errc::NegativeA, show(p) + ": the class map needs A > 0 when delta < 0");
  }
  return {abs(p.a), underive_beta(p), 1};
}

std::size_t class_of_point(FormClassGroup const& g, FieldContext const& ctx,
                           SurfacePoint const& p) {
  if (g.delta() != ctx.delta()) {
    throw Error(Errc::DiscMismatch, "class group and field have different discriminants");
  }
  std::size_t k = class_index_of(g, point_to_form(ctx, p));
  if (g.power(k, p.n) != g.identity_index()) {
    throw Error(Errc::Internal, show(p) + ": image class is not n-torsion");
  }
  return k;
}

bool kernel_test(FormClassGroup const& g, FieldContext const& ctx, SurfacePoint const& p) {
  return class_of_point(g, ctx, p) == g.identity_index();
}

KernelWitnessSearch kernel_witness_search(FieldContext const& ctx, SurfacePoint const& p,
                                          BigInt const& bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "search bound must be >= 1");
  KernelWitnessSearch out;
  if (p.c == 0) return out;

  QuadraticForm f = tilde_form(ctx, p);
  BigInt target = p.c * p.c;
  out.t_bound = bound;
  out.u_bound = bound;
  if (ctx.is_imaginary()) {
    // 4a f = (2aT + bU)^2 + |D| U^2 and 4c f = (2cU + bT)^2 + |D| T^2 with
    // D = delta C^2, so f = C^2 forces U^2 <= 4A / |delta|, T^2 <= 4A^(n-1) / |delta|.
    BigInt abs_d = -ctx.delta();
    BigInt u_max = isqrt(4 * f.a / abs_d);
    BigInt t_max = isqrt(4 * f.c / abs_d);
    out.conclusive = bound >= u_max && bound >= t_max;
    out.u_bound = std::min(bound, u_max);
    out.t_bound = std::min(bound, t_max);
  }
  for (BigInt u = 0; u <= out.u_bound; ++u) {
    for (BigInt t = -out.t_bound; t <= out.t_bound; ++t) {
      if (u == 0 && t <= 0) continue;
      if (gcd(t, u) != 1) continue;
      if (f(t, u) == target) {
        out.witness = std::make_pair(t, u);
        return out;
      }
    }
  }
  return out;
}

CoverageReport image_of_points(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                               std::span<SurfacePoint const> points) {
  CoverageReport report;
  report.delta = ctx.delta();
  report.n = n;
  report.points = points.size();
  std::set<std::size_t> hit;
  for (auto const& p : points) hit.insert(class_of_point(g, ctx, p));
  report.hit_classes.assign(hit.begin(), hit.end());
  report.torsion = torsion_subgroup(g, n);
  report.surjective = report.hit_classes == report.torsion;
  return report;
}

CoverageReport image_scan(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                          BigInt const& max_a, BigInt const& box, unsigned threads) {
  EnumerationOptions opts{max_a, box, false, threads};
  EnumerationReport pts = enumerate_points(ctx, n, opts);
  CoverageReport report = image_of_points(g, ctx, n, pts.points);
  report.max_a = max_a;
  report.box = box;
  return report;
}

SuiteReport homomorphism_suite(FormClassGroup const& g, FieldContext const& ctx, unsigned n,
                               std::span<SurfacePoint const> points) {
  SuiteReport report;
  report.name = "homomorphism";
  std::vector<std::optional<std::size_t>> cls;
  cls.reserve(points.size());
  for (auto const& p : points) {
    ++report.checks;
    try {
      std::size_t k = class_index_of(g, point_to_form(ctx, p));
      if (g.power(k, n) != g.identity_index()) {
        report.fail("torsion: class of " + show(p) + " has order not dividing n");
      }
      cls.emplace_back(k);
    } catch (Error const& err) {
      report.fail("class of " + show(p) + ": " + err.what());
      cls.emplace_back(std::nullopt);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (!cls[i] || !cls[j]) continue;
      ++report.checks;
      try {
        SurfacePoint s = add(ctx, points[i], points[j]);
        std::size_t k = class_of_point(g, ctx, s);
        if (k != g.mul(*cls[i], *cls[j])) {
          report.fail("c(" + format_point(points[i]) + " + " + format_point(points[j]) +
                      ") != c(P) c(Q)");
        }
      } catch (Error const& err) {
        report.fail(show(points[i]) + " + " + show(points[j]) + ": " + err.what());
      }
    }
  }
  return report;
}

SuiteReport oracle_suite(FieldContext const& ctx, unsigned n,
                         std::span<SurfacePoint const> points) {
  SuiteReport report;
  report.name = "oracle";
  for (auto const& p : points) {
    try {
      IntegralIdeal a = point_ideal(ctx, p);
      ++report.checks;
      if (!(ideal_pow(ctx, a, n) == ideal_from_element(ctx, p.element()))) {
        report.fail(show(p) + ": point_ideal^n != (B + C omega)");
      }
      if (n >= 2) {
        ++report.checks;
        IntegralIdeal s = ideal_sum(ctx, ideal_from_element(ctx, p.element()),
                                    ideal_from_element(ctx, qi_conj(ctx, p.element())));
        if (!(s == unit_ideal())) {
          report.fail(show(p) + ": (alpha) + (alpha') is not the unit ideal");
        }
      }
      if (p.a > 0) {
        ++report.checks;
        if (!is_equivalent(point_to_form(ctx, p), ideal_to_form(ctx, a))) {
          report.fail(show(p) + ": Q_P is not equivalent to the ideal form");
        }
      }
    } catch (Error const& err) {
      report.fail(show(p) + ": " + err.what());
    }
  }
  return report;
}

}  // namespace pellsurf
