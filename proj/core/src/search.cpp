#include "pellsurf/search.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

// Runs body(i) for i in [0, count) over `threads` workers; each worker owns a
// strided slice and its own output slot, so results are independent of the
// partitioning once merged in slot order.
template <typename Slot, typename Body>
std::vector<Slot> run_partitioned(std::size_t count, unsigned threads, Body body) {
  if (count < threads) threads = static_cast<unsigned>(std::max<std::size_t>(count, 1));
  std::vector<Slot> slots(count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = body(i);
    return slots;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) slots[i] = body(i);
    });
  }
  for (auto& w : workers) w.join();
  return slots;
}

std::vector<SurfacePoint> points_at_level(FieldContext const& ctx, unsigned n, BigInt const& a,
                                          BigInt const& box) {
  std::vector<SurfacePoint> out;
  BigInt target = pow(a, n);
  BigInt const& delta = ctx.delta();
  BigInt c_max;
  if (delta < 0) {
    if (target <= 0) return out;
    // |delta| C^2 <= 4 A^n.
    c_max = isqrt(4 * target / -delta);
  } else {
    c_max = box;
  }
  for (BigInt c = -c_max; c <= c_max; ++c) {
    // (2B + sigma C)^2 = 4 A^n + delta C^2.
    BigInt rhs = 4 * target + delta * c * c;
    if (rhs < 0 || !is_square(rhs)) continue;
    BigInt s = isqrt(rhs);
    std::vector<BigInt> roots{s};
    if (s != 0) roots.push_back(-s);
    for (auto const& x : roots) {
      BigInt t = x - ctx.sigma() * c;
      if (t % 2 != 0) continue;
      BigInt b = t / 2;
      if (delta > 0 && abs(b) > box) continue;
      if (gcd(b, c) != 1) continue;
      if (n == 1 && gcd(a, delta) != 1) continue;
      out.push_back(point_check(ctx, n, a, b, c));
    }
  }
  return out;
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool point_less(SurfacePoint const& x, SurfacePoint const& y) {
  return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
}

RawPoint raw(SurfacePoint const& p) { return {p.a, p.b, p.c}; }

void SuiteReport::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kMaxReportedFailures) failures.push_back(std::move(what));
}

void SuiteReport::merge(SuiteReport const& other) {
  checks += other.checks;
  failure_count += other.failure_count;
  for (auto const& f : other.failures) {
    if (failures.size() >= kMaxReportedFailures) break;
    failures.push_back(f);
  }
}

EnumerationReport enumerate_points(FieldContext const& ctx, unsigned n,
                                   EnumerationOptions const& options) {
  if (n == 0) throw Error(Errc::InvalidArgument, "level n must be >= 1");
  if (options.max_a < 1 || options.box < 1) {
    throw Error(Errc::InvalidArgument, "max_a and box must be >= 1");
  }
  EnumerationReport report;
  report.delta = ctx.delta();
  report.n = n;
  report.max_a = options.max_a;
  report.box = options.box;
  report.complete = ctx.is_imaginary();

  bool negatives = !ctx.is_imaginary() && n % 2 == 1 && !options.positive_only;
  std::vector<BigInt> levels;
  for (BigInt a = 1; a <= options.max_a; ++a) {
    levels.push_back(a);
    if (negatives) levels.push_back(-a);
  }

  auto slots = run_partitioned<std::vector<SurfacePoint>>(
      levels.size(), resolve_threads(options.threads),
      [&](std::size_t i) { return points_at_level(ctx, n, levels[i], options.box); });

  for (auto& slot : slots) {
    for (auto& p : slot) report.points.push_back(std::move(p));
  }
  std::sort(report.points.begin(), report.points.end(), point_less);
  report.points.erase(std::unique(report.points.begin(), report.points.end()),
                      report.points.end());
  for (auto const& p : report.points) ++report.count_by_abs_a[abs(p.a)];
  return report;
}

SuiteReport axiom_suite(FieldContext const& ctx, unsigned n, std::span<RawPoint const> points,
                        AxiomOptions const& options) {
  SuiteReport report;
  report.name = "axioms";
  auto show = [](SurfacePoint const& p) { return "(" + format_point(p) + ")"; };

  std::vector<SurfacePoint> valid;
  for (auto const& r : points) {
    ++report.checks;
    try {
      valid.push_back(point_check(ctx, n, r.a, r.b, r.c));
    } catch (Error const& err) {
      report.fail("closure: input (" + to_string(r.a) + "," + to_string(r.b) + "," +
                  to_string(r.c) + ") rejected by point_check: " + err.what());
    }
  }

  auto checked_add = [&](SurfacePoint const& p, SurfacePoint const& q,
                         SuiteReport& out) -> std::optional<SurfacePoint> {
    ++out.checks;
    try {
      SurfacePoint s = add(ctx, p, q);
      point_check(ctx, n, s.a, s.b, s.c);
      return s;
    } catch (Error const& err) {
      out.fail("closure: " + show(p) + " + " + show(q) + ": " + err.what());
      return std::nullopt;
    }
  };

  // Closure and commutativity over all pairs, partitioned by first index.
  auto pair_slots = run_partitioned<SuiteReport>(
      valid.size(), resolve_threads(options.threads), [&](std::size_t i) {
        SuiteReport part;
        for (std::size_t j = i; j < valid.size(); ++j) {
          auto pq = checked_add(valid[i], valid[j], part);
          if (i == j) continue;
          auto qp = checked_add(valid[j], valid[i], part);
          ++part.checks;
          if (pq && qp && !(*pq == *qp)) {
            part.fail("commutativity: " + show(valid[i]) + " + " + show(valid[j]) + " = " +
                      show(*pq) + " but reversed gives " + show(*qp));
          }
        }
        return part;
      });
  for (auto const& part : pair_slots) report.merge(part);

  SurfacePoint const id = identity(ctx, n);
  for (auto const& p : valid) {
    ++report.checks;
    try {
      if (!(add(ctx, id, p) == p) || !(add(ctx, p, id) == p)) {
        report.fail("identity: (1,1,0) + " + show(p) + " != " + show(p));
      }
      SurfacePoint inv = negate(ctx, p);
      point_check(ctx, n, inv.a, inv.b, inv.c);
      ++report.checks;
      if (!(add(ctx, p, inv) == id)) {
        report.fail("inverse: " + show(p) + " + " + show(inv) + " != (1,1,0)");
      }
    } catch (Error const& err) {
      report.fail("identity/inverse: " + show(p) + ": " + err.what());
    }
  }

  if (!valid.empty()) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t t = 0; t < options.triples; ++t) {
      SurfacePoint const& p = valid[rng() % valid.size()];
      SurfacePoint const& q = valid[rng() % valid.size()];
      SurfacePoint const& r = valid[rng() % valid.size()];
      ++report.checks;
      try {
        SurfacePoint left = add(ctx, add(ctx, p, q), r);
        SurfacePoint right = add(ctx, p, add(ctx, q, r));
        if (!(left == right)) {
          report.fail("associativity: " + show(p) + ", " + show(q) + ", " + show(r) + ": " +
                      show(left) + " != " + show(right));
        }
      } catch (Error const& err) {
        report.fail("associativity: " + show(p) + ", " + show(q) + ", " + show(r) + ": " +
                    err.what());
      }
    }
  }
  return report;
}

SuiteReport gcd_power_check(FieldContext const& ctx, unsigned n,
                            std::span<SurfacePoint const> points) {
  SuiteReport report;
  report.name = "gcdpower";
  for (auto const& p : points) {
    for (auto const& q : points) {
      ++report.checks;
      QuadInt prod = qi_mul(ctx, p.element(), q.element());
      BigInt d = gcd(prod.b, prod.c);
      if (!integer_nth_root(d, n)) {
        report.fail("(" + format_point(p) + ") + (" + format_point(q) + "): gcd " +
                    to_string(d) + " is not an n-th power");
      }
    }
  }
  return report;
}

SuiteReport pell_conic_check(FieldContext const& ctx, unsigned n,
                             std::span<SurfacePoint const> points) {
  SuiteReport report;
  report.name = "pellconic";
  std::vector<SurfacePoint> units;
  for (auto const& p : points) {
    if (p.n != n) {
      report.fail("(" + format_point(p) + ") is not on level " + std::to_string(n));
    } else if (p.a == 1) {
      units.push_back(p);
    }
  }
  for (auto const& p : units) {
    for (auto const& q : units) {
      ++report.checks;
      AddTrace t = add_traced(ctx, p, q);
      if (t.e != 1 || t.sum.a != 1) {
        report.fail("(" + format_point(p) + ") + (" + format_point(q) + ") left the Pell conic");
      }
    }
  }
  return report;
}

}  // namespace pellsurf
