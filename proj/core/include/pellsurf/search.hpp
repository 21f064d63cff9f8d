#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pellsurf/surface.hpp"

namespace pellsurf {

struct EnumerationOptions {
  BigInt max_a = 1;
  BigInt box = 1;          // |B|, |C| <= box; only used for delta > 0
  bool positive_only = false;
  unsigned threads = 1;    // 0 = hardware concurrency
};

struct EnumerationReport {
  BigInt delta;
  unsigned n = 1;
  BigInt max_a;
  BigInt box;
  bool complete = false;  // true for delta < 0; box-relative otherwise
  std::vector<SurfacePoint> points;  // sorted by (A, B, C), deduplicated
  std::map<BigInt, std::size_t> count_by_abs_a;
};

// All primitive points with 1 <= |A| <= max_a. For delta < 0 the set is
// complete (|C| is bounded by the ellipse); for delta > 0 it is complete
// only within the box. A < 0 appears only for odd n, delta > 0, and
// !positive_only.
EnumerationReport enumerate_points(FieldContext const& ctx, unsigned n,
                                   EnumerationOptions const& options);

bool point_less(SurfacePoint const& x, SurfacePoint const& y);

// Unvalidated triple, as read from files or user input.
struct RawPoint {
  BigInt a;
  BigInt b;
  BigInt c;
};

RawPoint raw(SurfacePoint const& p);

inline constexpr std::size_t kMaxReportedFailures = 25;

struct SuiteReport {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first kMaxReportedFailures counterexamples

  bool passed() const { return failure_count == 0; }
  void fail(std::string what);
  void merge(SuiteReport const& other);
};

inline constexpr std::size_t kDefaultAssociativityTriples = 2000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1234'abcd'0042ULL;

struct AxiomOptions {
  std::size_t triples = kDefaultAssociativityTriples;
  std::uint64_t seed = kDefaultSeed;  // std::mt19937_64
  unsigned threads = 1;
};

// Validates every input with point_check, then: closure, commutativity
// (all pairs), identity and inverse (all points), associativity on seeded
// random triples.
SuiteReport axiom_suite(FieldContext const& ctx, unsigned n, std::span<RawPoint const> points,
                        AxiomOptions const& options = {});

// For every ordered pair, gcd(u, v) must be a perfect n-th power.
SuiteReport gcd_power_check(FieldContext const& ctx, unsigned n,
                            std::span<SurfacePoint const> points);

// Points with A == 1 (Pell conic) are closed under addition with e == 1.
SuiteReport pell_conic_check(FieldContext const& ctx, unsigned n,
                             std::span<SurfacePoint const> points);

unsigned resolve_threads(unsigned requested);

}  // namespace pellsurf
