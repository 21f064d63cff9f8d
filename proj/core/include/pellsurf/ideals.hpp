#pragma once

#include <span>

#include "pellsurf/forms.hpp"
#include "pellsurf/qfield.hpp"

namespace pellsurf {

// The lattice Z*a + Z*(b + c*omega) in Hermite normal form:
// a > 0, c > 0, 0 <= b < a, c | a, c | b. Norm is a*c.
struct IntegralIdeal {
  BigInt a;
  BigInt b;
  BigInt c;

  friend bool operator==(IntegralIdeal const&, IntegralIdeal const&) = default;
};

IntegralIdeal unit_ideal();

// HNF of the Z-span of the given elements (coordinates in {1, omega}).
// Throws InvalidArgument if the span is not a full-rank lattice.
IntegralIdeal lattice_hnf(std::span<QuadInt const> generators);

// True when the lattice is closed under multiplication by omega.
bool is_ideal(FieldContext const& ctx, IntegralIdeal const& i);

IntegralIdeal ideal_from_element(FieldContext const& ctx, QuadInt const& alpha);
IntegralIdeal ideal_mul(FieldContext const& ctx, IntegralIdeal const& i1,
                        IntegralIdeal const& i2);
IntegralIdeal ideal_pow(FieldContext const& ctx, IntegralIdeal const& i, unsigned k);
IntegralIdeal ideal_sum(FieldContext const& ctx, IntegralIdeal const& i1,
                        IntegralIdeal const& i2);
IntegralIdeal ideal_conj(FieldContext const& ctx, IntegralIdeal const& i);
BigInt ideal_norm(IntegralIdeal const& i);

// Form attached to the oriented basis {a, b + omega}: (a, 2b + sigma, Q0(b, 1)/a).
// Requires c == 1, else throws NonPrimitiveIdeal.
QuadraticForm ideal_to_form(FieldContext const& ctx, IntegralIdeal const& i);

}  // namespace pellsurf
