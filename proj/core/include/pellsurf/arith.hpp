#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace pellsurf {

using BigInt = boost::multiprecision::cpp_int;

// gcd(x, 0) = |x|; the result is never negative.
BigInt gcd(BigInt const& x, BigInt const& y);

struct ExtendedGcd {
  BigInt g;  // >= 0
  BigInt x;
  BigInt y;  // x*a + y*b == g
};
ExtendedGcd xgcd(BigInt const& a, BigInt const& b);

// Least nonnegative residue; modulus must be nonzero (its sign is ignored).
BigInt mod(BigInt const& x, BigInt const& modulus);

BigInt floor_div(BigInt const& x, BigInt const& y);

// Inverse of x modulo |modulus| in [0, |modulus|), or nullopt if not a unit.
std::optional<BigInt> mod_inverse(BigInt const& x, BigInt const& modulus);

BigInt pow(BigInt const& base, unsigned exponent);
BigInt pow_mod(BigInt base, BigInt exponent, BigInt const& modulus);

// floor(sqrt(x)) for x >= 0.
BigInt isqrt(BigInt const& x);
bool is_square(BigInt const& x);

// e with e^n == x exactly, or nullopt. x >= 0, n >= 1.
std::optional<BigInt> integer_nth_root(BigInt const& x, unsigned n);

// Strict decimal parse: optional sign followed by digits. Throws Error(InvalidArgument).
BigInt parse_bigint(std::string_view text);
std::string to_string(BigInt const& x);

// Fits in int64? Used by the JSON layer to decide number vs string.
std::optional<std::int64_t> to_int64(BigInt const& x);

int sign(BigInt const& x);
BigInt abs(BigInt const& x);

}  // namespace pellsurf
