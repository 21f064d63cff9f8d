#include "pellsurf/arith.hpp"

#include <cctype>
#include <limits>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace mp = boost::multiprecision;

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotFundamental: return "NotFundamental";
    case Errc::DiscriminantTooLarge: return "DiscriminantTooLarge";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::SquareDiscriminant: return "SquareDiscriminant";
    case Errc::DiscMismatch: return "DiscMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NonPrimitiveIdeal: return "NonPrimitiveIdeal";
    case Errc::NotOnSurface: return "NotOnSurface";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::BadSign: return "BadSign";
    case Errc::S1GcdViolation: return "S1GcdViolation";
    case Errc::GcdNotPower: return "GcdNotPower";
    case Errc::MixedLevels: return "MixedLevels";
    case Errc::NotOnYamamoto: return "NotOnYamamoto";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::NotDivisor: return "NotDivisor";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::FactorLimitExceeded: return "FactorLimitExceeded";
    case Errc::NegativeLeadingCoefficient: return "NegativeLeadingCoefficient";
    case Errc::NegativeA: return "NegativeA";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int sign(BigInt const& x) { return x.sign(); }

BigInt abs(BigInt const& x) { return x.sign() < 0 ? BigInt(-x) : x; }

BigInt gcd(BigInt const& x, BigInt const& y) {
  return mp::gcd(abs(x), abs(y));
}

ExtendedGcd xgcd(BigInt const& a, BigInt const& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt mod(BigInt const& x, BigInt const& modulus) {
  BigInt m = abs(modulus);
  if (m == 0) throw Error(Errc::InvalidArgument, "modulus must be nonzero");
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

BigInt floor_div(BigInt const& x, BigInt const& y) {
  if (y == 0) throw Error(Errc::InvalidArgument, "division by zero");
  BigInt q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::optional<BigInt> mod_inverse(BigInt const& x, BigInt const& modulus) {
  BigInt m = abs(modulus);
  if (m == 0) return std::nullopt;
  if (m == 1) return BigInt(0);
  auto [g, u, v] = xgcd(mod(x, m), m);
  (void)v;
  if (g != 1) return std::nullopt;
  return mod(u, m);
}

BigInt pow(BigInt const& base, unsigned exponent) {
  return mp::pow(base, exponent);
}

BigInt pow_mod(BigInt base, BigInt exponent, BigInt const& modulus) {
  BigInt m = abs(modulus);
  if (m == 1) return 0;
  BigInt result = 1;
  base = mod(base, m);
  while (exponent > 0) {
    if (mp::bit_test(exponent, 0)) result = (result * base) % m;
    base = (base * base) % m;
    exponent >>= 1;
  }
  return result;
}

BigInt isqrt(BigInt const& x) {
  if (x < 0) throw Error(Errc::InvalidArgument, "isqrt of negative value");
  return mp::sqrt(x);
}

bool is_square(BigInt const& x) {
  if (x < 0) return false;
  BigInt s = mp::sqrt(x);
  return s * s == x;
}

std::optional<BigInt> integer_nth_root(BigInt const& x, unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "root index must be >= 1");
  if (x < 0) throw Error(Errc::InvalidArgument, "nth root of negative value");
  if (n == 1 || x < 2) return x;
  // Binary search on [lo, hi] with hi = 2^(ceil(bits/n)).
  unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << ((bits + n - 1) / n);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (mp::pow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (mp::pow(lo, n) == x) return lo;
  return std::nullopt;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) {
    throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(Errc::InvalidArgument, "not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(BigInt const& x) { return x.str(); }

std::optional<std::int64_t> to_int64(BigInt const& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace pellsurf
