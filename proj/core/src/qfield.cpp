#include "pellsurf/qfield.hpp"

#include "pellsurf/error.hpp"

namespace pellsurf {

bool is_squarefree(BigInt const& x) {
  BigInt v = abs(x);
  if (v == 0) return false;
  if (auto small = to_int64(v)) {
    std::int64_t w = *small;
    for (std::int64_t p = 2; p <= w / p; ++p) {
      if (w % p == 0) {
        w /= p;
        if (w % p == 0) return false;
      }
    }
    return true;
  }
  for (BigInt p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental_discriminant(BigInt const& delta) {
  if (delta == 0 || delta == 1) return false;
  BigInt r = mod(delta, 4);
  if (r == 1) return is_squarefree(delta);
  if (r == 0) {
    BigInt m = delta / 4;
    BigInt mr = mod(m, 4);
    return (mr == 2 || mr == 3) && is_squarefree(m);
  }
  return false;
}

FieldContext make_context(BigInt const& delta) {
  if (abs(delta) > kMaxAbsDiscriminant) {
    throw Error(Errc::DiscriminantTooLarge,
                "discriminant " + to_string(delta) + " exceeds |delta| <= 10^12");
  }
  if (is_square(delta) || !is_fundamental_discriminant(delta)) {
    throw Error(Errc::NotFundamental,
                to_string(delta) + " is not a fundamental discriminant");
  }
  int sigma = mod(delta, 4) == 1 ? 1 : 0;
  BigInt m = (delta - sigma) / 4;
  return FieldContext(delta, std::move(m), sigma);
}

BigInt q0_eval(FieldContext const& ctx, BigInt const& x, BigInt const& y) {
  BigInt v = x * x - ctx.m() * y * y;
  if (ctx.sigma() == 1) v += x * y;
  return v;
}

QuadInt qi_mul(FieldContext const& ctx, QuadInt const& a1, QuadInt const& a2) {
  BigInt cc = a1.c * a2.c;
  BigInt b = a1.b * a2.b + ctx.m() * cc;
  BigInt c = a1.b * a2.c + a2.b * a1.c;
  if (ctx.sigma() == 1) c += cc;
  return {std::move(b), std::move(c)};
}

QuadInt qi_conj(FieldContext const& ctx, QuadInt const& a) {
  return {a.b + ctx.sigma() * a.c, -a.c};
}

BigInt qi_norm(FieldContext const& ctx, QuadInt const& a) {
  return q0_eval(ctx, a.b, a.c);
}

QuadInt qi_pow(FieldContext const& ctx, QuadInt const& a, unsigned k) {
  QuadInt result{1, 0};
  QuadInt base = a;
  while (k > 0) {
    if (k & 1U) result = qi_mul(ctx, result, base);
    k >>= 1;
    if (k > 0) base = qi_mul(ctx, base, base);
  }
  return result;
}

QuadInt qi_scale(QuadInt const& a, BigInt const& k) { return {a.b * k, a.c * k}; }

bool qi_is_primitive(QuadInt const& a) { return gcd(a.b, a.c) == 1; }

}  // namespace pellsurf
