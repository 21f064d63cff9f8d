#pragma once

#include <compare>

#include "pellsurf/arith.hpp"

namespace pellsurf {

// Largest |delta| accepted by make_context. Fundamentality is decided by
// trial division up to sqrt(|delta|).
inline constexpr std::int64_t kMaxAbsDiscriminant = 1'000'000'000'000;

// A validated fundamental discriminant delta = 4m + sigma, sigma in {0, 1}.
// The maximal order of Q(sqrt(delta)) is Z[omega] with
// omega = (sigma + sqrt(delta)) / 2, so omega^2 = sigma*omega + m.
class FieldContext {
 public:
  BigInt const& delta() const { return delta_; }
  BigInt const& m() const { return m_; }
  int sigma() const { return sigma_; }
  bool is_imaginary() const { return delta_ < 0; }

  friend bool operator==(FieldContext const&, FieldContext const&) = default;

 private:
  friend FieldContext make_context(BigInt const& delta);
  FieldContext(BigInt delta, BigInt m, int sigma)
      : delta_(std::move(delta)), m_(std::move(m)), sigma_(sigma) {}

  BigInt delta_;
  BigInt m_;
  int sigma_;
};

// Throws Error(NotFundamental) or Error(DiscriminantTooLarge).
FieldContext make_context(BigInt const& delta);

bool is_squarefree(BigInt const& x);
bool is_fundamental_discriminant(BigInt const& delta);

// Element b + c*omega of the maximal order. Carries no context; every
// operation takes the FieldContext explicitly.
struct QuadInt {
  BigInt b;
  BigInt c;

  friend bool operator==(QuadInt const&, QuadInt const&) = default;
};

// Principal form: x^2 - m y^2 (sigma = 0) or x^2 + xy - m y^2 (sigma = 1).
BigInt q0_eval(FieldContext const& ctx, BigInt const& x, BigInt const& y);

QuadInt qi_mul(FieldContext const& ctx, QuadInt const& a1, QuadInt const& a2);
QuadInt qi_conj(FieldContext const& ctx, QuadInt const& a);
BigInt qi_norm(FieldContext const& ctx, QuadInt const& a);
QuadInt qi_pow(FieldContext const& ctx, QuadInt const& a, unsigned k);
QuadInt qi_scale(QuadInt const& a, BigInt const& k);
bool qi_is_primitive(QuadInt const& a);

}  // namespace pellsurf
