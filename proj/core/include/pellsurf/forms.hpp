#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "pellsurf/arith.hpp"
#include "pellsurf/qfield.hpp"

namespace pellsurf {

// The form a x^2 + b xy + c y^2.
struct QuadraticForm {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
  BigInt operator()(BigInt const& x, BigInt const& y) const {
    return a * x * x + b * x * y + c * y * y;
  }

  friend bool operator==(QuadraticForm const&, QuadraticForm const&) = default;
};

// Row-major [[p, q], [r, s]].
struct Mat2 {
  BigInt p = 1, q = 0, r = 0, s = 1;

  BigInt det() const { return p * s - q * r; }
  friend Mat2 operator*(Mat2 const& x, Mat2 const& y);
  friend bool operator==(Mat2 const&, Mat2 const&) = default;
};

// f|_S (x, y) = f(p x + q y, r x + s y).
QuadraticForm act(QuadraticForm const& f, Mat2 const& s);

struct Reduction {
  QuadraticForm form;
  Mat2 transform;  // det +1, act(input, transform) == form
};

QuadraticForm principal_form(FieldContext const& ctx);
BigInt form_disc(QuadraticForm const& q);

// Definite: -a < b <= a <= c, b >= 0 when a == c.
// Indefinite: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
bool is_reduced(QuadraticForm const& q);

// Throws NotPositiveDefinite, SquareDiscriminant, InvalidArgument (imprimitive).
Reduction reduce(QuadraticForm const& q);

// One step of the indefinite reduction operator; maps reduced forms to
// reduced forms and permutes each cycle. Also returns the step matrix.
Reduction rho(QuadraticForm const& q);

// The full rho-cycle of a reduced indefinite form, starting at q.
std::vector<QuadraticForm> reduced_cycle(QuadraticForm const& q);

// Proper (determinant +1) equivalence.
bool is_equivalent(QuadraticForm const& q1, QuadraticForm const& q2);

// Dirichlet composition followed by reduction.
QuadraticForm compose(QuadraticForm const& q1, QuadraticForm const& q2);

// Total order (|a|, a, b, c) used to pick canonical cycle representatives.
bool canonical_less(QuadraticForm const& x, QuadraticForm const& y);

// The narrow class group Cl+(delta) with its full multiplication table.
class FormClassGroup {
 public:
  FormClassGroup(BigInt delta, std::vector<QuadraticForm> reps,
                 std::vector<std::vector<std::size_t>> table, std::size_t identity);

  BigInt const& delta() const { return delta_; }
  std::vector<QuadraticForm> const& reps() const { return reps_; }
  std::vector<std::vector<std::size_t>> const& table() const { return table_; }
  std::size_t identity_index() const { return identity_; }
  std::size_t order() const { return reps_.size(); }

  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i][j]; }
  std::size_t power(std::size_t i, BigInt k) const;
  std::size_t inverse(std::size_t i) const;

  // Index of the representative properly equivalent to a reduced form.
  std::size_t index_of_reduced(QuadraticForm const& reduced) const;

  friend bool operator==(FormClassGroup const& x, FormClassGroup const& y) {
    return x.delta_ == y.delta_ && x.reps_ == y.reps_ && x.table_ == y.table_ &&
           x.identity_ == y.identity_;
  }

 private:
  using Key = std::tuple<BigInt, BigInt, BigInt>;

  BigInt delta_;
  std::vector<QuadraticForm> reps_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::map<Key, std::size_t> lookup_;  // every reduced form -> class index
};

// All reduced primitive forms of discriminant delta (unsorted order is
// unspecified; the result is sorted by canonical_less).
std::vector<QuadraticForm> reduced_forms(BigInt const& delta);

FormClassGroup class_group(FieldContext const& ctx);

// Throws DiscMismatch, NotFound.
std::size_t class_index_of(FormClassGroup const& g, QuadraticForm const& q);

std::vector<std::size_t> torsion_subgroup(FormClassGroup const& g, BigInt const& n);

// Checks associativity, commutativity, identity and that rows are permutations.
bool verify_group_table(FormClassGroup const& g);

}  // namespace pellsurf
