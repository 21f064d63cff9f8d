#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pellsurf/error.hpp"
#include "pellsurf/forms.hpp"

using namespace pellsurf;

namespace {

QuadraticForm F(long a, long b, long c) { return {a, b, c}; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  return Errc::Internal;
}

// Random SL2(Z) matrix as a product of elementary moves.
Mat2 random_unimodular(std::mt19937_64& rng) {
  Mat2 m;
  std::uniform_int_distribution<int> k(-3, 3);
  for (int i = 0; i < 4; ++i) {
    m = m * Mat2{1, k(rng), 0, 1};
    m = m * Mat2{1, 0, k(rng), 1};
  }
  return m;
}

}  // namespace

TEST(Forms, PrincipalForms) {
  EXPECT_EQ(principal_form(make_context(-23)), F(1, 1, 6));
  EXPECT_EQ(principal_form(make_context(229)), F(1, 1, -57));
  EXPECT_EQ(principal_form(make_context(12)), F(1, 0, -3));
}

TEST(Forms, Discriminants) {
  EXPECT_EQ(form_disc(F(2, 3, 4)), -23);
  EXPECT_EQ(form_disc(F(1, 1, 6)), -23);
  EXPECT_EQ(form_disc(F(1, 0, -3)), 12);
}

TEST(Forms, ReduceExamples) {
  EXPECT_EQ(reduce(F(2, 3, 4)).form, F(2, -1, 3));
  EXPECT_EQ(reduce(F(1, 1, 6)).form, F(1, 1, 6));
  EXPECT_EQ(reduce(F(1, 15, -1)).form, F(1, 15, -1));
  EXPECT_TRUE(is_reduced(F(1, 15, -1)));
  // (2,-1,6) has discriminant -47, so it is not the reduction.
  EXPECT_EQ(form_disc(F(2, -1, 6)), -47);
}

TEST(Forms, ReduceErrors) {
  EXPECT_EQ(code_of([] { reduce(F(-2, 3, -4)); }), Errc::NotPositiveDefinite);
  EXPECT_EQ(code_of([] { reduce(F(1, 0, -4)); }), Errc::SquareDiscriminant);
  EXPECT_EQ(code_of([] { reduce(F(2, 2, 4)); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { compose(F(1, 1, 6), F(1, 0, -3)); }), Errc::DiscMismatch);
  EXPECT_EQ(code_of([] { is_equivalent(F(1, 1, 6), F(1, 0, -3)); }), Errc::DiscMismatch);
}

TEST(Forms, ReductionMatrixIsProperAndExact) {
  std::mt19937_64 rng(7);
  for (int delta : {-23, -3, -4, -47, -71, 229, 12, 5, 21, 1001}) {
    auto g = class_group(make_context(delta));
    for (auto const& rep : g.reps()) {
      for (int i = 0; i < 20; ++i) {
        QuadraticForm q = act(rep, random_unimodular(rng));
        Reduction r = reduce(q);
        EXPECT_TRUE(is_reduced(r.form)) << delta;
        EXPECT_EQ(r.transform.det(), 1);
        EXPECT_EQ(act(q, r.transform), r.form);
        EXPECT_TRUE(is_equivalent(q, rep));
      }
    }
  }
}

TEST(Forms, Equivalence) {
  EXPECT_TRUE(is_equivalent(F(2, 3, 4), F(2, -1, 3)));
  EXPECT_FALSE(is_equivalent(F(2, 3, 4), F(1, 1, 6)));
  EXPECT_FALSE(is_equivalent(F(1, 2, -2), F(-1, 2, 2)));
  EXPECT_TRUE(is_equivalent(F(1, 2, -2), F(-2, 2, 1)));
  // (2,1,3) and (2,-1,3) are improperly but not properly equivalent.
  EXPECT_FALSE(is_equivalent(F(2, 1, 3), F(2, -1, 3)));
}

TEST(Forms, EquivalenceRelationSpotChecks) {
  std::mt19937_64 rng(11);
  auto g = class_group(make_context(229));
  for (auto const& x : g.reps()) {
    QuadraticForm x1 = act(x, random_unimodular(rng));
    QuadraticForm x2 = act(x1, random_unimodular(rng));
    EXPECT_TRUE(is_equivalent(x1, x1));
    EXPECT_TRUE(is_equivalent(x1, x2));
    EXPECT_TRUE(is_equivalent(x2, x1));
    EXPECT_TRUE(is_equivalent(x, x2));
    for (auto const& y : g.reps()) {
      EXPECT_EQ(is_equivalent(x1, act(y, random_unimodular(rng))), x == y);
    }
  }
}

TEST(Forms, IndefiniteCycles) {
  auto cycle = reduced_cycle(F(1, 2, -2));
  ASSERT_EQ(cycle.size(), 2u);
  EXPECT_EQ(cycle[1], F(-2, 2, 1));
  for (auto const& f : reduced_forms(229)) {
    Reduction step = rho(f);
    EXPECT_TRUE(is_reduced(step.form));
    EXPECT_EQ(act(f, step.transform), step.form);
    EXPECT_EQ(step.transform.det(), 1);
  }
}

TEST(Forms, CompositionExamples) {
  EXPECT_TRUE(is_equivalent(compose(F(1, 1, 6), F(2, 1, 3)), F(2, 1, 3)));
  EXPECT_TRUE(is_equivalent(compose(F(2, 1, 3), F(2, 1, 3)), F(2, -1, 3)));
  EXPECT_TRUE(is_equivalent(compose(F(-1, 2, 2), F(-1, 2, 2)), F(1, 2, -2)));
  EXPECT_TRUE(is_reduced(compose(F(2, 3, 4), F(2, 3, 4))));
}

TEST(Forms, CompositionRespectsClasses) {
  std::mt19937_64 rng(99);
  for (int delta : {-23, -47, -71, -84, 229, 12, 136, 145}) {
    auto g = class_group(make_context(delta));
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = 0; j < g.order(); ++j) {
        QuadraticForm base = compose(g.reps()[i], g.reps()[j]);
        QuadraticForm moved = compose(act(g.reps()[i], random_unimodular(rng)),
                                      act(g.reps()[j], random_unimodular(rng)));
        EXPECT_TRUE(is_equivalent(base, moved)) << delta;
        EXPECT_EQ(class_index_of(g, base), g.mul(i, j));
      }
    }
  }
}

TEST(Forms, ClassGroupExamples) {
  auto g23 = class_group(make_context(-23));
  EXPECT_EQ(g23.order(), 3u);
  std::set<oracle::Form> reps;
  for (auto const& f : g23.reps()) {
    reps.emplace(static_cast<long>(f.a), static_cast<long>(f.b), static_cast<long>(f.c));
  }
  EXPECT_EQ(reps, (std::set<oracle::Form>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}}));
  EXPECT_EQ(class_group(make_context(229)).order(), 3u);
  EXPECT_EQ(class_group(make_context(-4)).order(), 1u);
  EXPECT_EQ(class_group(make_context(12)).order(), 2u);
}

TEST(Forms, DefiniteClassNumbersMatchOracle) {
  for (std::int64_t d = -3; d >= -2000; --d) {
    if (!oracle::fundamental(d)) continue;
    auto g = class_group(make_context(d));
    EXPECT_EQ(g.order(), oracle::definite_reduced(d).size()) << d;
  }
}

TEST(Forms, NarrowClassNumbersMatchOracle) {
  for (std::int64_t d = 5; d <= 1500; ++d) {
    if (!oracle::fundamental(d)) continue;
    auto g = class_group(make_context(d));
    EXPECT_EQ(g.order(), oracle::indefinite_class_count(d)) << d;
  }
}

TEST(Forms, GroupTablesAreGroups) {
  for (int delta : {-23, -47, -71, -84, -3299, -4, 229, 12, 136, 145, 4620, 13260, -5460}) {
    auto g = class_group(make_context(delta));
    EXPECT_TRUE(verify_group_table(g)) << delta;
    for (std::size_t i = 0; i < g.order(); ++i) {
      EXPECT_EQ(g.power(i, g.order()), g.identity_index());
      EXPECT_EQ(g.mul(i, g.inverse(i)), g.identity_index());
    }
  }
}

TEST(Forms, ClassIndexExamples) {
  auto g = class_group(make_context(-23));
  EXPECT_EQ(g.reps()[class_index_of(g, F(2, 3, 4))], F(2, -1, 3));
  EXPECT_EQ(class_index_of(g, principal_form(make_context(-23))), g.identity_index());
  auto h = class_group(make_context(229));
  EXPECT_NE(class_index_of(h, F(3, 5, -17)), h.identity_index());
  EXPECT_EQ(class_index_of(h, principal_form(make_context(229))), h.identity_index());
}

TEST(Forms, Torsion) {
  auto g = class_group(make_context(-23));
  EXPECT_EQ(torsion_subgroup(g, 3).size(), 3u);
  EXPECT_EQ(torsion_subgroup(g, 1), std::vector<std::size_t>{g.identity_index()});
  auto h = class_group(make_context(12));
  EXPECT_EQ(torsion_subgroup(h, 3), std::vector<std::size_t>{h.identity_index()});
  EXPECT_EQ(torsion_subgroup(h, 2).size(), 2u);
}

TEST(Forms, ClassGroupIsDeterministic) {
  auto ctx = make_context(-3299);
  EXPECT_TRUE(class_group(ctx) == class_group(ctx));
}

TEST(Forms, ConstructorRejectsBadTables) {
  auto g = class_group(make_context(-23));
  auto table = g.table();
  std::swap(table[1][1], table[1][2]);
  EXPECT_FALSE(verify_group_table(FormClassGroup(g.delta(), g.reps(), table, g.identity_index())));
  table[0][0] = 7;
  EXPECT_ANY_THROW(FormClassGroup(g.delta(), g.reps(), table, g.identity_index()));
  auto reps = g.reps();
  reps[1] = F(2, 3, 4);
  EXPECT_ANY_THROW(FormClassGroup(g.delta(), reps, g.table(), g.identity_index()));
}
