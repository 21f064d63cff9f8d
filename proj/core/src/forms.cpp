#include "pellsurf/forms.hpp"

#include <algorithm>
#include <set>

#include "pellsurf/error.hpp"

namespace pellsurf {

namespace {

std::string show(QuadraticForm const& q) {
  return "(" + to_string(q.a) + "," + to_string(q.b) + "," + to_string(q.c) + ")";
}

void require_same_disc(QuadraticForm const& q1, QuadraticForm const& q2) {
  if (q1.discriminant() != q2.discriminant()) {
    throw Error(Errc::DiscMismatch,
                "forms " + show(q1) + " and " + show(q2) + " have different discriminants");
  }
}

// Translation x -> x + k y bringing b into (-a, a]; a > 0.
Reduction normalize_definite(QuadraticForm const& q) {
  BigInt two_a = 2 * q.a;
  BigInt k = floor_div(q.a - q.b, two_a);
  Mat2 t{1, k, 0, 1};
  return {act(q, t), t};
}

Reduction reduce_definite(QuadraticForm const& q) {
  Reduction cur{q, Mat2{}};
  Mat2 const swap{0, -1, 1, 0};
  while (true) {
    Reduction n = normalize_definite(cur.form);
    cur = {n.form, cur.transform * n.transform};
    if (cur.form.a > cur.form.c) {
      cur = {act(cur.form, swap), cur.transform * swap};
      continue;
    }
    if (cur.form.a == cur.form.c && cur.form.b < 0) {
      cur = {act(cur.form, swap), cur.transform * swap};
    }
    return cur;
  }
}

using Key = std::tuple<BigInt, BigInt, BigInt>;

Key key_of(QuadraticForm const& q) { return {q.a, q.b, q.c}; }

std::map<Key, std::size_t> build_lookup(BigInt const& delta,
                                        std::vector<QuadraticForm> const& reps) {
  std::map<Key, std::size_t> lookup;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    QuadraticForm const& rep = reps[i];
    if (rep.discriminant() != delta || !rep.is_primitive() || !is_reduced(rep) ||
        (delta < 0 && rep.a <= 0)) {
      throw Error(Errc::InvalidArgument,
                  "class representative " + show(rep) + " is not a reduced primitive form");
    }
    if (delta < 0) {
      if (!lookup.emplace(key_of(rep), i).second) {
        throw Error(Errc::InvalidArgument, "duplicate class representative " + show(rep));
      }
    } else {
      for (auto const& f : reduced_cycle(rep)) {
        if (!lookup.emplace(key_of(f), i).second) {
          throw Error(Errc::InvalidArgument,
                      "class representatives share the cycle of " + show(f));
        }
      }
    }
  }
  return lookup;
}

}  // namespace

Mat2 operator*(Mat2 const& x, Mat2 const& y) {
  return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
          x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

QuadraticForm act(QuadraticForm const& f, Mat2 const& m) {
  return {f(m.p, m.r),
          2 * f.a * m.p * m.q + f.b * (m.p * m.s + m.q * m.r) + 2 * f.c * m.r * m.s,
          f(m.q, m.s)};
}

QuadraticForm principal_form(FieldContext const& ctx) {
  return {1, ctx.sigma(), -ctx.m()};
}

BigInt form_disc(QuadraticForm const& q) { return q.discriminant(); }

bool is_reduced(QuadraticForm const& q) {
  BigInt d = q.discriminant();
  if (d < 0) {
    if (q.a <= 0) return false;
    if (!(-q.a < q.b && q.b <= q.a && q.a <= q.c)) return false;
    return !(q.a == q.c && q.b < 0);
  }
  if (is_square(d)) return false;
  // sqrt(d) is irrational, so integer comparisons against floor suffice.
  BigInt s = isqrt(d);
  BigInt two_a = 2 * abs(q.a);
  return q.b > 0 && q.b <= s && s < two_a + q.b && two_a - q.b <= s;
}

Reduction rho(QuadraticForm const& q) {
  BigInt d = q.discriminant();
  if (d <= 0 || is_square(d)) {
    throw Error(Errc::InvalidArgument, "rho needs a non-square positive discriminant");
  }
  BigInt s = isqrt(d);
  BigInt ac = abs(q.c);
  BigInt two_ac = 2 * ac;
  BigInt r;
  if (ac > s) {
    r = mod(-q.b, two_ac);
    if (r > ac) r -= two_ac;
  } else {
    r = s - mod(s + q.b, two_ac);
  }
  BigInt t = (r + q.b) / (2 * q.c);
  Mat2 step{0, -1, 1, t};
  return {{q.c, r, (r * r - d) / (4 * q.c)}, step};
}

std::vector<QuadraticForm> reduced_cycle(QuadraticForm const& q) {
  if (!is_reduced(q) || q.discriminant() < 0) {
    throw Error(Errc::InvalidArgument, "reduced_cycle needs a reduced indefinite form");
  }
  std::vector<QuadraticForm> cycle{q};
  QuadraticForm cur = rho(q).form;
  while (!(cur == q)) {
    cycle.push_back(cur);
    cur = rho(cur).form;
  }
  return cycle;
}

Reduction reduce(QuadraticForm const& q) {
  BigInt d = q.discriminant();
  if (is_square(d)) {
    throw Error(Errc::SquareDiscriminant, "form " + show(q) + " has square discriminant");
  }
  if (!q.is_primitive()) {
    throw Error(Errc::InvalidArgument, "form " + show(q) + " is not primitive");
  }
  if (d < 0) {
    if (q.a <= 0) {
      throw Error(Errc::NotPositiveDefinite, "form " + show(q) + " is not positive definite");
    }
    return reduce_definite(q);
  }
  Reduction cur{q, Mat2{}};
  while (!is_reduced(cur.form)) {
    Reduction step = rho(cur.form);
    cur = {step.form, cur.transform * step.transform};
  }
  return cur;
}

bool is_equivalent(QuadraticForm const& q1, QuadraticForm const& q2) {
  require_same_disc(q1, q2);
  QuadraticForm r1 = reduce(q1).form;
  QuadraticForm r2 = reduce(q2).form;
  if (q1.discriminant() < 0) return r1 == r2;
  // rho permutes reduced forms, so the walk returns to r1 after one cycle.
  QuadraticForm cur = r1;
  do {
    if (cur == r2) return true;
    cur = rho(cur).form;
  } while (!(cur == r1));
  return false;
}

QuadraticForm compose(QuadraticForm const& q1, QuadraticForm const& q2) {
  require_same_disc(q1, q2);
  BigInt d = q1.discriminant();
  if (!q1.is_primitive() || !q2.is_primitive()) {
    throw Error(Errc::InvalidArgument, "compose needs primitive forms");
  }
  if (d < 0 && (q1.a <= 0 || q2.a <= 0)) {
    throw Error(Errc::NotPositiveDefinite, "compose needs positive definite forms");
  }
  // e = gcd(a1, a2, (b1 + b2)/2) = u a1 + v a2 + w s.
  BigInt s = (q1.b + q2.b) / 2;
  ExtendedGcd g1 = xgcd(q1.a, q2.a);
  ExtendedGcd g2 = xgcd(g1.g, s);
  BigInt const& e = g2.g;
  BigInt u = g1.x * g2.x;
  BigInt v = g1.y * g2.x;
  BigInt const& w = g2.y;

  BigInt a3 = q1.a * q2.a / (e * e);
  BigInt num = u * q1.a * q2.b + v * q2.a * q1.b + w * ((q1.b * q2.b + d) / 2);
  if (num % e != 0) {
    throw Error(Errc::Internal, "composition: middle coefficient not divisible by e");
  }
  BigInt b3 = mod(num / e, 2 * a3);
  BigInt c_num = b3 * b3 - d;
  if (c_num % (4 * a3) != 0) {
    throw Error(Errc::Internal, "composition: b3^2 != D mod 4 a3");
  }
  return reduce(QuadraticForm{a3, b3, c_num / (4 * a3)}).form;
}

bool canonical_less(QuadraticForm const& x, QuadraticForm const& y) {
  return std::make_tuple(abs(x.a), x.a, x.b, x.c) < std::make_tuple(abs(y.a), y.a, y.b, y.c);
}

std::vector<QuadraticForm> reduced_forms(BigInt const& delta) {
  std::vector<QuadraticForm> out;
  if (is_square(delta) || delta == 0) {
    throw Error(Errc::SquareDiscriminant, "discriminant must be a non-square");
  }
  if (delta < 0) {
    BigInt abs_d = -delta;
    for (BigInt a = 1; 3 * a * a <= abs_d; ++a) {
      for (BigInt b = -a + 1; b <= a; ++b) {
        BigInt num = b * b - delta;
        if (num % (4 * a) != 0) continue;
        BigInt c = num / (4 * a);
        if (c < a || (c == a && b < 0)) continue;
        QuadraticForm f{a, b, c};
        if (f.is_primitive()) out.push_back(f);
      }
    }
  } else {
    BigInt s = isqrt(delta);
    for (BigInt b = 1; b <= s; ++b) {
      BigInt num = delta - b * b;  // = -4ac > 0
      if (num % 4 != 0) continue;
      BigInt ac = num / 4;
      for (BigInt abs_a = (s - b) / 2 + 1; 2 * abs_a - b <= s; ++abs_a) {
        if (ac % abs_a != 0) continue;
        for (int sg : {1, -1}) {
          BigInt a = sg * abs_a;
          QuadraticForm f{a, b, -ac / a};
          if (f.is_primitive() && is_reduced(f)) out.push_back(f);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FormClassGroup::FormClassGroup(BigInt delta, std::vector<QuadraticForm> reps,
                               std::vector<std::vector<std::size_t>> table,
                               std::size_t identity)
    : delta_(std::move(delta)),
      reps_(std::move(reps)),
      table_(std::move(table)),
      identity_(identity),
      lookup_(build_lookup(delta_, reps_)) {
  std::size_t h = reps_.size();
  if (h == 0 || identity_ >= h || table_.size() != h) {
    throw Error(Errc::InvalidArgument, "malformed class group table");
  }
  for (auto const& row : table_) {
    if (row.size() != h) throw Error(Errc::InvalidArgument, "malformed class group table");
    for (auto x : row) {
      if (x >= h) throw Error(Errc::InvalidArgument, "class group table index out of range");
    }
  }
}

std::size_t FormClassGroup::index_of_reduced(QuadraticForm const& reduced) const {
  auto it = lookup_.find(key_of(reduced));
  if (it == lookup_.end()) {
    throw Error(Errc::NotFound, "no class representative for " + show(reduced));
  }
  return it->second;
}

std::size_t FormClassGroup::power(std::size_t i, BigInt k) const {
  if (k < 0) {
    i = inverse(i);
    k = -k;
  }
  std::size_t result = identity_;
  std::size_t base = i;
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FormClassGroup::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order(); ++j) {
    if (mul(i, j) == identity_) return j;
  }
  throw Error(Errc::Internal, "class has no inverse");
}

FormClassGroup class_group(FieldContext const& ctx) {
  BigInt const& delta = ctx.delta();
  std::vector<QuadraticForm> all = reduced_forms(delta);
  std::vector<QuadraticForm> reps;
  if (delta < 0) {
    reps = all;
  } else {
    std::set<Key> seen;
    for (auto const& f : all) {
      if (seen.count(key_of(f))) continue;
      auto cycle = reduced_cycle(f);
      for (auto const& g : cycle) seen.insert(key_of(g));
      reps.push_back(*std::min_element(cycle.begin(), cycle.end(), canonical_less));
    }
    std::sort(reps.begin(), reps.end(), canonical_less);
  }

  std::map<Key, std::size_t> lookup = build_lookup(delta, reps);
  auto index = [&](QuadraticForm const& reduced) {
    auto it = lookup.find(key_of(reduced));
    if (it == lookup.end()) {
      throw Error(Errc::NotFound, "no class representative for " + show(reduced));
    }
    return it->second;
  };

  std::size_t h = reps.size();
  std::vector<std::vector<std::size_t>> table(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      table[i][j] = table[j][i] = index(compose(reps[i], reps[j]));
    }
  }
  std::size_t identity = index(reduce(principal_form(ctx)).form);
  return FormClassGroup(delta, std::move(reps), std::move(table), identity);
}

std::size_t class_index_of(FormClassGroup const& g, QuadraticForm const& q) {
  if (q.discriminant() != g.delta()) {
    throw Error(Errc::DiscMismatch, "form " + show(q) + " does not have discriminant " +
                                        to_string(g.delta()));
  }
  return g.index_of_reduced(reduce(q).form);
}

std::vector<std::size_t> torsion_subgroup(FormClassGroup const& g, BigInt const& n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "torsion order must be >= 1");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.power(i, n) == g.identity_index()) out.push_back(i);
  }
  return out;
}

bool verify_group_table(FormClassGroup const& g) {
  std::size_t h = g.order();
  std::size_t e = g.identity_index();
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<bool> row_seen(h, false);
    if (g.mul(e, i) != i || g.mul(i, e) != i) return false;
    for (std::size_t j = 0; j < h; ++j) {
      if (g.mul(i, j) != g.mul(j, i)) return false;
      if (row_seen[g.mul(i, j)]) return false;
      row_seen[g.mul(i, j)] = true;
      for (std::size_t k = 0; k < h; ++k) {
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) return false;
      }
    }
  }
  return true;
}

}  // namespace pellsurf
