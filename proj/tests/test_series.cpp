#include "fia/series.hpp"

#include "doctest.h"
#include "fia/errors.hpp"
#include "fia/random.hpp"
#include "support/oracles.hpp"

using fia::Field;
using fia::Poset;
using fia::PosetPtr;
using fia::Scalar;
using fia::Series;

namespace {

const Field Q = Field::rationals();

PosetPtr two_chain() { return Poset::build({"a", "b"}, {{"a", "b"}}); }
PosetPtr three_chain() { return Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("identity series") {
  auto p = two_chain();
  Series d = Series::identity(p, Q);
  CHECK(d.support_size() == 2);
  CHECK(d.at("a", "a").is_one());
  CHECK(d.at("b", "b").is_one());
  CHECK(d.at("a", "b").is_zero());

  fia::Rng rng(1);
  for (int round = 0; round < 20; ++round) {
    auto poset = fia::random_poset(rng, 6);
    Series alpha = fia::random_series(poset, Q, rng);
    Series delta = Series::identity(poset, Q);
    CHECK(convolve(delta, alpha) == alpha);
    CHECK(convolve(alpha, delta) == alpha);
  }

  auto empty = Poset::build({}, {});
  Series unit_of_empty = Series::identity(empty, Q);
  CHECK(unit_of_empty.is_zero());
  CHECK(convolve(unit_of_empty, unit_of_empty) == unit_of_empty);
}

TEST_CASE("diagonal units") {
  auto p = two_chain();
  Series da = Series::diagonal_unit(p, Q, "a");
  CHECK(da.support_size() == 1);
  CHECK(da.at("a", "a").is_one());
  CHECK(convolve(da, da) == da);
  CHECK_THROWS_AS(Series::diagonal_unit(p, Q, "zz"), fia::UnknownElement);

  // diagonal units partition the identity
  auto d = Poset::diamond();
  Series sum(d, Q);
  for (const auto& id : d->elements()) {
    sum = add(sum, Series::diagonal_unit(d, Q, id));
  }
  CHECK(sum == Series::identity(d, Q));
}

TEST_CASE("zeta counts intervals when squared") {
  auto p = two_chain();
  CHECK(Series::zeta(p, Q).support_size() == 3);

  auto d = Poset::diamond();
  Series z = Series::zeta(d, Q);
  CHECK(z.support_size() == 9);

  Series zz = convolve(z, z);
  for (auto seg : d->segments()) {
    CHECK(zz.at(seg.lo, seg.hi) == Q.from_integer(d->interval_size(seg.lo, seg.hi)));
  }
  CHECK(zz.at(d->index_of("a"), d->index_of("d")) == Q.from_integer(4));
}

TEST_CASE("linear operations keep sparsity canonical") {
  auto p = Poset::diamond();
  fia::Rng rng(5);
  Series alpha = fia::random_series(p, Q, rng);
  CHECK(add(alpha, scale(Q.from_integer(-1), alpha)).is_zero());
  CHECK(scale(Q.zero(), Series::zeta(p, Q)).support_size() == 0);

  Series beta = fia::random_series(p, Q, rng);
  CHECK(add(alpha, beta) == add(beta, alpha));
  CHECK(sub(alpha, beta) == add(alpha, -beta));

  CHECK_THROWS_AS(add(alpha, Series::zeta(two_chain(), Q)), fia::PosetMismatch);
  CHECK_THROWS_AS(add(alpha, Series::zeta(p, Field::prime(5))), fia::FieldMismatch);
  CHECK_THROWS_AS(scale(Field::prime(5).one(), alpha), fia::FieldMismatch);
}

TEST_CASE("convolution of a nilpotent unit") {
  auto p = two_chain();
  Series e = Series::unit(p, Q, "a", "b");
  // no z with a < z < b, so the defining sum for (a,b) is
  // e(a,a)e(a,b) + e(a,b)e(b,b) = 0
  CHECK(convolve(e, e).is_zero());
  CHECK(fia::reference::convolve(e, e).is_zero());
  CHECK_THROWS_AS(Series::unit(p, Q, "b", "a"), fia::NotComparable);
}

TEST_CASE("parallel kernel agrees with the serial reference") {
  fia::Rng rng(99);
  for (const Field& f : {Q, Field::prime(2), Field::prime(101)}) {
    for (int round = 0; round < 25; ++round) {
      auto poset = fia::random_poset(rng, 7);
      Series a = fia::random_series(poset, f, rng, 55);
      Series b = fia::random_series(poset, f, rng, 55);
      CHECK(convolve(a, b) == fia::reference::convolve(a, b));
    }
  }
}

TEST_CASE("algebra laws on randomized series") {
  fia::Rng rng(123);
  for (int round = 0; round < 30; ++round) {
    auto poset = fia::random_poset(rng, 6);
    Series a = fia::random_series(poset, Q, rng);
    Series b = fia::random_series(poset, Q, rng);
    Series c = fia::random_series(poset, Q, rng);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    CHECK(convolve(a, add(b, c)) == add(convolve(a, b), convolve(a, c)));
    CHECK(convolve(add(a, b), c) == add(convolve(a, c), convolve(b, c)));
    Scalar s = fia::random_scalar(Q, rng);
    CHECK(convolve(scale(s, a), b) == scale(s, convolve(a, b)));
    // diagonal of a product is the product of diagonals
    Series ab = convolve(a, b);
    for (int x = 0; x < poset->size(); ++x) {
      CHECK(ab.at(x, x) == a.at(x, x) * b.at(x, x));
    }
  }
}

TEST_CASE("finitarity counter") {
  auto d = Poset::diamond();
  Series delta = Series::identity(d, Q);
  for (auto seg : d->segments()) {
    CHECK(fia::finitarity_count(delta, seg.lo, seg.hi) == 0);
  }
  CHECK(fia::finitarity_count(Series::zeta(d, Q), "a", "d") == 5);
  CHECK_THROWS_AS(fia::finitarity_count(delta, "b", "c"), fia::NotComparable);

  // truncation growth: zeta of the first chain inside chain(n) + chain(n),
  // counted on the global extreme segment, grows like n(n-1)/2
  for (int n : {1, 2, 3, 6}) {
    auto sum = Poset::order_sum(Poset::chain(n), Poset::chain(n));
    std::map<fia::Segment, Scalar> m;
    for (auto seg : sum->segments()) {
      if (seg.hi < n) m.emplace(seg, Q.one());  // first chain holds indices 0..n-1
    }
    Series restricted = Series::from_map(sum, Q, std::move(m));
    CHECK(fia::finitarity_count(restricted, "l.c0", "r.c" + std::to_string(n - 1)) ==
          n * (n - 1) / 2);
  }
}

TEST_CASE("invertibility criterion") {
  auto p = two_chain();
  CHECK(fia::is_invertible(Series::identity(p, Q)));
  CHECK(fia::is_invertible(Series::zeta(p, Q)));
  CHECK(!fia::is_invertible(Series::diagonal_unit(p, Q, "a")));

  try {
    fia::invert(Series::diagonal_unit(p, Q, "a"));
    FAIL("expected NotInvertible");
  } catch (const fia::NotInvertible& e) {
    CHECK(e.element() == "b");
  }
}

TEST_CASE("inverse of the identity and the single-step recursion") {
  auto p = two_chain();
  CHECK(fia::invert(Series::identity(p, Q)) == Series::identity(p, Q));

  // alpha with one off-diagonal entry: the inverse at (a,b) is
  // -alpha(a,a)^-1 alpha(a,b) alpha(b,b)^-1
  Scalar ca = Q.parse("3/2"), cb = Q.parse("-5"), t = Q.parse("7/3");
  Series alpha = Series::from_entries(p, Q, {{"a", "a", ca}, {"b", "b", cb}, {"a", "b", t}});
  Series beta = fia::invert(alpha);
  CHECK(beta.at("a", "a") == ca.inverse());
  CHECK(beta.at("b", "b") == cb.inverse());
  CHECK(beta.at("a", "b") == -(ca.inverse() * t * cb.inverse()));

  // same single nonzero off-diagonal, but its top sits strictly below the
  // segment top: the inverse vanishes there
  auto c3 = three_chain();
  Series gamma = add(Series::identity(c3, Q), Series::unit(c3, Q, "a", "b"));
  Series gamma_inv = fia::invert(gamma);
  CHECK(gamma_inv.at("a", "c").is_zero());
}

TEST_CASE("mobius values on small posets") {
  auto c3 = three_chain();
  Series mu = fia::invert(Series::zeta(c3, Q));
  CHECK(mu.at("a", "b") == Q.from_integer(-1));
  CHECK(mu.at("b", "c") == Q.from_integer(-1));
  CHECK(mu.at("a", "c").is_zero());

  auto d = Poset::diamond();
  Series mu_d = fia::invert(Series::zeta(d, Q));
  CHECK(mu_d.at("a", "d") == Q.one());

  // independent oracle: dense linear solve of zeta * x = identity
  auto oracle = fia::testing::dense_inverse_oracle(Series::zeta(d, Q));
  REQUIRE(bool(oracle));
  CHECK(mu_d == *oracle);
}

TEST_CASE("inverse roundtrip and oracle agreement on random instances") {
  fia::Rng rng(2718);
  for (int round = 0; round < 40; ++round) {
    auto poset = fia::random_poset(rng, 7);
    const Field f = round % 3 == 0 ? Field::prime(7) : Q;
    Series alpha = fia::random_invertible_series(poset, f, rng);
    Series inv = fia::invert(alpha);
    Series delta = Series::identity(poset, f);
    CHECK(convolve(alpha, inv) == delta);
    CHECK(convolve(inv, alpha) == delta);
    auto oracle = fia::testing::dense_inverse_oracle(alpha);
    REQUIRE(bool(oracle));
    CHECK(inv == *oracle);

    // the two sided recursions the inverse must satisfy off the diagonal
    for (auto seg : poset->segments()) {
      if (seg.lo == seg.hi) continue;
      Scalar lhs = inv.at(seg.lo, seg.hi);
      Scalar sum_low = f.zero();   // over lo <= z < hi of inv(lo,z) alpha(z,hi)
      Scalar sum_high = f.zero();  // over lo < z <= hi of alpha(lo,z) inv(z,hi)
      for (int z : poset->interval(seg.lo, seg.hi)) {
        if (z != seg.hi) sum_low += inv.at(seg.lo, z) * alpha.at(z, seg.hi);
        if (z != seg.lo) sum_high += alpha.at(seg.lo, z) * inv.at(z, seg.hi);
      }
      CHECK(lhs == -(alpha.at(seg.hi, seg.hi).inverse() * sum_low));
      CHECK(lhs == -(alpha.at(seg.lo, seg.lo).inverse() * sum_high));
    }
  }
}

TEST_CASE("radical membership and laws") {
  auto p = two_chain();
  CHECK(!fia::is_radical(Series::identity(p, Q)));
  CHECK(fia::is_radical(sub(Series::zeta(p, Q), Series::identity(p, Q))));

  fia::Rng rng(31);
  for (int round = 0; round < 25; ++round) {
    auto poset = fia::random_poset(rng, 7);
    Series r = fia::random_radical_series(poset, Q, rng, 60);
    Series s = fia::random_radical_series(poset, Q, rng, 60);
    Series any = fia::random_series(poset, Q, rng);
    CHECK(fia::is_radical(add(r, s)));
    CHECK(fia::is_radical(convolve(r, any)));
    CHECK(fia::is_radical(convolve(any, r)));

    // identity minus a radical element is invertible
    CHECK(fia::is_invertible(sub(Series::identity(poset, Q), r)));

    // nilpotence with exponent = longest chain size
    CHECK(fia::power(r, poset->height()).is_zero());

    // commutators land in the radical
    Series t = fia::random_series(poset, Q, rng);
    CHECK(fia::is_radical(sub(convolve(any, t), convolve(t, any))));
  }
}

TEST_CASE("one-sided inverses are two-sided over Z/2 on tiny posets") {
  for (auto poset : {two_chain(), Poset::antichain(2)}) {
    auto all = fia::testing::all_series_z2(poset);
    Series delta = Series::identity(poset, Field::prime(2));
    for (const Series& alpha : all) {
      for (const Series& beta : all) {
        if (convolve(alpha, beta) == delta) {
          CHECK(convolve(beta, alpha) == delta);
        }
      }
    }
  }
}

TEST_CASE("finitarity counter is monotone in the segment") {
  fia::Rng rng(555);
  for (int round = 0; round < 25; ++round) {
    auto poset = fia::random_poset(rng, 7);
    Series alpha = fia::random_series(poset, Q, rng, 60);
    for (auto seg : poset->segments()) {
      long long outer = fia::finitarity_count(alpha, seg.lo, seg.hi);
      for (int u2 : poset->interval(seg.lo, seg.hi)) {
        for (int v2 : poset->interval(seg.lo, seg.hi)) {
          if (!poset->leq(u2, v2)) continue;
          CHECK(fia::finitarity_count(alpha, u2, v2) <= outer);
        }
      }
    }
  }
}

TEST_CASE("entry accumulation and key validation in from_entries") {
  auto p = two_chain();
  Series s = Series::from_entries(
      p, Q, {{"a", "b", Q.parse("1/2")}, {"a", "b", Q.parse("1/2")}, {"a", "a", Q.one()}});
  CHECK(s.at("a", "b").is_one());
  CHECK(s.support_size() == 2);
  CHECK_THROWS_AS(Series::from_entries(p, Q, {{"b", "a", Q.one()}}), fia::NotComparable);
  CHECK_THROWS_AS(Series::from_entries(p, Q, {{"a", "b", Field::prime(3).one()}}),
                  fia::MixedFields);
}

}  // TEST_SUITE
