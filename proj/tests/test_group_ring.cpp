#include "test_support.hpp"

#include <random>

#include "zgcu/catalog.hpp"
#include "zgcu/error.hpp"
#include "zgcu/group_ring.hpp"
#include "zgcu/subgroups.hpp"

using namespace zgcu;

namespace {

using GRE = GroupRingElement;

GRE word(const GroupPtr& g, const char* w, long c = 1) {
  return GRE::basis(g, parse_element(*g, w), Rational(c));
}

Subgroup gen(const GroupPtr& g, const char* w) {
  return Subgroup::generated(g, std::vector<Element>{parse_element(*g, w)});
}

GRE random_element(const GroupPtr& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> v(g->order());
  for (auto& c : v) c = Rational(d(rng), 1 + (d(rng) + 3) % 2);
  for (auto& c : v) c.canonicalize();
  return GRE::from_dense(g, v);
}

}  // namespace

TEST_CASE("basic ring arithmetic") {
  const auto c2 = load_group("cyclic:2");
  const auto one = GRE::one(c2);
  const auto g = word(c2, "g");
  CHECK(((one + g) * (one - g)).is_zero());

  const auto d8 = load_group("dihedral:8");
  CHECK(word(d8, "r").conjugate(parse_element(*d8, "s")) == word(d8, "r^3"));

  const auto d4 = load_group("cyclic:4");
  CHECK_THROWS_AS(word(d4, "g") + word(c2, "g"), Error);
}

TEST_CASE("projection sums over fibers") {
  const auto d8 = load_group("dihedral:8");
  const auto q = quotient(gen(d8, "r"));
  const auto u = word(d8, "r", 2) + word(d8, "s", 3) + word(d8, "r*s", -1) + GRE::one(d8);
  const auto img = u.map(q.group, q.projection);
  CHECK(img.coeff(0) == 3);
  CHECK(img.coeff(1) == 2);
  CHECK(img.augmentation() == u.augmentation());
}

TEST_CASE("regular representation is a homomorphism") {
  std::mt19937 rng(7);
  for (const char* name : {"dihedral:8", "quaternion:8", "symmetric:3"}) {
    const auto g = load_group(name);
    for (int i = 0; i < 5; ++i) {
      const auto a = random_element(g, rng);
      const auto b = random_element(g, rng);
      CHECK(regular_representation(a * b) == regular_representation(a) * regular_representation(b));
    }
    CHECK(regular_representation(GRE::one(g)) == RationalMatrix::identity(g->order()));
    const auto l = regular_representation(GRE::basis(g, 1));
    for (std::size_t c = 0; c < g->order(); ++c) {
      int ones = 0;
      for (std::size_t r = 0; r < g->order(); ++r) ones += l(r, c) == 1;
      CHECK(ones == 1);
    }
  }
  const auto d8 = load_group("dihedral:8");
  CHECK(regular_representation(hat(gen(d8, "s"))).trace() == 4);
}

TEST_CASE("hat") {
  const auto c4 = load_group("cyclic:4");
  CHECK(hat(Subgroup::trivial(c4)).is_one());
  const auto h = hat(gen(c4, "g^2"));
  CHECK(h == (GRE::one(c4) + word(c4, "g^2")) * Rational(1, 2));
  CHECK(h.is_idempotent());
  const auto d8 = load_group("dihedral:8");
  CHECK_FALSE(hat(gen(d8, "s")).is_central());
  CHECK(hat(gen(d8, "r")).is_central());
}

TEST_CASE("eps") {
  const auto c4 = load_group("cyclic:4");
  const auto whole = Subgroup::whole(c4);
  const auto e1 = eps(whole, gen(c4, "g^2"));
  const auto expect1 = (GRE::one(c4) - word(c4, "g") + word(c4, "g^2") - word(c4, "g^3")) *
                       Rational(1, 4);
  CHECK(e1 == expect1);
  const auto e2 = eps(whole, Subgroup::trivial(c4));
  CHECK(e2 == (GRE::one(c4) - word(c4, "g^2")) * Rational(1, 2));
  CHECK(eps(whole, whole) == hat(whole));
  const auto d8 = load_group("dihedral:8");
  CHECK_THROWS_AS(eps(Subgroup::whole(d8), gen(d8, "s")), Error);
}

TEST_CASE("e idempotent") {
  const auto d8 = load_group("dihedral:8");
  const auto e = e_idempotent(gen(d8, "r"), Subgroup::trivial(d8));
  CHECK(e == (GRE::one(d8) - word(d8, "r^2")) * Rational(1, 2));
  CHECK(e_idempotent(Subgroup::whole(d8), Subgroup::whole(d8)) == hat(Subgroup::whole(d8)));
  const auto c4 = load_group("cyclic:4");
  const auto k = gen(c4, "g^2");
  CHECK(e_idempotent(Subgroup::whole(c4), k) == eps(Subgroup::whole(c4), k));
  // (<s>, 1) in D8: the conjugates of eps are not orthogonal, and the sum is not idempotent.
  const auto bad = e_idempotent(gen(d8, "s"), Subgroup::trivial(d8));
  CHECK(bad.is_central());
}

TEST_CASE("units") {
  const auto d8 = load_group("dihedral:8");
  const auto g = word(d8, "r*s");
  CHECK(is_unit(g) == GRE::basis(d8, d8->inv(parse_element(*d8, "r*s"))));

  const auto c2 = load_group("cyclic:2");
  CHECK_THROWS_AS(is_unit(GRE::one(c2) + word(c2, "g")), Error);
  // 2 is invertible in QG but not in ZG.
  CHECK_THROWS_AS(is_unit(GRE::one(c2) * Rational(2)), Error);

  const auto c5 = load_group("cyclic:5");
  const auto b = GRE::from_terms(c5, {{0, -2}, {1, 1}, {2, 3}, {3, 1}, {4, -2}});
  const auto binv = is_unit(b);
  CHECK((b * binv).is_one());
}

TEST_CASE("split orders") {
  const auto c2 = load_group("cyclic:2");
  const auto e = hat(Subgroup::whole(c2));
  const auto one = GRE::one(c2);
  const auto g = word(c2, "g");
  // 1 - 2e = -g lies everywhere; (1 - e) + 2e = 1 + e = (3 + g)/2 lies in Z(1-e) + ZGe.
  const auto scalar = Order::scalar_split(e);
  const auto split = split_element(1, one * Rational(2), e);
  CHECK(scalar.contains(split));
  CHECK_FALSE(Order::integral_group_ring().contains(split));
  CHECK(scalar.contains(e));
  CHECK_FALSE(scalar.contains(e * Rational(1, 2)));
  const auto ring = Order::group_ring_split(e);
  CHECK(ring.contains(e));
  CHECK(ring.contains(split));
  // -(1 - e) + e = g is a unit everywhere.
  CHECK((is_unit(split_element(-1, one, e), scalar) * g).is_one());
}
