#include "test_support.hpp"

#include "zgcu/bass.hpp"
#include "zgcu/catalog.hpp"
#include "zgcu/central.hpp"
#include "zgcu/error.hpp"

using namespace zgcu;

TEST_CASE("abelian groups: c(u) = u^[G:<g>]") {
  const auto g = load_group("abelian:2,6");
  const Element x = parse_element(*g, "b");
  const auto b = bass_unit(g, x, 5, 2);
  const auto series = subnormal_series(g, x);
  const auto trace = centralize(series, b);
  CHECK(trace.all_hold());
  CHECK(trace.result() == b.pow(g->order() / g->element_order(x)));
}

TEST_CASE("central input gives a power") {
  const auto d16 = load_group("dihedral:16");
  const Element r = parse_element(*d16, "r");
  // b(3, 2, r^4) is supported on the centre.
  const auto z = bass_unit(d16, d16->pow(r, 4), 1, 1);
  const auto series = subnormal_series(d16, r);
  CHECK(centralize(series, z).result() == z.pow(2));
}

TEST_CASE("D16 basis element") {
  const auto d16 = load_group("dihedral:16");
  const Element r = parse_element(*d16, "r");
  const auto series = subnormal_series(d16, r);
  REQUIRE(series.length() == 1);
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
    CentralizeOptions o;
    o.seed = seed;
    const auto trace = centralize(series, bass_unit(d16, r, 3, 2), o);
    CHECK(trace.all_hold());
    CHECK(trace.result() == bass_unit(d16, r, 3, 2) * bass_unit(d16, d16->pow(r, 7), 3, 2));
  }
  const auto s = GroupRingElement::basis(d16, parse_element(*d16, "s"));
  CHECK_THROWS_AS(centralize(series, s), Error);
}

TEST_CASE("Lemma 4.1 on D16") {
  const auto d16 = load_group("dihedral:16");
  const Element r = parse_element(*d16, "r");
  const auto series = subnormal_series(d16, r);
  const auto u = bass_unit(d16, r, 3, 2);
  auto rep = conjugate_product_laws(u, u, series, parse_element(*d16, "s"));
  CHECK(rep.all_hold());
  const auto one = GroupRingElement::one(d16);
  CHECK(conjugate_product_laws(one, one, series, 3).all_hold());
  CHECK(central_product(series, u * u) == central_product(series, u).pow(2));
}

TEST_CASE("nilpotent construction") {
  const auto d8 = load_group("dihedral:8");
  const Element r = parse_element(*d8, "r");
  auto res = centralize_nilpotent(bass_unit(d8, r, 3, 2), r);
  CHECK(res.value().is_central());
  CHECK(res.relation_holds);

  const auto d16 = load_group("dihedral:16");
  const Element r16 = parse_element(*d16, "r");
  res = centralize_nilpotent(bass_unit(d16, r16, 3, 2), r16);
  CHECK(res.value().is_central());
  CHECK(res.relation_holds);
  CHECK_FALSE(res.torsion);

  const auto q8 = load_group("quaternion:8");
  const Element i = parse_element(*q8, "x");
  res = centralize_nilpotent(bass_unit(q8, i, 3, 2), i);
  CHECK(res.torsion);

  const auto c5 = load_group("cyclic:5");
  const auto b = bass_unit(c5, 1, 2, 4);
  res = centralize_nilpotent(b, 1);
  CHECK(res.value() == b);
  CHECK(res.relation_holds);

  const auto s3 = load_group("symmetric:3");
  CHECK_THROWS_AS(centralize_nilpotent(GroupRingElement::one(s3), 0), Error);
}
