#include "test_support.hpp"

#include "zgcu/catalog.hpp"
#include "zgcu/shoda.hpp"

using namespace zgcu;

namespace {

Subgroup gen(const GroupPtr& g, std::initializer_list<const char*> words) {
  std::vector<Element> xs;
  for (const char* w : words) xs.push_back(parse_element(*g, w));
  return Subgroup::generated(g, xs);
}

}  // namespace

TEST_CASE("pair tests") {
  const auto c4 = load_group("cyclic:4");
  CHECK(is_strong_shoda_pair(Subgroup::whole(c4), gen(c4, {"g^2"})));

  const auto d8 = load_group("dihedral:8");
  auto c = is_strong_shoda_pair(gen(d8, {"r"}), Subgroup::trivial(d8));
  REQUIRE(c);
  CHECK(c.pair->n.order() == 8);
  CHECK(c.pair->conjugate_count == 1);
  const auto info = component_params(*c.pair);
  CHECK(info.n == 1);
  CHECK(info.k == 4);
  CHECK(info.center_degree == 1);
  CHECK(info.dimension == 4);
  CHECK(info.dimension_from_trace == 4);
  CHECK(info.action == std::vector<std::int64_t>{1, 3});
  REQUIRE(info.flags.size() == 1);
  CHECK(info.flags[0].find("exceptional-candidate (2x2 over Q)") == 0);

  c = is_strong_shoda_pair(gen(d8, {"s"}), Subgroup::trivial(d8));
  REQUIRE(c.rejection);
  CHECK(*c.rejection == ShodaRejection::HNotNormalInNormalizer);
  c = is_strong_shoda_pair(gen(d8, {"r^2"}), Subgroup::trivial(d8));
  CHECK(*c.rejection == ShodaRejection::NotMaximalAbelian);
}

TEST_CASE("equivalence") {
  const auto c4 = load_group("cyclic:4");
  const auto a = *is_strong_shoda_pair(Subgroup::whole(c4), Subgroup::trivial(c4)).pair;
  const auto b = *is_strong_shoda_pair(Subgroup::whole(c4), gen(c4, {"g^2"})).pair;
  CHECK(ssp_equivalent(a, a).by_idempotent);
  CHECK(ssp_equivalent(a, a).agree());
  CHECK_FALSE(ssp_equivalent(a, b).by_idempotent);
  CHECK(ssp_equivalent(a, b).agree());

  const auto d8 = load_group("dihedral:8");
  const auto h = gen(d8, {"r^2", "s"});
  const auto k = gen(d8, {"s"});
  const auto p = *is_strong_shoda_pair(h, k).pair;
  const Element r = parse_element(*d8, "r");
  const auto q = *is_strong_shoda_pair(h.conjugate(r), k.conjugate(r)).pair;
  CHECK(ssp_equivalent(p, q).by_idempotent);
  CHECK(ssp_equivalent(p, q).agree());
  const auto t = *is_strong_shoda_pair(gen(d8, {"r"}), Subgroup::trivial(d8)).pair;
  CHECK(ssp_equivalent(p, t).by_idempotent);
}

TEST_CASE("complete sets") {
  struct Expect {
    const char* name;
    std::size_t classes;
  };
  for (auto [name, classes] : {Expect{"cyclic:4", 3}, Expect{"dihedral:8", 5}, Expect{"symmetric:3", 3},
                               Expect{"quaternion:8", 5}, Expect{"metacyclic:7,3,2", 3},
                               Expect{"cyclic:1", 1}, Expect{"symmetric:4", 5}}) {
    const std::string label = name;
    CAPTURE(label);
    const auto g = load_group(name);
    const auto s = strong_shoda_pairs(g);
    CHECK(s.pairs.size() == classes);
    CHECK(s.sum_is_one);
    CHECK(s.pairwise_orthogonal);
    CHECK(s.equivalence_tests_agree);
    std::int64_t total = 0;
    for (const auto& p : s.pairs) {
      CHECK(p.e.is_idempotent());
      CHECK(p.eps.is_idempotent());
      CHECK(p.e.is_central());
      CHECK(element_centralizer(p.eps) == p.n);
      const auto info = component_params(p);
      CHECK(info.dimension == info.dimension_from_trace);
      total += info.dimension;
    }
    CHECK(total == static_cast<std::int64_t>(g->order()));
  }
  const auto c4 = strong_shoda_pairs(load_group("cyclic:4"));
  for (const auto& p : c4.pairs) CHECK(p.h.order() == 4);
}

TEST_CASE("component parameters") {
  const auto g = load_group("metacyclic:7,3,2");
  const auto a = gen(g, {"a"});
  const auto p = *is_strong_shoda_pair(a, Subgroup::trivial(g)).pair;
  const auto info = component_params(p);
  CHECK(info.n == 1);
  CHECK(info.k == 7);
  CHECK(info.s == 3);
  CHECK(info.center_degree == 2);
  CHECK(info.twisting_trivial);

  const auto c5 = load_group("cyclic:5");
  const auto q = *is_strong_shoda_pair(Subgroup::whole(c5), Subgroup::trivial(c5)).pair;
  const auto i5 = component_params(q);
  CHECK(i5.k == 5);
  CHECK(i5.flags.empty());

  const auto q8 = load_group("quaternion:8");
  const auto r = *is_strong_shoda_pair(gen(q8, {"x"}), Subgroup::trivial(q8)).pair;
  const auto iq = component_params(r);
  CHECK_FALSE(iq.twisting_trivial);
  REQUIRE(iq.flags.size() == 1);
  CHECK(iq.flags[0].find("division-candidate (totally definite quaternion possible)") == 0);
}
