#include <doctest.h>

#include <algorithm>
#include <set>

#include "zgcu/catalog.hpp"
#include "zgcu/classes.hpp"
#include "zgcu/error.hpp"
#include "zgcu/rational.hpp"
#include "zgcu/subgroups.hpp"

using namespace zgcu;

namespace {

// Brute-force conjugacy class count straight from the table.
std::size_t brute_class_count(const FiniteGroup& g) {
  std::set<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> c;
    for (Element y = 0; y < g.order(); ++y) c.push_back(g.conj(x, y));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    classes.insert(c);
  }
  return classes.size();
}

// Brute-force subgroup count: closures of all pairs of elements are enough for the
// 2-generated groups used here.
std::size_t brute_subgroup_count(const GroupPtr& g) {
  std::set<std::vector<Element>> seen;
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = a; b < g->order(); ++b) {
      const std::vector<Element> gens{a, b};
      const auto h = Subgroup::generated(g, gens);
      seen.insert({h.members().begin(), h.members().end()});
    }
  return seen.size();
}

}  // namespace

TEST_CASE("catalog groups have the expected orders") {
  CHECK(load_group("cyclic:1")->order() == 1);
  CHECK(load_group("dihedral:8")->order() == 8);
  CHECK(load_group("quaternion:8")->order() == 8);
  CHECK(load_group("symmetric:4")->order() == 24);
  CHECK(load_group("metacyclic:7,3,2")->order() == 21);
  CHECK(load_group("(1 2 3)(4 5)")->order() == 6);
  CHECK(load_group("(1 2 3)(4 5)")->is_abelian());
  CHECK_THROWS_AS(load_group("metacyclic:7,3,3"), Error);
}

TEST_CASE("non-associative tables are rejected") {
  nlohmann::json doc = {{"order", 3}, {"table", {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}}};
  CHECK_THROWS_AS(group_from_table_json(doc), Error);
  // Latin square with identity 0 that is not associative (order 5 loop).
  nlohmann::json loop = {{"order", 5},
                         {"table",
                          {{0, 1, 2, 3, 4},
                           {1, 0, 3, 4, 2},
                           {2, 4, 0, 1, 3},
                           {3, 2, 4, 0, 1},
                           {4, 3, 1, 2, 0}}}};
  CHECK_THROWS_AS(group_from_table_json(loop), Error);
}

TEST_CASE("table round trip") {
  const auto g = load_group("dihedral:8");
  const auto h = group_from_table_json(group_to_table_json(*g));
  CHECK(h->order() == 8);
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) CHECK(h->mul(a, b) == g->mul(a, b));
}

TEST_CASE("class counts against brute force") {
  for (const char* name : {"dihedral:8", "quaternion:8", "symmetric:3", "symmetric:4", "cyclic:5",
                           "metacyclic:7,3,2", "dihedral:16", "c3xs3"}) {
    const auto g = load_group(name);
    CAPTURE(name);
    CHECK(class_structure(*g).conjugacy_classes.size() == brute_class_count(*g));
  }
  CHECK(class_structure(*load_group("dihedral:8")).conjugacy_classes.size() == 5);
}

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(load_group("cyclic:5")).size() == 2);
  CHECK(subgroups(load_group("dihedral:8")).size() == 10);
  CHECK(subgroups(load_group("quaternion:8")).size() == 6);
  CHECK(subgroups(load_group("symmetric:4")).size() == 30);
  for (const char* name : {"dihedral:12", "quaternion:16", "metacyclic:7,3,2", "dihedral:16"}) {
    const auto g = load_group(name);
    CAPTURE(name);
    CHECK(subgroups(g).size() == brute_subgroup_count(g));
  }
  Bounds tight;
  tight.max_subgroups = 3;
  CHECK_THROWS_AS(subgroups(load_group("dihedral:8"), tight), Error);
}

TEST_CASE("normalizers and centralizers") {
  const auto d8 = load_group("dihedral:8");
  const Element r = parse_element(*d8, "r");
  const Element s = parse_element(*d8, "s");
  const auto rr = Subgroup::generated(d8, std::vector<Element>{r});
  CHECK(normalizer(rr).order() == 8);
  CHECK(centralizer(d8, r) == rr);
  CHECK(d8->conj(r, s) == d8->pow(r, 3));

  const auto s3 = load_group("symmetric:3");
  const Element t = parse_element(*s3, "(1 2)");
  const auto tt = Subgroup::generated(s3, std::vector<Element>{t});
  CHECK(normalizer(tt) == tt);
}

TEST_CASE("Q and R classes") {
  auto cs = class_structure(*load_group("cyclic:5"));
  CHECK(cs.q_classes.size() == 2);
  CHECK(cs.r_classes.size() == 3);
  cs = class_structure(*load_group("dihedral:8"));
  CHECK(cs.q_classes.size() == 5);
  CHECK(cs.r_classes.size() == 5);
  cs = class_structure(*load_group("symmetric:3"));
  CHECK(cs.q_classes.size() == 3);
  CHECK(cs.r_classes.size() == 3);
}

TEST_CASE("class structure invariants") {
  for (const char* name : {"dihedral:16", "metacyclic:7,3,2", "quaternion:16", "abelian:2,4",
                           "c3xs3", "metacyclic:5,4,2"}) {
    const auto g = load_group(name);
    CAPTURE(name);
    const auto cs = class_structure(*g);
    // Every R-class sits inside a Q-class.
    for (const auto& rc : cs.r_classes)
      for (Element x : rc) CHECK(cs.q_class_of[x] == cs.q_class_of[rc.front()]);
    // #Q-classes = number of conjugacy classes of cyclic subgroups.
    std::set<std::vector<Element>> cyclic_classes;
    for (Element x = 0; x < g->order(); ++x) {
      const auto c = Subgroup::generated(g, std::vector<Element>{x});
      std::vector<Element> best(c.members().begin(), c.members().end());
      for (Element y = 0; y < g->order(); ++y) {
        const auto cj = c.conjugate(y);
        std::vector<Element> m(cj.members().begin(), cj.members().end());
        best = std::min(best, m);
      }
      cyclic_classes.insert(best);
    }
    CHECK(cs.q_classes.size() == cyclic_classes.size());
    for (Element x = 0; x < g->order(); ++x) {
      CHECK(conjugacy_class(*g, x).size() * centralizer(g, x).order() == g->order());
      const auto d = sg_data(*g, x);
      const auto cyc = Subgroup::generated(g, std::vector<Element>{x});
      CHECK(d.s_g.size() == normalizer(cyc).order() / centralizer(g, x).order());
      CHECK(d.t_g.size() * d.sbar_g.size() == static_cast<std::size_t>(euler_phi(d.n)));
      // Conjugacy classes and R-classes inside the Q-class of x.
      std::set<std::uint32_t> cc, rc;
      for (Element y : cs.q_classes[cs.q_class_of[x]]) {
        cc.insert(cs.class_of[y]);
        rc.insert(cs.r_class_of[y]);
      }
      const auto phi = static_cast<std::size_t>(euler_phi(d.n));
      CHECK(phi / d.s_g.size() == cc.size());
      CHECK(phi / d.sbar_g.size() == rc.size());
    }
  }
}

TEST_CASE("S_g examples") {
  const auto c5 = load_group("cyclic:5");
  auto d = sg_data(*c5, parse_element(*c5, "g"));
  CHECK(d.s_g == std::vector<std::int64_t>{1});
  CHECK(d.sbar_g == std::vector<std::int64_t>{1, 4});
  CHECK(d.t_g == std::vector<std::int64_t>{1, 2});

  const auto d8 = load_group("dihedral:8");
  d = sg_data(*d8, parse_element(*d8, "r"));
  CHECK(d.s_g == std::vector<std::int64_t>{1, 3});
  CHECK(d.t_g == std::vector<std::int64_t>{1});

  const auto d16 = load_group("dihedral:16");
  d = sg_data(*d16, parse_element(*d16, "r"));
  CHECK(d.sbar_g == std::vector<std::int64_t>{1, 7});
  CHECK(d.t_g == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("subnormal series") {
  const auto d8 = load_group("dihedral:8");
  auto s = subnormal_series(d8, parse_element(*d8, "r"));
  CHECK(s.length() == 1);
  CHECK(s.chain.back().order() == 8);

  const auto c12 = load_group("cyclic:12");
  CHECK(subnormal_series(c12, parse_element(*c12, "g^3")).length() <= 1);

  const auto s3 = load_group("symmetric:3");
  try {
    subnormal_series(s3, parse_element(*s3, "(1 2)"));
    FAIL("expected NotSubnormal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSubnormal);
  }

  const auto q16 = load_group("quaternion:16");
  for (Element x = 0; x < q16->order(); ++x) {
    const auto ser = subnormal_series(q16, x);
    for (std::size_t i = 1; i < ser.chain.size(); ++i)
      CHECK(ser.chain[i - 1].is_normal_in(ser.chain[i]));
  }
}

TEST_CASE("group predicates") {
  auto p = group_predicates(load_group("quaternion:8"));
  CHECK(p.nilpotent);
  CHECK(p.eligible);
  p = group_predicates(load_group("symmetric:3"));
  CHECK(p.eligible);
  CHECK_FALSE(p.nilpotent);
  CHECK(p.supersolvable);
  p = group_predicates(load_group("symmetric:4"));
  CHECK_FALSE(p.supersolvable);
  CHECK(p.abelian_by_supersolvable);
  // S4 element orders are 1, 2, 3, 4: all exempt.
  CHECK(p.eligible);
  p = group_predicates(load_group("metacyclic:7,3,2"));
  CHECK(p.supersolvable);
  CHECK(p.eligible);
}

TEST_CASE("quotients") {
  const auto d8 = load_group("dihedral:8");
  const auto rr = Subgroup::generated(d8, std::vector<Element>{parse_element(*d8, "r")});
  CHECK(quotient(rr).group->order() == 2);
  CHECK(quotient(Subgroup::whole(d8)).group->order() == 1);
  const auto q8 = load_group("quaternion:8");
  const auto q = quotient(center(q8));
  CHECK(q.group->order() == 4);
  CHECK(q.group->exponent() == 2);
  const auto s = Subgroup::generated(d8, std::vector<Element>{parse_element(*d8, "s")});
  CHECK_THROWS_AS(quotient(s), Error);
}

TEST_CASE("upper central series") {
  auto z = upper_central_series(load_group("dihedral:8"));
  REQUIRE(z.size() == 3);
  CHECK(z[1].order() == 2);
  CHECK(z[2].order() == 8);
  z = upper_central_series(load_group("cyclic:6"));
  REQUIRE(z.size() == 2);
  CHECK(z[1].order() == 6);
  z = upper_central_series(load_group("symmetric:3"));
  CHECK(z.back().order() == 1);
}
