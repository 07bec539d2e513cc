#include "zgcu/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zgcu/rational.hpp"

namespace zgcu {

namespace {

// Groups the given element sets into unions along a representative map, ordered by min member.
std::vector<std::vector<Element>> merge_by(const std::vector<std::uint32_t>& owner_of,
                                           std::size_t n, std::vector<std::uint32_t>& out_of) {
  std::vector<std::vector<Element>> out;
  std::vector<int> slot(n, -1);
  out_of.assign(owner_of.size(), 0);
  for (std::size_t x = 0; x < owner_of.size(); ++x) {
    const auto root = owner_of[x];
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(static_cast<Element>(x));
    out_of[x] = static_cast<std::uint32_t>(slot[root]);
  }
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

}  // namespace

std::vector<Element> conjugacy_class(const FiniteGroup& g, Element x) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> orbit{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (Element s : g.generators()) {
      const Element y = g.conj(orbit[head], s);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

ClassStructure class_structure(const FiniteGroup& g) {
  ClassStructure cs;
  const std::size_t n = g.order();
  cs.class_of.assign(n, 0);
  std::vector<bool> done(n, false);
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    auto cls = conjugacy_class(g, x);
    for (Element y : cls) {
      done[y] = true;
      cs.class_of[y] = static_cast<std::uint32_t>(cs.conjugacy_classes.size());
    }
    cs.conjugacy_classes.push_back(std::move(cls));
  }

  // Union over classes of x^r, gcd(r, |x|) = 1, and separately x ~ x^-1.
  UnionFind q(n), r(n);
  for (Element x = 0; x < n; ++x) {
    q.unite(x, cs.conjugacy_classes[cs.class_of[x]].front());
    r.unite(x, cs.conjugacy_classes[cs.class_of[x]].front());
    r.unite(x, g.inv(x));
    const std::int64_t ord = g.element_order(x);
    for (std::int64_t e = 2; e < ord; ++e)
      if (gcd64(e, ord) == 1) q.unite(x, g.pow(x, e));
  }
  std::vector<std::uint32_t> q_root(n), r_root(n);
  for (Element x = 0; x < n; ++x) {
    q_root[x] = q.find(x);
    r_root[x] = r.find(x);
  }
  cs.q_classes = merge_by(q_root, n, cs.q_class_of);
  cs.r_classes = merge_by(r_root, n, cs.r_class_of);
  for (const auto& qc : cs.q_classes) cs.representatives.push_back(qc.front());
  return cs;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  if (n <= 2) return {1};
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < n; ++k)
    if (gcd64(k, n) == 1) out.push_back(k);
  return out;
}

SgData sg_data(const FiniteGroup& g, Element x) {
  SgData d;
  d.g = x;
  d.n = g.element_order(x);
  const auto cls = conjugacy_class(g, x);
  const auto units = units_mod(d.n);
  for (std::int64_t l : units)
    if (std::binary_search(cls.begin(), cls.end(), g.pow(x, l))) d.s_g.push_back(l);

  std::set<std::int64_t> sbar(d.s_g.begin(), d.s_g.end());
  if (d.n > 2)
    for (std::int64_t l : d.s_g) sbar.insert(d.n - l);
  d.sbar_g.assign(sbar.begin(), sbar.end());

  std::set<std::int64_t> covered;
  for (std::int64_t u : units) {
    if (covered.count(u)) continue;
    d.t_g.push_back(u);
    for (std::int64_t s : d.sbar_g) covered.insert(d.n > 2 ? mod_floor(u * s, d.n) : 1);
  }
  return d;
}

}  // namespace zgcu
