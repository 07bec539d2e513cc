#include "zgcu/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "zgcu/error.hpp"

namespace zgcu {

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// Closure of a generating set; returns sorted members.
std::vector<Element> closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> found{0};
  seen[0] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(found[head], s);
      if (!seen[y]) {
        seen[y] = true;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

SubgroupLattice SubgroupLattice::compute(const GroupPtr& g, const Bounds& bounds) {
  if (g->order() > bounds.max_order)
    fail(ErrorKind::BoundExceeded, "subgroup enumeration: |G| = " + std::to_string(g->order()) +
                                       " exceeds bound " + std::to_string(bounds.max_order));
  const FiniteGroup& grp = *g;

  // Distinct cyclic subgroups, each with one generator.
  std::map<std::vector<Element>, Element> cyclic;
  for (Element x = 0; x < grp.order(); ++x) cyclic.try_emplace(closure(grp, {x}), x);

  std::map<std::vector<Element>, std::vector<Element>> found;  // members -> generators
  std::vector<std::vector<Element>> frontier{{0}};
  found.emplace(std::vector<Element>{0}, std::vector<Element>{});
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& members : frontier) {
      const auto& gens = found.at(members);
      std::vector<bool> mask(grp.order(), false);
      for (Element m : members) mask[m] = true;
      for (const auto& [cyc, x] : cyclic) {
        if (mask[x]) continue;
        auto ext_gens = gens;
        ext_gens.push_back(x);
        auto ext = closure(grp, ext_gens);
        if (found.find(ext) != found.end()) continue;
        if (found.size() >= bounds.max_subgroups)
          fail(ErrorKind::BoundExceeded, "subgroup count exceeds bound " +
                                             std::to_string(bounds.max_subgroups));
        found.emplace(ext, std::move(ext_gens));
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice lattice;
  lattice.group_ = g;
  for (const auto& [members, gens] : found)
    lattice.subgroups_.push_back(SubgroupAccess::make_trusted(g, members));
  std::sort(lattice.subgroups_.begin(), lattice.subgroups_.end());
  for (const auto& h : lattice.subgroups_) lattice.normal_.push_back(h.is_normal());
  return lattice;
}

std::size_t SubgroupLattice::index_of(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h);
  if (it == subgroups_.end() || !(*it == h))
    fail(ErrorKind::InvalidInput, "subgroup is not in the lattice");
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<Subgroup> SubgroupLattice::normal_subgroups() const {
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (normal_[i]) out.push_back(subgroups_[i]);
  return out;
}

std::vector<Subgroup> subgroups(const GroupPtr& g, const Bounds& bounds) {
  return SubgroupLattice::compute(g, bounds).subgroups();
}

Subgroup normalizer(const Subgroup& h, const Subgroup& within) {
  const FiniteGroup& g = h.group();
  std::vector<Element> out;
  for (Element x : within.members()) {
    bool keeps = true;
    for (Element m : h.members())
      if (!h.contains(g.conj(m, x))) {
        keeps = false;
        break;
      }
    if (keeps) out.push_back(x);
  }
  return SubgroupAccess::make_trusted(h.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& h) { return normalizer(h, Subgroup::whole(h.parent())); }

Subgroup centralizer(const GroupPtr& g, Element s) {
  std::vector<Element> out;
  for (Element x = 0; x < g->order(); ++x)
    if (g->mul(s, x) == g->mul(x, s)) out.push_back(x);
  return SubgroupAccess::make_trusted(g, std::move(out));
}

Subgroup centralizer(const Subgroup& s) {
  const GroupPtr& g = s.parent();
  std::vector<Element> out;
  for (Element x = 0; x < g->order(); ++x) {
    bool commutes = true;
    for (Element m : s.members())
      if (g->mul(m, x) != g->mul(x, m)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return SubgroupAccess::make_trusted(g, std::move(out));
}

Subgroup center(const GroupPtr& g) { return centralizer(Subgroup::whole(g)); }

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<Element> comms;
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = 0; b < g->order(); ++b) comms.push_back(g->commutator(a, b));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return Subgroup::generated(g, comms);
}

Subgroup normal_closure(const Subgroup& h, const Subgroup& within) {
  const FiniteGroup& g = h.group();
  std::vector<Element> gens;
  for (Element x : within.members())
    for (Element m : h.members()) gens.push_back(g.conj(m, x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::generated(h.parent(), gens);
}

std::vector<Element> right_transversal(const Subgroup& big, const Subgroup& small) {
  const FiniteGroup& g = big.group();
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element x : big.members()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element s : small.members()) covered[g.mul(s, x)] = true;
  }
  return reps;
}

Quotient quotient(const Subgroup& n) {
  if (!n.is_normal()) fail(ErrorKind::NotNormal, "quotient: subgroup is not normal");
  const FiniteGroup& g = n.group();
  Quotient q;
  q.projection.assign(g.order(), 0);
  std::vector<bool> assigned(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    const auto idx = static_cast<Element>(q.representatives.size());
    q.representatives.push_back(x);
    for (Element m : n.members()) {
      const Element y = g.mul(m, x);
      assigned[y] = true;
      q.projection[y] = idx;
    }
  }
  const std::size_t k = q.representatives.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("[" + g.label(q.representatives[i]) + "]");
    for (std::size_t j = 0; j < k; ++j)
      table[i][j] = q.projection[g.mul(q.representatives[i], q.representatives[j])];
  }
  std::string name = g.name().empty() ? "quotient" : g.name() + "/N";
  auto qg = FiniteGroup::from_table(std::move(table), std::move(name), std::move(labels));
  std::vector<Element> gens;
  for (Element s : g.generators()) gens.push_back(q.projection[s]);
  q.group = with_generators(qg, gens);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (q.projection[g.mul(a, b)] != q.group->mul(q.projection[a], q.projection[b]))
        fail(ErrorKind::VerificationFailure, "quotient projection is not a homomorphism");
  return q;
}

std::vector<Subgroup> upper_central_series(const GroupPtr& g) {
  std::vector<Subgroup> series{Subgroup::trivial(g)};
  for (;;) {
    const Subgroup& prev = series.back();
    std::vector<Element> next;
    for (Element x = 0; x < g->order(); ++x) {
      bool central_mod = true;
      for (Element y : g->generators())
        if (!prev.contains(g->commutator(x, y))) {
          central_mod = false;
          break;
        }
      if (central_mod) next.push_back(x);
    }
    if (next.size() == prev.order()) break;
    series.push_back(SubgroupAccess::make_trusted(g, std::move(next)));
  }
  return series;
}

SubnormalSeries SubnormalSeries::conjugate(Element h) const {
  std::vector<Subgroup> conj_chain;
  for (const auto& n : chain) conj_chain.push_back(n.conjugate(h));
  return make_series(chain.front().group().conj(generator, h), std::move(conj_chain));
}

SubnormalSeries make_series(Element generator, std::vector<Subgroup> chain) {
  if (chain.empty()) fail(ErrorKind::InvalidInput, "subnormal series is empty");
  const Subgroup& bottom = chain.front();
  if (bottom.group().element_order(generator) != bottom.order() || !bottom.contains(generator))
    fail(ErrorKind::InvalidInput, "series must start at the cyclic subgroup <g>");
  if (chain.back().order() != bottom.group().order())
    fail(ErrorKind::InvalidInput, "series must end at G");
  SubnormalSeries s;
  s.generator = generator;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i - 1].is_normal_in(chain[i]))
      fail(ErrorKind::NotSubnormal, "series term " + std::to_string(i - 1) +
                                        " is not normal in the next term");
    s.transversals.push_back(right_transversal(chain[i], chain[i - 1]));
  }
  s.chain = std::move(chain);
  return s;
}

SubnormalSeries subnormal_series(const GroupPtr& g, Element x) {
  const Subgroup cyc = Subgroup::generated(g, std::vector<Element>{x});
  std::vector<Subgroup> descending{Subgroup::whole(g)};
  for (;;) {
    Subgroup next = normal_closure(cyc, descending.back());
    if (next == descending.back()) break;
    descending.push_back(std::move(next));
  }
  if (!(descending.back() == cyc))
    fail(ErrorKind::NotSubnormal, "<" + g->label(x) + "> is not subnormal: normal closure chain "
                                      "stabilizes at a subgroup of order " +
                                      std::to_string(descending.back().order()));
  std::reverse(descending.begin(), descending.end());
  return make_series(x, std::move(descending));
}

bool is_subnormal(const Subgroup& h) {
  Subgroup current = Subgroup::whole(h.parent());
  for (;;) {
    Subgroup next = normal_closure(h, current);
    if (next == current) return current == h;
    current = std::move(next);
  }
}

namespace {

// Depth-first search for a chain of G-normal subgroups from `from` to G with prime steps.
class SupersolvableSearch {
 public:
  explicit SupersolvableSearch(const SubgroupLattice& lattice) : lattice_(lattice) {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice.is_normal(i)) normals_.push_back(i);
  }

  bool reaches_top(std::size_t from) {
    const std::size_t top = lattice_.size() - 1;
    if (from == top) return true;
    if (auto it = memo_.find(from); it != memo_.end()) return it->second;
    bool ok = false;
    const Subgroup& a = lattice_[from];
    for (std::size_t j : normals_) {
      const Subgroup& b = lattice_[j];
      if (b.order() <= a.order() || b.order() % a.order() != 0) continue;
      if (!is_prime(b.order() / a.order()) || !a.is_subgroup_of(b)) continue;
      if (reaches_top(j)) {
        ok = true;
        break;
      }
    }
    memo_[from] = ok;
    return ok;
  }

 private:
  const SubgroupLattice& lattice_;
  std::vector<std::size_t> normals_;
  std::map<std::size_t, bool> memo_;
};

}  // namespace

GroupPredicates group_predicates(const GroupPtr& g, const Bounds& bounds) {
  GroupPredicates p;
  p.abelian = g->is_abelian();
  p.nilpotent = upper_central_series(g).back().order() == g->order();

  const auto lattice = SubgroupLattice::compute(g, bounds);
  SupersolvableSearch search(lattice);
  p.supersolvable = search.reaches_top(0);
  for (std::size_t i = 0; i < lattice.size() && !p.abelian_by_supersolvable; ++i) {
    if (!lattice.is_normal(i) || !lattice[i].is_abelian()) continue;
    p.abelian_by_supersolvable = search.reaches_top(i);
  }

  bool all_subnormal = true;
  std::set<std::vector<Element>> checked;
  for (Element x = 0; x < g->order() && all_subnormal; ++x) {
    if (order_divides_4_or_6(g->element_order(x))) continue;
    const Subgroup cyc = Subgroup::generated(g, std::vector<Element>{x});
    const std::vector<Element> key(cyc.members().begin(), cyc.members().end());
    if (!checked.insert(key).second) continue;
    if (!is_subnormal(cyc)) {
      all_subnormal = false;
      p.non_subnormal_witness = x;
    }
  }
  p.eligible = p.abelian_by_supersolvable && all_subnormal;
  return p;
}

}  // namespace zgcu
