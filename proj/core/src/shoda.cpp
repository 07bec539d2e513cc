#include "zgcu/shoda.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zgcu/error.hpp"
#include "zgcu/parallel.hpp"
#include "zgcu/rational.hpp"

namespace zgcu {

std::string to_string(ShodaRejection r) {
  switch (r) {
    case ShodaRejection::KNotNormalInH: return "K is not normal in H";
    case ShodaRejection::HNotNormalInNormalizer: return "H is not normal in N_G(K)";
    case ShodaRejection::QuotientNotCyclic: return "H/K is not cyclic";
    case ShodaRejection::NotMaximalAbelian: return "H/K is not maximal abelian in N_G(K)/K";
    case ShodaRejection::ConjugatesNotOrthogonal: return "distinct conjugates of eps(H, K) are not orthogonal";
  }
  return "unknown";
}

namespace {

// Order of y modulo K.
std::size_t order_mod(const FiniteGroup& g, Element y, const Subgroup& k) {
  std::size_t t = 1;
  for (Element p = y; !k.contains(p); p = g.mul(p, y)) ++t;
  return t;
}

}  // namespace

ShodaCheck is_strong_shoda_pair(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent() || !k.is_subgroup_of(h))
    fail(ErrorKind::InvalidInput, "strong Shoda pair test needs K <= H");
  const GroupPtr& gp = h.parent();
  const FiniteGroup& g = *gp;
  ShodaCheck out;
  auto reject = [&](ShodaRejection r) {
    out.rejection = r;
    return out;
  };
  if (!k.is_normal_in(h)) return reject(ShodaRejection::KNotNormalInH);
  Subgroup n = normalizer(k);
  if (!h.is_normal_in(n)) return reject(ShodaRejection::HNotNormalInNormalizer);

  const std::size_t index = h.order() / k.order();
  std::optional<Element> gen;
  for (Element y : h.members())
    if (order_mod(g, y, k) == index) {
      gen = y;
      break;
    }
  if (!gen) return reject(ShodaRejection::QuotientNotCyclic);

  for (Element x : n.members())
    if (!h.contains(x) && k.contains(g.commutator(x, *gen)))
      return reject(ShodaRejection::NotMaximalAbelian);

  GroupRingElement e_local = eps(h, k);
  const Subgroup cen = element_centralizer(e_local);
  const auto transversal = right_transversal(Subgroup::whole(gp), cen);
  GroupRingElement sum(gp);
  for (Element t : transversal) {
    const auto conj = e_local.conjugate(t);
    // eps^a eps^b = (eps eps^{b a^-1})^a, so testing against eps itself covers all pairs.
    if (!cen.contains(t) && !(e_local * conj).is_zero())
      return reject(ShodaRejection::ConjugatesNotOrthogonal);
    sum += conj;
  }
  out.pair = StrongShodaPair{h, k, std::move(n), *gen, std::move(e_local), std::move(sum),
                             transversal.size()};
  return out;
}

EquivalenceCheck ssp_equivalent(const StrongShodaPair& a, const StrongShodaPair& b) {
  if (a.h.parent() != b.h.parent())
    fail(ErrorKind::GroupMismatch, "pairs belong to different groups");
  EquivalenceCheck c;
  c.by_idempotent = a.e == b.e;
  const FiniteGroup& g = a.h.group();
  for (Element x = 0; x < g.order() && !c.by_conjugation; ++x)
    c.by_conjugation = a.h.conjugate(x).intersect(b.k) == a.k.conjugate(x).intersect(b.h);
  return c;
}

ShodaSearch strong_shoda_pairs(const GroupPtr& g, const Bounds& bounds) {
  const SubgroupLattice lattice = SubgroupLattice::compute(g, bounds);
  std::vector<std::size_t> h_order(lattice.size());
  std::iota(h_order.begin(), h_order.end(), 0);
  std::stable_sort(h_order.begin(), h_order.end(), [&](std::size_t a, std::size_t b) {
    return lattice[a].order() > lattice[b].order();
  });
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t hi : h_order)
    for (std::size_t ki = 0; ki < lattice.size(); ++ki)
      if (lattice[ki].order() <= lattice[hi].order() && lattice[hi].order() % lattice[ki].order() == 0 &&
          lattice[ki].is_subgroup_of(lattice[hi]))
        candidates.emplace_back(hi, ki);

  auto checks = parallel_map(candidates.size(), [&](std::size_t i) {
    return is_strong_shoda_pair(lattice[candidates[i].first], lattice[candidates[i].second]);
  });

  ShodaSearch out{.sum = GroupRingElement(g), .deficit = GroupRingElement(g)};
  out.pairs_tested = candidates.size();
  for (auto& c : checks) {
    if (!c.pair) continue;
    ++out.pairs_accepted;
    bool known = false;
    for (const auto& rep : out.pairs) {
      const auto eq = ssp_equivalent(*c.pair, rep);
      if (!eq.agree()) out.equivalence_tests_agree = false;
      known = known || eq.by_idempotent;
    }
    if (!known) out.pairs.push_back(std::move(*c.pair));
  }
  for (const auto& p : out.pairs) out.sum += p.e;
  out.deficit = GroupRingElement::one(g) - out.sum;
  out.sum_is_one = out.deficit.is_zero();
  out.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < out.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < out.pairs.size(); ++j)
      if (!(out.pairs[i].e * out.pairs[j].e).is_zero()) out.pairwise_orthogonal = false;
  return out;
}

SimpleComponentInfo component_params(const StrongShodaPair& p) {
  const FiniteGroup& g = p.h.group();
  SimpleComponentInfo info;
  info.n = static_cast<std::int64_t>(g.order() / p.n.order());
  info.k = static_cast<std::int64_t>(p.h.order() / p.k.order());
  info.s = static_cast<std::int64_t>(p.n.order() / p.h.order());

  // Exponent of each element of H modulo K with respect to y.
  std::vector<std::int64_t> exp_of(g.order(), -1);
  Element yi = 0;
  for (std::int64_t i = 0; i < info.k; ++i, yi = g.mul(yi, p.y))
    for (Element z : p.k.members()) exp_of[g.mul(yi, z)] = i;

  info.section = right_transversal(p.n, p.h);
  std::vector<std::int64_t> coset_of(g.order(), -1);
  for (std::size_t a = 0; a < info.section.size(); ++a)
    for (Element z : p.h.members()) coset_of[g.mul(z, info.section[a])] = static_cast<std::int64_t>(a);

  std::set<std::int64_t> image;
  for (Element x : info.section) {
    info.action.push_back(exp_of[g.conj(p.y, x)]);
    image.insert(info.action.back());
  }
  const std::size_t s = info.section.size();
  info.twisting.assign(s, std::vector<std::int64_t>(s, 0));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const Element prod = g.mul(info.section[a], info.section[b]);
      const Element lift = info.section[static_cast<std::size_t>(coset_of[prod])];
      info.twisting[a][b] = exp_of[g.mul(g.inv(lift), prod)];
      if (info.twisting[a][b] != 0) info.twisting_trivial = false;
    }

  const std::int64_t phi = euler_phi(info.k);
  info.center_degree = phi / static_cast<std::int64_t>(image.size());
  info.center_real = info.k <= 2 || image.count(info.k - 1) > 0;
  info.dimension = info.n * info.n * info.s * phi;
  const Rational trace = p.e.coeff(0) * Rational(static_cast<long>(g.order()));
  if (!is_integral(trace)) fail(ErrorKind::VerificationFailure, "trace of e is not an integer");
  info.dimension_from_trace = trace.get_num().get_si();
  info.flags = flag_exceptional(info);
  return info;
}

std::vector<std::string> flag_exceptional(const SimpleComponentInfo& info) {
  std::vector<std::string> flags;
  const bool small_center = info.center_degree == 1 || (info.center_degree == 2 && !info.center_real);
  const std::string center = info.center_degree == 1 ? "Q" : "an imaginary quadratic field";
  // A crossed product with trivial twisting is split, so the matrix degree is n * s.
  const std::int64_t matrix_degree = info.twisting_trivial ? info.n * info.s : info.n;
  if (matrix_degree == 2 && small_center)
    flags.push_back("exceptional-candidate (2x2 over " + center + ")");
  if (!info.twisting_trivial) {
    std::string f = "division-candidate";
    if (info.s == 2 && info.center_real) f += " (totally definite quaternion possible)";
    f += "; needs Schur-index analysis, out of scope";
    flags.push_back(f);
  }
  return flags;
}

}  // namespace zgcu
