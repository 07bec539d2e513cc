#include "zgcu/basis.hpp"

#include <algorithm>

#include "zgcu/central.hpp"
#include "zgcu/classes.hpp"
#include "zgcu/error.hpp"
#include "zgcu/parallel.hpp"
#include "zgcu/rational.hpp"

namespace zgcu {

std::size_t rank_formula(const FiniteGroup& g) { return class_structure(g).rank(); }

CentralUnitBasis central_unit_basis(const GroupPtr& g, const Bounds& bounds) {
  const GroupPredicates pred = group_predicates(g, bounds);
  if (!pred.abelian_by_supersolvable)
    fail(ErrorKind::NotEligible, "the group is not abelian-by-supersolvable");
  if (!pred.eligible) {
    std::string msg = "a cyclic subgroup of order not dividing 4 or 6 is not subnormal";
    if (pred.non_subnormal_witness)
      msg += ": <" + g->label(*pred.non_subnormal_witness) + "> of order " +
             std::to_string(g->element_order(*pred.non_subnormal_witness));
    fail(ErrorKind::NotEligible, msg);
  }

  const ClassStructure cs = class_structure(*g);
  struct Task {
    Element g;
    std::int64_t k;
  };
  std::vector<Task> tasks;
  for (Element rep : cs.representatives) {
    const SgData d = sg_data(*g, rep);
    for (std::size_t i = 1; i < d.t_g.size(); ++i) tasks.push_back({rep, d.t_g[i]});
  }
  auto elements = parallel_map(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    const std::int64_t n = g->element_order(t.g);
    const BassDescriptor d = bass_descriptor(*g, t.g, t.k, multiplicative_order(t.k, n));
    SubnormalSeries series = subnormal_series(g, t.g);
    GroupRingElement value = central_product(series, bass_unit(g, d));
    return BasisElement{d, std::move(series), std::move(value)};
  });

  CentralUnitBasis basis{g, std::move(elements), cs.rank(), {}};
  basis.verification = verify_central_and_unit(basis);
  if (!basis.verification.all_central_units)
    fail(ErrorKind::VerificationFailure, "a basis element is not a central unit");
  if (!basis.verification.cardinality_matches)
    fail(ErrorKind::VerificationFailure, "basis size differs from #R-classes - #Q-classes");
  return basis;
}

BasisVerification verify_central_and_unit(const CentralUnitBasis& basis) {
  BasisVerification v;
  v.elements = parallel_map(basis.elements.size(), [&](std::size_t i) {
    const GroupRingElement& u = basis.elements[i].value;
    UnitCheck c;
    c.central = u.is_central();
    try {
      const auto inv = is_unit(u);
      c.unit = (u * inv).is_one();
    } catch (const Error& e) {
      c.detail = e.what();
    }
    if (!c.central) c.detail = "does not commute with every generator";
    return c;
  });
  for (const auto& c : v.elements) v.all_central_units = v.all_central_units && c.central && c.unit;
  v.cardinality_matches = basis.elements.size() == rank_formula(*basis.group);
  return v;
}

IndependenceReport verify_independence(const CentralUnitBasis& basis,
                                       const IndependenceOptions& options) {
  std::vector<GroupRingElement> units;
  for (const auto& e : basis.elements) units.push_back(e.value);
  return verify_independence(units, options);
}

std::vector<ScalingCheck> verify_exponent_scaling(const CentralUnitBasis& basis, int max_t) {
  std::vector<ScalingCheck> out;
  for (const auto& e : basis.elements)
    for (int t = 1; t <= max_t; ++t) {
      const auto& d = e.descriptor;
      const auto scaled = central_product(e.series, bass_unit(basis.group, d.g, d.k, d.m * t));
      out.push_back({d.g, d.k, t, scaled == e.value.pow(static_cast<std::uint64_t>(t))});
    }
  return out;
}

std::vector<TorsionClaim> verify_torsion_claims(const GroupPtr& g, std::size_t max_claims) {
  const ClassStructure cs = class_structure(*g);
  const std::int64_t t = euler_phi(static_cast<std::int64_t>(g->order()));
  std::vector<TorsionClaim> claims;
  std::vector<SubnormalSeries> series;
  for (Element rep : cs.representatives) {
    if (!is_subnormal(Subgroup::generated(g, std::vector<Element>{rep}))) continue;
    const SgData d = sg_data(*g, rep);
    const SubnormalSeries s = subnormal_series(g, rep);
    for (std::int64_t k : d.t_g)
      for (std::int64_t l : d.sbar_g) {
        if (claims.size() >= max_claims) break;
        TorsionClaim c;
        c.g = rep;
        c.k = k;
        c.l = l;
        c.in_s_g = std::find(d.s_g.begin(), d.s_g.end(), l) != d.s_g.end();
        claims.push_back(c);
        series.push_back(s);
      }
  }
  auto orders = parallel_map(claims.size(), [&](std::size_t i) {
    const auto& c = claims[i];
    const Element gk = g->pow(c.g, c.k);
    const auto u = central_product(series[i], bass_unit(g, gk, c.l, t));
    return torsion_order(u, static_cast<std::uint64_t>(t) * g->exponent());
  });
  for (std::size_t i = 0; i < claims.size(); ++i) {
    auto& c = claims[i];
    c.order = orders[i];
    c.holds = c.order.has_value() && (!c.in_s_g || t % static_cast<std::int64_t>(*c.order) == 0);
  }
  return claims;
}

}  // namespace zgcu
