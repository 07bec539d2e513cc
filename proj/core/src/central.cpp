#include "zgcu/central.hpp"

#include <algorithm>
#include <random>

#include "zgcu/bass.hpp"
#include "zgcu/error.hpp"

namespace zgcu {

namespace {

bool supported_on(const GroupRingElement& x, const Subgroup& h) {
  for (const auto& [y, c] : x.terms())
    if (!h.contains(y)) return false;
  return true;
}

// Another right transversal of `small`: each representative t moved to y t for random
// y in small, visited in shuffled order.
std::vector<Element> random_transversal(const Subgroup& small, std::span<const Element> reps,
                                        std::mt19937_64& rng) {
  const FiniteGroup& g = small.group();
  std::vector<Element> out;
  std::uniform_int_distribution<std::size_t> pick(0, small.order() - 1);
  for (Element t : reps) out.push_back(g.mul(small.members()[pick(rng)], t));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

bool CentralizationTrace::all_hold() const {
  if (!central) return false;
  return std::all_of(checks.begin(), checks.end(), [](const StageCheck& c) { return c.all_hold(); });
}

GroupRingElement conjugate_product(const GroupRingElement& x, std::span<const Element> over) {
  GroupRingElement out = GroupRingElement::one(x.group());
  for (Element h : over) out = out * x.conjugate(h);
  return out;
}

CentralizationTrace centralize(const SubnormalSeries& series, const GroupRingElement& u,
                               const CentralizeOptions& options) {
  const GroupPtr& g = series.chain.front().parent();
  if (u.group() != g) fail(ErrorKind::GroupMismatch, "unit and series live in different groups");
  if (!supported_on(u, series.chain.front()))
    fail(ErrorKind::SupportLeak, "unit is not supported on the bottom of the series");
  if (!u.is_integral()) fail(ErrorKind::InvalidInput, "unit must have integer coefficients");

  CentralizationTrace trace;
  trace.series = series;
  trace.stages.push_back(u);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 1; i < series.chain.size(); ++i) {
    const GroupRingElement& prev = trace.stages.back();
    const Subgroup& lower = series.chain[i - 1];
    const Subgroup& upper = series.chain[i];
    const auto& transversal = series.transversals[i - 1];
    GroupRingElement next = conjugate_product(prev, transversal);
    if (options.check) {
      StageCheck c;
      for (Element x : upper.members()) {
        const auto cx = prev.conjugate(x);
        if (!cx.is_integral() || !supported_on(cx, lower)) {
          c.conjugates_stay_in_ring = false;
          break;
        }
      }
      for (Element x : lower.members())
        if (!prev.commutes_with(x)) {
          c.fixed_by_previous_term = false;
          break;
        }
      c.alternate_transversal = random_transversal(lower, transversal, rng);
      c.transversal_independent = conjugate_product(prev, c.alternate_transversal) == next;
      trace.checks.push_back(std::move(c));
    }
    trace.stages.push_back(std::move(next));
  }
  trace.central = trace.result().is_central();
  if (!trace.central) fail(ErrorKind::VerificationFailure, "c_N(u) is not central");
  return trace;
}

GroupRingElement central_product(const SubnormalSeries& series, const GroupRingElement& u) {
  CentralizeOptions o;
  o.check = false;
  return centralize(series, u, o).result();
}

NilpotentCentralization centralize_nilpotent(const GroupRingElement& b, Element g) {
  const GroupPtr& grp = b.group();
  const auto z = upper_central_series(grp);
  if (z.back().order() != grp->order())
    fail(ErrorKind::NotEligible, "the group is not nilpotent");
  const Subgroup cyc = Subgroup::generated(grp, std::vector<Element>{g});
  if (!supported_on(b, cyc)) fail(ErrorKind::SupportLeak, "b is not supported on <g>");

  NilpotentCentralization out{.series_value = GroupRingElement(grp)};
  out.stages.push_back(b);
  const std::size_t cls = z.size() - 1;  // Z_cls = G
  for (std::size_t i = 2; i <= cls; ++i)
    out.stages.push_back(conjugate_product(out.stages.back(), z[i].members()));

  // N_i = <Z_i, g>; b_(i) = (product over a transversal of N_{i-1} in N_i)^{|Z_i cap N_{i-1}|}.
  std::vector<Subgroup> n_terms;
  for (std::size_t i = 0; i <= cls; ++i) n_terms.push_back(z[i].join(cyc));
  out.lhs_exponent = cls >= 1 ? n_terms[1].order() / n_terms[0].order() : 1;
  for (std::size_t i = 2; i <= cls; ++i)
    out.rhs_exponent *= z[i].intersect(n_terms[i - 1]).order();
  std::vector<Subgroup> chain{n_terms[0]};
  for (std::size_t i = 1; i <= cls; ++i)
    if (!(n_terms[i] == chain.back())) chain.push_back(n_terms[i]);
  out.series = make_series(g, std::move(chain));
  out.series_value = central_product(out.series, b);
  out.relation_holds =
      out.value().pow(out.lhs_exponent) == out.series_value.pow(out.rhs_exponent);
  out.torsion = torsion_order(out.value(), torsion_bound(*grp)).has_value();
  return out;
}

ConjugateProductLaws conjugate_product_laws(const GroupRingElement& u, const GroupRingElement& v,
                            const SubnormalSeries& series, Element h) {
  ConjugateProductLaws r;
  const auto cu = central_product(series, u);
  r.multiplicative = central_product(series, u * v) == cu * central_product(series, v);
  r.conjugation_invariant = central_product(series.conjugate(h), u.conjugate(h)) == cu;
  return r;
}

}  // namespace zgcu
