#include "zgcu/report.hpp"

#include "zgcu/error.hpp"
#include "zgcu/rational.hpp"

namespace zgcu {

namespace {

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::InvalidInput, "bad integer in element");
    return z;
  }
  fail(ErrorKind::InvalidInput, "element coefficients must be integers or decimal strings");
}

json members(const Subgroup& h) {
  json out = json::array();
  for (Element x : h.members()) out.push_back(x);
  return out;
}

json labelled(const FiniteGroup& g, const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(g.label(x));
  return out;
}

}  // namespace

json element_to_json(const GroupRingElement& u) {
  json out = json::array();
  for (const auto& [x, c] : u.terms())
    out.push_back(json::array({x, integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
  return out;
}

GroupRingElement element_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "element must be a list of triples");
  std::vector<GroupRingElement::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned())
      fail(ErrorKind::InvalidInput, "element term must be [index, numerator, denominator]");
    const auto x = t[0].get<std::uint64_t>();
    if (x >= g->order()) fail(ErrorKind::InvalidInput, "element index out of range");
    const Integer den = integer_from_json(t[2]);
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
    Rational q(integer_from_json(t[1]), den);
    q.canonicalize();
    terms.emplace_back(static_cast<Element>(x), q);
  }
  return GroupRingElement::from_terms(g, std::move(terms));
}

json descriptor_to_json(const BassDescriptor& d) {
  return {{"g", d.g}, {"k", d.k}, {"m", d.m}};
}

json subgroup_to_json(const Subgroup& h) {
  return {{"order", h.order()}, {"members", members(h)}};
}

json series_to_json(const SubnormalSeries& s) {
  json chain = json::array();
  for (const auto& h : s.chain) chain.push_back(subgroup_to_json(h));
  return {{"generator", s.generator}, {"chain", chain}, {"transversals", s.transversals}};
}

json group_info_json(const GroupPtr& g, const Bounds& bounds) {
  const GroupPredicates p = group_predicates(g, bounds);
  json elements = json::array();
  for (Element x = 0; x < g->order(); ++x)
    elements.push_back({{"index", x}, {"label", g->label(x)}, {"order", g->element_order(x)}});
  json gens = json::array();
  for (Element x : g->generators()) gens.push_back(x);
  json out = {
      {"name", g->name()},
      {"order", g->order()},
      {"exponent", g->exponent()},
      {"generators", gens},
      {"elements", elements},
      {"abelian", p.abelian},
      {"nilpotent", p.nilpotent},
      {"supersolvable", p.supersolvable},
      {"abelian_by_supersolvable", p.abelian_by_supersolvable},
      {"eligible", p.eligible},
  };
  if (p.non_subnormal_witness) out["non_subnormal_witness"] = *p.non_subnormal_witness;
  return out;
}

json classes_json(const FiniteGroup& g) {
  const ClassStructure cs = class_structure(g);
  json reps = json::array();
  for (Element r : cs.representatives) {
    const SgData d = sg_data(g, r);
    reps.push_back({{"g", r},
                    {"label", g.label(r)},
                    {"order", d.n},
                    {"S_g", d.s_g},
                    {"Sbar_g", d.sbar_g},
                    {"T_g", d.t_g}});
  }
  return {{"conjugacy_classes", cs.conjugacy_classes},
          {"r_classes", cs.r_classes},
          {"q_classes", cs.q_classes},
          {"representatives", reps},
          {"rank", cs.rank()}};
}

json identities_json(const BassIdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}});
  return {{"checks", checks}, {"all_hold", r.all_hold()}};
}

json trace_json(const CentralizationTrace& t) {
  json stages = json::array();
  for (const auto& s : t.stages) stages.push_back(element_to_json(s));
  json checks = json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"conjugates_stay_in_ring", c.conjugates_stay_in_ring},
                      {"fixed_by_previous_term", c.fixed_by_previous_term},
                      {"transversal_independent", c.transversal_independent},
                      {"alternate_transversal", c.alternate_transversal}});
  return {{"series", series_to_json(t.series)},
          {"stages", stages},
          {"checks", checks},
          {"central", t.central},
          {"all_hold", t.all_hold()},
          {"result", element_to_json(t.result())}};
}

json generalized_unit_json(const GeneralizedBassUnit& u) {
  json d = descriptor_to_json(u.descriptor);
  d["M"] = members(u.m_sub);
  return {{"descriptor", d},
          {"n_b", u.n_b},
          {"base", element_to_json(u.base)},
          {"value", element_to_json(u.value)},
          {"inverse", element_to_json(u.inverse)}};
}

json component_json(const SimpleComponentInfo& info) {
  return {{"n", info.n},
          {"k", info.k},
          {"s", info.s},
          {"section", info.section},
          {"action", info.action},
          {"twisting", info.twisting},
          {"twisting_trivial", info.twisting_trivial},
          {"center_degree", info.center_degree},
          {"center_real", info.center_real},
          {"dimension", info.dimension},
          {"dimension_from_trace", info.dimension_from_trace},
          {"flags", info.flags}};
}

json shoda_json(const ShodaSearch& s) {
  json pairs = json::array();
  for (const auto& p : s.pairs)
    pairs.push_back({{"H", members(p.h)},
                     {"K", members(p.k)},
                     {"N", members(p.n)},
                     {"y", p.y},
                     {"eps", element_to_json(p.eps)},
                     {"e", element_to_json(p.e)},
                     {"conjugates", p.conjugate_count},
                     {"component", component_json(component_params(p))}});
  return {{"pairs", pairs},
          {"pairs_tested", s.pairs_tested},
          {"pairs_accepted", s.pairs_accepted},
          {"sum_is_one", s.sum_is_one},
          {"pairwise_orthogonal", s.pairwise_orthogonal},
          {"equivalence_tests_agree", s.equivalence_tests_agree},
          {"deficit", element_to_json(s.deficit)}};
}

json independence_json(const IndependenceReport& r) {
  return {{"status", to_string(r.status)},
          {"numerical_rank", r.numerical_rank},
          {"sigma_ratio", r.sigma_ratio},
          {"singular_values", r.singular_values},
          {"log_vectors", r.log_vectors},
          {"real_components", r.real_components},
          {"digits", r.digits},
          {"separator_retries", r.separator_retries},
          {"detail", r.detail}};
}

json basis_json(const CentralUnitBasis& b) {
  json elements = json::array();
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    const auto& e = b.elements[i];
    const auto& c = b.verification.elements[i];
    json item = {{"descriptor", descriptor_to_json(e.descriptor)},
                 {"label", b.group->label(e.descriptor.g)},
                 {"series", series_to_json(e.series)},
                 {"value", element_to_json(e.value)},
                 {"central", c.central},
                 {"unit", c.unit}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    elements.push_back(std::move(item));
  }
  json verification = {{"all_central_units", b.verification.all_central_units},
                       {"cardinality_matches", b.verification.cardinality_matches}};
  if (b.verification.independence)
    verification["independence"] = independence_json(*b.verification.independence);
  return {{"group", b.group->name()},
          {"order", b.group->order()},
          {"rank", b.rank},
          {"elements", elements},
          {"verification", verification}};
}

}  // namespace zgcu
