#pragma once

#include <nlohmann/json.hpp>

#include "zgcu/basis.hpp"
#include "zgcu/bass.hpp"
#include "zgcu/central.hpp"
#include "zgcu/classes.hpp"
#include "zgcu/shoda.hpp"

namespace zgcu {

using json = nlohmann::json;

/// [[index, numerator, denominator], ...] sorted by index. Big integers are written as
/// JSON numbers when they fit in 64 bits and as decimal strings otherwise.
json element_to_json(const GroupRingElement& u);
GroupRingElement element_from_json(const GroupPtr& g, const json& j);

/// {"g", "k", "m"} plus "M" (member list) for generalized units.
json descriptor_to_json(const BassDescriptor& d);

json subgroup_to_json(const Subgroup& h);
json series_to_json(const SubnormalSeries& s);

json group_info_json(const GroupPtr& g, const Bounds& bounds = {});
json classes_json(const FiniteGroup& g);
json identities_json(const BassIdentityReport& r);
json trace_json(const CentralizationTrace& t);
json generalized_unit_json(const GeneralizedBassUnit& u);
json component_json(const SimpleComponentInfo& info);
json shoda_json(const ShodaSearch& s);
json independence_json(const IndependenceReport& r);
json basis_json(const CentralUnitBasis& b);

}  // namespace zgcu
