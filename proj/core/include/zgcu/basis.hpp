#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgcu/bass.hpp"
#include "zgcu/catalog.hpp"
#include "zgcu/group_ring.hpp"
#include "zgcu/independence.hpp"
#include "zgcu/subgroups.hpp"

namespace zgcu {

/// #R-classes - #Q-classes.
std::size_t rank_formula(const FiniteGroup& g);

struct BasisElement {
  BassDescriptor descriptor;
  SubnormalSeries series;
  /// c_N(b(k, m, g)).
  GroupRingElement value;
};

struct UnitCheck {
  bool central = false;
  bool unit = false;
  std::string detail;
};

struct BasisVerification {
  std::vector<UnitCheck> elements;
  bool all_central_units = true;
  bool cardinality_matches = false;
  std::optional<IndependenceReport> independence;
};

struct CentralUnitBasis {
  GroupPtr group;
  std::vector<BasisElement> elements;
  std::size_t rank = 0;
  BasisVerification verification;
};

/// One element c_N(b(k, ord_n(k), g)) per Q-class representative g and k in T_g \ {1},
/// along the normal-closure series of <g>. Throws NotEligible when the hypotheses fail.
/// Centrality, unit-ness and the cardinality are verified; independence is not.
CentralUnitBasis central_unit_basis(const GroupPtr& g, const Bounds& bounds = {});

/// Exact commutation with every generator and an exact integral inverse, per element.
BasisVerification verify_central_and_unit(const CentralUnitBasis& basis);

IndependenceReport verify_independence(const CentralUnitBasis& basis,
                                       const IndependenceOptions& options = {});

struct ScalingCheck {
  Element g = 0;
  std::int64_t k = 1;
  std::int64_t t = 1;
  bool holds = false;
};

/// c(b(k, t m, g)) = c(b(k, m, g))^t for t = 1..max_t and every basis element.
std::vector<ScalingCheck> verify_exponent_scaling(const CentralUnitBasis& basis, int max_t = 3);

struct TorsionClaim {
  Element g = 0;
  std::int64_t k = 1;
  std::int64_t l = 1;
  /// l lies in S_g (not only in Sbar_g).
  bool in_s_g = false;
  std::optional<std::uint64_t> order;
  /// Torsion, and the order divides phi(|G|) when l is in S_g.
  bool holds = false;
};

/// For each representative g with a subnormal series, k in T_g and l in Sbar_g:
/// c(b(l, phi(|G|), g^k)) has finite order, found by exact power iteration.
std::vector<TorsionClaim> verify_torsion_claims(const GroupPtr& g, std::size_t max_claims = 64);

}  // namespace zgcu
