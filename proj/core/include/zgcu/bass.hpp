#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgcu/group_ring.hpp"
#include "zgcu/subgroups.hpp"

namespace zgcu {

/// Parameters of b(k, m, g) with k reduced to 1..|g|-1 (k = 1 when |g| <= 2 forces it).
struct BassDescriptor {
  Element g = 0;
  std::int64_t k = 1;
  std::int64_t m = 1;
};

/// Validates gcd(k, n) = 1 and k^m = 1 mod n, reducing k (negative values allowed).
/// m = 0 is allowed and gives 1; a missing m defaults to the multiplicative order of k.
BassDescriptor bass_descriptor(const FiniteGroup& g, Element x, std::int64_t k,
                               std::optional<std::int64_t> m = std::nullopt);

GroupRingElement bass_unit(const GroupPtr& g, const BassDescriptor& d);
GroupRingElement bass_unit(const GroupPtr& g, Element x, std::int64_t k, std::int64_t m);

/// The defining formula evaluated literally for k >= 1, with no reduction of k.
GroupRingElement bass_unit_unreduced(const GroupPtr& g, Element x, std::int64_t k, std::int64_t m);

struct IdentityCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
};

struct BassIdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
  std::vector<std::string> failures() const;
};

/// Evaluates the eight Bass unit identities (reduction of k, additivity in m, multiplicativity
/// in k, b(1,m,g) = 1, b(-1,m,g) = (-g)^-m, integral powers, inverses, b(n-k,m,g)) at the given
/// parameters. Identities whose congruence hypotheses fail are marked not applicable.
/// Integral powers are checked for i = 0..max_power.
BassIdentityReport bass_identities_check(const GroupPtr& g, Element x, std::int64_t k,
                                         std::int64_t k1, std::int64_t m, std::int64_t m1,
                                         int max_power = 3);

/// k = +-1 mod |g|.
bool has_finite_order(std::int64_t n, std::int64_t k);

/// Multiplicative order of u found by exact power iteration, or nullopt if u^t != 1 for all
/// t <= bound.
std::optional<std::uint64_t> torsion_order(const GroupRingElement& u, std::uint64_t bound);

/// The default iteration bound 2|G|^2.
std::uint64_t torsion_bound(const FiniteGroup& g);

struct GeneralizedBassUnit {
  BassDescriptor descriptor;
  Subgroup m_sub;
  /// 1 - M^ + b(k, m, g) M^, a unit of ZG(1 - M^) + ZG M^.
  GroupRingElement base;
  std::uint64_t n_b = 1;
  /// base^n_b, in ZG.
  GroupRingElement value;
  GroupRingElement inverse;
};

/// Finds the minimal n_b with (1 - M^ + b M^)^n_b in ZG. The search runs over the image of b
/// in (Z/|M|)[G/M], where integrality of the power is decided; `max_exponent` caps it.
GeneralizedBassUnit generalized_bass_unit(const GroupPtr& g, const Subgroup& m_sub, Element x,
                                          std::int64_t k, std::optional<std::int64_t> m = std::nullopt,
                                          std::uint64_t max_exponent = 1'000'000);

/// A Bass unit b(k', m', x) of ZG with x mapping onto xbar, whose projection onto Z(G/N)
/// equals b(k, m, xbar)^power.
struct BassLift {
  BassDescriptor lift;
  std::int64_t power = 1;
};

BassLift lift_bass_unit(const Quotient& q, const GroupPtr& g, Element xbar, std::int64_t k,
                        std::int64_t m);

}  // namespace zgcu
