#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zgcu/group_ring.hpp"
#include "zgcu/subgroups.hpp"

namespace zgcu {

/// Per-stage record of the conjugate-product checks.
struct StageCheck {
  /// Conjugates of the previous stage by N_i stay in Z N_{i-1}.
  bool conjugates_stay_in_ring = true;
  /// The previous stage is fixed by conjugation with N_{i-1}.
  bool fixed_by_previous_term = true;
  /// Recomputing with a randomized transversal gives the same stage.
  bool transversal_independent = true;
  std::vector<Element> alternate_transversal;

  bool all_hold() const {
    return conjugates_stay_in_ring && fixed_by_previous_term && transversal_independent;
  }
};

struct CentralizationTrace {
  SubnormalSeries series;
  /// stages[0] = u, stages[i] = product over T_i of stages[i-1]^h.
  std::vector<GroupRingElement> stages;
  std::vector<StageCheck> checks;
  bool central = false;

  const GroupRingElement& result() const { return stages.back(); }
  bool all_hold() const;
};

struct CentralizeOptions {
  /// Run the per-stage checks (including the randomized-transversal recomputation).
  bool check = true;
  std::uint64_t seed = 0;
};

/// c_N(u) for u in Z<g> along the series. Throws SupportLeak if u is not supported on N_0,
/// InvalidInput if u is not integral, and VerificationFailure if the result is not central.
CentralizationTrace centralize(const SubnormalSeries& series, const GroupRingElement& u,
                               const CentralizeOptions& options = {});

/// c_N(u) without the trace.
GroupRingElement central_product(const SubnormalSeries& series, const GroupRingElement& u);

/// Product of the conjugates of x over the given elements, in the given order.
GroupRingElement conjugate_product(const GroupRingElement& x, std::span<const Element> over);

struct NilpotentCentralization {
  /// b_(1) = b, b_(i) = product over h in Z_i of b_(i-1)^h; value = b_(n).
  std::vector<GroupRingElement> stages;
  /// <g> <= <Z_1, g> <= ... <= G with repeated terms removed.
  SubnormalSeries series;
  GroupRingElement series_value;
  /// b_(n)^lhs_exponent = c_N(b)^rhs_exponent.
  std::uint64_t lhs_exponent = 1;
  std::uint64_t rhs_exponent = 1;
  bool relation_holds = false;
  bool torsion = false;

  const GroupRingElement& value() const { return stages.back(); }
};

/// Throws NotEligible when G is not nilpotent and SupportLeak when b is not supported on <g>.
NilpotentCentralization centralize_nilpotent(const GroupRingElement& b, Element g);

struct ConjugateProductLaws {
  bool multiplicative = false;
  bool conjugation_invariant = false;
  bool all_hold() const { return multiplicative && conjugation_invariant; }
};

/// c_N(uv) = c_N(u) c_N(v) and c_{N^h}(u^h) = c_N(u).
ConjugateProductLaws conjugate_product_laws(const GroupRingElement& u, const GroupRingElement& v,
                            const SubnormalSeries& series, Element h);

}  // namespace zgcu
