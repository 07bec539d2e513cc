#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgcu/catalog.hpp"
#include "zgcu/group_ring.hpp"
#include "zgcu/subgroups.hpp"

namespace zgcu {

struct StrongShodaPair {
  Subgroup h;
  Subgroup k;
  /// N_G(K).
  Subgroup n;
  /// Generator of H modulo K.
  Element y = 0;
  GroupRingElement eps;
  GroupRingElement e;
  /// [G : Cen_G(eps)].
  std::size_t conjugate_count = 1;
};

enum class ShodaRejection {
  KNotNormalInH,
  HNotNormalInNormalizer,
  QuotientNotCyclic,
  NotMaximalAbelian,
  ConjugatesNotOrthogonal,
};

std::string to_string(ShodaRejection r);

struct ShodaCheck {
  std::optional<StrongShodaPair> pair;
  std::optional<ShodaRejection> rejection;
  explicit operator bool() const { return pair.has_value(); }
};

/// Tests the strong Shoda pair conditions in order and reports the first that fails.
ShodaCheck is_strong_shoda_pair(const Subgroup& h, const Subgroup& k);

struct EquivalenceCheck {
  bool by_idempotent = false;
  /// Exists x in G with H1^x cap K2 = K1^x cap H2.
  bool by_conjugation = false;
  bool agree() const { return by_idempotent == by_conjugation; }
};

EquivalenceCheck ssp_equivalent(const StrongShodaPair& a, const StrongShodaPair& b);

struct ShodaSearch {
  /// One representative per class, in search order (H by decreasing order, then lattice
  /// order; K by lattice order).
  std::vector<StrongShodaPair> pairs;
  /// (H, K) candidates examined, and those that passed every condition before deduplication.
  std::size_t pairs_tested = 0;
  std::size_t pairs_accepted = 0;
  GroupRingElement sum;
  /// 1 - sum of the e's; zero exactly when the classes cover QG.
  GroupRingElement deficit;
  bool sum_is_one = false;
  bool pairwise_orthogonal = false;
  /// The two equivalence tests agreed on every compared pair.
  bool equivalence_tests_agree = true;
};

ShodaSearch strong_shoda_pairs(const GroupPtr& g, const Bounds& bounds = {});

struct SimpleComponentInfo {
  /// Matrix size [G : N].
  std::int64_t n = 1;
  /// Cyclotomic order [H : K].
  std::int64_t k = 1;
  /// [N : H].
  std::int64_t s = 1;
  /// Section of N/K -> N/H: the smallest element of each coset of H in N.
  std::vector<Element> section;
  /// action[a] = i where y^{section[a]} = y^i mod K.
  std::vector<std::int64_t> action;
  /// twisting[a][b] = j where section(ab)^-1 section(a) section(b) = y^j mod K.
  std::vector<std::vector<std::int64_t>> twisting;
  bool twisting_trivial = true;
  /// [Q(zeta_k)^action : Q] = phi(k) / |image of action|.
  std::int64_t center_degree = 1;
  /// The fixed field of the action is real (complex conjugation lies in the image).
  bool center_real = true;
  /// n^2 [N:H] phi(k).
  std::int64_t dimension = 1;
  /// |G| times the identity coefficient of e.
  std::int64_t dimension_from_trace = 1;
  std::vector<std::string> flags;
};

SimpleComponentInfo component_params(const StrongShodaPair& p);

/// Heuristic exceptional-component markers; never claims certainty.
std::vector<std::string> flag_exceptional(const SimpleComponentInfo& info);

}  // namespace zgcu
