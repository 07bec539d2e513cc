#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zgcu/group_ring.hpp"

namespace zgcu {

enum class IndependenceStatus { Independent, Dependent, Unresolved };

std::string to_string(IndependenceStatus s);

struct IndependenceReport {
  IndependenceStatus status = IndependenceStatus::Independent;
  std::size_t numerical_rank = 0;
  /// sigma_min / sigma_max of the log matrix; 1 for an empty input.
  double sigma_ratio = 1;
  std::vector<double> singular_values;
  /// One row per unit: log |lambda| on each real simple component of RG.
  std::vector<std::vector<double>> log_vectors;
  std::size_t real_components = 0;
  /// Working precision (decimal digits) at which every eigenvalue was resolved.
  unsigned digits = 0;
  /// Separator draws rejected for a repeated or non-real spectrum.
  unsigned separator_retries = 0;
  std::string detail;
};

struct IndependenceOptions {
  double pass_threshold = 1e-8;
  double fail_threshold = 1e-12;
  std::uint64_t seed = 0;
  unsigned max_digits = 20000;
};

/// Numerical multiplicative-independence test for central units of ZG.
///
/// The symmetric part of the centre of RG is split (one copy of R per real simple component),
/// so a generic symmetric central element has simple real spectrum and its eigenvectors are the
/// primitive idempotents f. A central unit u acts on the component of f by a scalar lambda with
/// |lambda|^2 f = (u u*) f, so v_u[f] = log |lambda|. The idempotents come from a double-precision
/// eigen-decomposition and are refined by Newton iteration in MPFR until every lambda is
/// resolved; the rank of {v_u} is read from the singular values.
IndependenceReport verify_independence(const std::vector<GroupRingElement>& units,
                                       const IndependenceOptions& options = {});

}  // namespace zgcu
