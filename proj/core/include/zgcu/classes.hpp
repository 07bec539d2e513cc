#pragma once

#include <cstdint>
#include <vector>

#include "zgcu/group.hpp"

namespace zgcu {

/// Conjugacy classes and their rational (Q) and real (R) unions.
/// All class lists are sorted and ordered by their smallest member.
struct ClassStructure {
  std::vector<std::vector<Element>> conjugacy_classes;
  std::vector<std::vector<Element>> q_classes;
  std::vector<std::vector<Element>> r_classes;
  /// Smallest element of each Q-class, in Q-class order.
  std::vector<Element> representatives;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> q_class_of;
  std::vector<std::uint32_t> r_class_of;

  std::size_t rank() const { return r_classes.size() - q_classes.size(); }
};

ClassStructure class_structure(const FiniteGroup& g);

/// Conjugacy class of x, sorted.
std::vector<Element> conjugacy_class(const FiniteGroup& g, Element x);

/// Residues in 1..n-1 coprime to n; {1} when n <= 2.
std::vector<std::int64_t> units_mod(std::int64_t n);

struct SgData {
  Element g = 0;
  std::int64_t n = 1;
  /// l in U(Z_n) with g conjugate to g^l.
  std::vector<std::int64_t> s_g;
  /// <S_g, -1>.
  std::vector<std::int64_t> sbar_g;
  /// Transversal of sbar_g in U(Z_n): 1, then the smallest member of each other coset.
  std::vector<std::int64_t> t_g;
};

SgData sg_data(const FiniteGroup& g, Element x);

}  // namespace zgcu
