#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zgcu/group.hpp"
#include "zgcu/matrix.hpp"
#include "zgcu/rational.hpp"

namespace zgcu {

/// Element of QG: finitely supported map from group elements to exact rationals.
/// Terms are kept sorted by element index and zero coefficients are never stored.
class GroupRingElement {
 public:
  using Term = std::pair<Element, Rational>;

  explicit GroupRingElement(GroupPtr g) : group_(std::move(g)) {}

  static GroupRingElement zero(GroupPtr g) { return GroupRingElement(std::move(g)); }
  static GroupRingElement one(GroupPtr g) { return basis(std::move(g), 0); }
  static GroupRingElement basis(GroupPtr g, Element x, Rational coeff = 1);
  static GroupRingElement from_dense(GroupPtr g, const std::vector<Rational>& coeffs);
  static GroupRingElement from_terms(GroupPtr g, std::vector<Term> terms);

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::vector<Rational> dense() const;
  Rational coeff(Element x) const;
  std::vector<Element> support() const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integral() const;
  bool is_one() const;
  Rational augmentation() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Rational& scalar);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(GroupRingElement a, const Rational& s) { return a *= s; }
  friend GroupRingElement operator*(const Rational& s, GroupRingElement a) { return a *= s; }

  bool operator==(const GroupRingElement& other) const;

  /// u^x = x^-1 u x.
  GroupRingElement conjugate(Element x) const;
  GroupRingElement pow(std::uint64_t e) const;
  /// Image under the group homomorphism x -> hom[x]; coefficients add over fibers.
  GroupRingElement map(const GroupPtr& target, std::span<const Element> hom) const;
  /// The classical involution: sum of u_x x^-1.
  GroupRingElement involution() const;

  bool commutes_with(Element x) const;
  /// Commutes with every generator of the group.
  bool is_central() const;
  bool is_idempotent() const;

  std::string to_string() const;

 private:
  void require_same_group(const GroupRingElement& other) const;

  GroupPtr group_;
  std::vector<Term> terms_;
};

/// (1/|H|) sum of h over H.
GroupRingElement hat(const Subgroup& h);

/// Minimal normal subgroups of H/K, pulled back to subgroups of H containing K.
std::vector<Subgroup> minimal_normal_over(const Subgroup& h, const Subgroup& k);

/// K^ * prod over minimal normal M/K of H/K of (1 - M^); eps(H, H) = H^. Throws NotNormal.
GroupRingElement eps(const Subgroup& h, const Subgroup& k);

/// Cen_G(a) = {x in G : a^x = a}.
Subgroup element_centralizer(const GroupRingElement& a);

/// Sum of the distinct G-conjugates of eps(H, K), over a right transversal of its centralizer.
GroupRingElement e_idempotent(const Subgroup& h, const Subgroup& k);

/// Matrix of left multiplication by u in the group basis: L(yx, x) = u_y.
RationalMatrix regular_representation(const GroupRingElement& u);

/// The order in which a unit is sought.
struct Order {
  enum class Kind {
    IntegralGroupRing,  ///< ZG
    ScalarSplit,        ///< Z(1 - e) + ZG e
    GroupRingSplit,     ///< ZG(1 - e) + ZG e
  };
  Kind kind = Kind::IntegralGroupRing;
  /// Central idempotent for the split orders; unused for ZG.
  std::optional<GroupRingElement> idempotent;
  /// Z-spans of {x e} and {x (1 - e)}, filled by the factories.
  std::shared_ptr<const IntegerLattice> component_lattice;
  std::shared_ptr<const IntegerLattice> complement_lattice;

  static Order integral_group_ring() { return {}; }
  static Order scalar_split(GroupRingElement e);
  static Order group_ring_split(GroupRingElement e);

  bool contains(const GroupRingElement& x) const;
};

/// c(1 - e) + y e, the componentwise form of an element of Z(1 - e) + ZG e.
GroupRingElement split_element(const Integer& c, const GroupRingElement& y,
                               const GroupRingElement& e);

/// Inverse of u when u lies in the order and its inverse does too; throws NotAUnit otherwise.
GroupRingElement is_unit(const GroupRingElement& u, const Order& ring = Order::integral_group_ring());

/// The inverse in QG, if any.
std::optional<GroupRingElement> rational_inverse(const GroupRingElement& u);

}  // namespace zgcu
