#include "zgcu/group_ring.hpp"

#include <algorithm>
#include <sstream>

#include "zgcu/error.hpp"
#include "zgcu/subgroups.hpp"

namespace zgcu {

namespace {

std::vector<GroupRingElement::Term> compact(const std::vector<Rational>& dense) {
  std::vector<GroupRingElement::Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) out.emplace_back(static_cast<Element>(i), dense[i]);
  return out;
}

}  // namespace

GroupRingElement GroupRingElement::basis(GroupPtr g, Element x, Rational coeff) {
  GroupRingElement out(std::move(g));
  if (x >= out.group_->order()) fail(ErrorKind::InvalidInput, "group element out of range");
  if (sgn(coeff) != 0) out.terms_.emplace_back(x, std::move(coeff));
  return out;
}

GroupRingElement GroupRingElement::from_dense(GroupPtr g, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != g->order())
    fail(ErrorKind::InvalidInput, "dense coefficient vector has wrong length");
  GroupRingElement out(std::move(g));
  out.terms_ = compact(coeffs);
  return out;
}

GroupRingElement GroupRingElement::from_terms(GroupPtr g, std::vector<Term> terms) {
  std::vector<Rational> dense(g->order());
  for (auto& [x, c] : terms) {
    if (x >= g->order()) fail(ErrorKind::InvalidInput, "group element out of range");
    dense[x] += c;
  }
  return from_dense(std::move(g), dense);
}

std::vector<Rational> GroupRingElement::dense() const {
  std::vector<Rational> out(group_->order());
  for (const auto& [x, c] : terms_) out[x] = c;
  return out;
}

Rational GroupRingElement::coeff(Element x) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                             [](const Term& t, Element v) { return t.first < v; });
  if (it != terms_.end() && it->first == x) return it->second;
  return 0;
}

std::vector<Element> GroupRingElement::support() const {
  std::vector<Element> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

bool GroupRingElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return zgcu::is_integral(t.second); });
}

bool GroupRingElement::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational GroupRingElement::augmentation() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

void GroupRingElement::require_same_group(const GroupRingElement& other) const {
  if (group_ != other.group_ && group_->order() != other.group_->order())
    fail(ErrorKind::GroupMismatch, "group ring elements belong to different groups");
  if (group_ != other.group_)
    fail(ErrorKind::GroupMismatch, "group ring elements belong to different group objects");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_group(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  return *this += -other;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_group(b);
  const FiniteGroup& g = *a.group_;
  GroupRingElement out(a.group_);
  if (a.is_integral() && b.is_integral()) {
    std::vector<Integer> acc(g.order());
    for (const auto& [x, cx] : a.terms_) {
      const Integer& ix = cx.get_num();
      for (const auto& [y, cy] : b.terms_) {
        Integer& slot = acc[g.mul(x, y)];
        mpz_addmul(slot.get_mpz_t(), ix.get_mpz_t(), cy.get_num().get_mpz_t());
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (sgn(acc[i]) != 0) out.terms_.emplace_back(static_cast<Element>(i), Rational(acc[i]));
    return out;
  }
  std::vector<Rational> acc(g.order());
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) acc[g.mul(x, y)] += cx * cy;
  out.terms_ = compact(acc);
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  return group_ == other.group_ && terms_ == other.terms_;
}

GroupRingElement GroupRingElement::conjugate(Element x) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [y, c] : terms_) out.emplace_back(group_->conj(y, x), c);
  std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
  GroupRingElement result(group_);
  result.terms_ = std::move(out);
  return result;
}

GroupRingElement GroupRingElement::pow(std::uint64_t e) const {
  GroupRingElement result = one(group_);
  GroupRingElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

GroupRingElement GroupRingElement::map(const GroupPtr& target, std::span<const Element> hom) const {
  if (hom.size() != group_->order())
    fail(ErrorKind::InvalidInput, "homomorphism table has wrong length");
  std::vector<Rational> acc(target->order());
  for (const auto& [x, c] : terms_) acc[hom[x]] += c;
  return from_dense(target, acc);
}

GroupRingElement GroupRingElement::involution() const {
  std::vector<Term> out;
  for (const auto& [x, c] : terms_) out.emplace_back(group_->inv(x), c);
  std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
  GroupRingElement result(group_);
  result.terms_ = std::move(out);
  return result;
}

bool GroupRingElement::commutes_with(Element x) const { return conjugate(x) == *this; }

bool GroupRingElement::is_central() const {
  for (Element x : group_->generators())
    if (!commutes_with(x)) return false;
  return true;
}

bool GroupRingElement::is_idempotent() const { return (*this) * (*this) == *this; }

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit_coeff = mag == 1;
    if (x == 0) {
      os << mag;
    } else {
      if (!unit_coeff) os << mag << "*";
      os << group_->label(x);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

GroupRingElement hat(const Subgroup& h) {
  std::vector<Rational> dense(h.group().order());
  const Rational w(1, static_cast<unsigned long>(h.order()));
  for (Element x : h.members()) dense[x] = w;
  return GroupRingElement::from_dense(h.parent(), dense);
}

std::vector<Subgroup> minimal_normal_over(const Subgroup& h, const Subgroup& k) {
  if (!k.is_normal_in(h)) fail(ErrorKind::NotNormal, "eps(H, K) requires K normal in H");
  // Every minimal normal M/K is the normal closure in H of <K, x> for any x in M \ K.
  std::vector<Subgroup> candidates;
  for (Element x : h.members()) {
    if (k.contains(x)) continue;
    const Subgroup with_x = k.join(Subgroup::generated(h.parent(), std::vector<Element>{x}));
    Subgroup m = normal_closure(with_x, h);
    if (std::find(candidates.begin(), candidates.end(), m) == candidates.end())
      candidates.push_back(std::move(m));
  }
  std::vector<Subgroup> minimal;
  for (const auto& m : candidates) {
    const bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const Subgroup& o) {
      return o.order() < m.order() && o.is_subgroup_of(m);
    });
    if (!has_smaller) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

GroupRingElement eps(const Subgroup& h, const Subgroup& k) {
  if (h == k) return hat(h);
  GroupRingElement out = hat(k);
  const auto one = GroupRingElement::one(h.parent());
  for (const auto& m : minimal_normal_over(h, k)) out = out * (one - hat(m));
  return out;
}

Subgroup element_centralizer(const GroupRingElement& a) {
  std::vector<Element> members;
  for (Element x = 0; x < a.group()->order(); ++x)
    if (a.commutes_with(x)) members.push_back(x);
  return SubgroupAccess::make_trusted(a.group(), std::move(members));
}

GroupRingElement e_idempotent(const Subgroup& h, const Subgroup& k) {
  const GroupRingElement e = eps(h, k);
  const Subgroup cen = element_centralizer(e);
  GroupRingElement sum(h.parent());
  for (Element t : right_transversal(Subgroup::whole(h.parent()), cen)) sum += e.conjugate(t);
  return sum;
}

RationalMatrix regular_representation(const GroupRingElement& u) {
  const FiniteGroup& g = *u.group();
  RationalMatrix m(g.order(), g.order());
  for (Element x = 0; x < g.order(); ++x)
    for (const auto& [y, c] : u.terms()) m(g.mul(y, x), x) = c;
  return m;
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const IntegerLattice> span_of_multiples(const GroupRingElement& e) {
  const GroupPtr& g = e.group();
  std::vector<std::vector<Rational>> gens;
  for (Element x = 0; x < g->order(); ++x)
    gens.push_back((GroupRingElement::basis(g, x) * e).dense());
  return std::make_shared<const IntegerLattice>(IntegerLattice::span(gens, g->order()));
}

}  // namespace

Order Order::scalar_split(GroupRingElement e) {
  if (!e.is_idempotent() || !e.is_central())
    fail(ErrorKind::InvalidInput, "split order needs a central idempotent");
  Order o;
  o.kind = Kind::ScalarSplit;
  o.component_lattice = span_of_multiples(e);
  o.idempotent = std::move(e);
  return o;
}

Order Order::group_ring_split(GroupRingElement e) {
  if (!e.is_idempotent() || !e.is_central())
    fail(ErrorKind::InvalidInput, "split order needs a central idempotent");
  Order o;
  o.kind = Kind::GroupRingSplit;
  o.component_lattice = span_of_multiples(e);
  o.complement_lattice = span_of_multiples(GroupRingElement::one(e.group()) - e);
  o.idempotent = std::move(e);
  return o;
}

bool Order::contains(const GroupRingElement& x) const {
  if (kind == Kind::IntegralGroupRing) return x.is_integral();
  const GroupRingElement& e = *idempotent;
  const GroupRingElement complement = GroupRingElement::one(e.group()) - e;
  const GroupRingElement xe = x * e;
  const GroupRingElement xc = x * complement;
  if (!component_lattice->contains(xe.dense())) return false;
  if (kind == Kind::GroupRingSplit) return complement_lattice->contains(xc.dense());
  if (complement.is_zero()) return xc.is_zero();
  // xc must be an integer multiple of (1 - e).
  const auto& lead = complement.terms().front();
  const Rational c = xc.coeff(lead.first) / lead.second;
  return is_integral(c) && xc == complement * c;
}

GroupRingElement split_element(const Integer& c, const GroupRingElement& y,
                               const GroupRingElement& e) {
  const GroupRingElement one = GroupRingElement::one(e.group());
  return (one - e) * Rational(c) + y * e;
}

std::optional<GroupRingElement> rational_inverse(const GroupRingElement& u) {
  const GroupPtr& g = u.group();
  std::vector<Rational> rhs(g->order());
  rhs[0] = 1;
  auto x = solve(regular_representation(u), rhs);
  if (!x) return std::nullopt;
  return GroupRingElement::from_dense(g, *x);
}

GroupRingElement is_unit(const GroupRingElement& u, const Order& ring) {
  if (!ring.contains(u)) fail(ErrorKind::NotAUnit, "element does not lie in the order");
  auto inv = rational_inverse(u);
  if (!inv) fail(ErrorKind::NotAUnit, "left multiplication is singular");
  if (!ring.contains(*inv)) fail(ErrorKind::NotAUnit, "inverse does not lie in the order");
  if (!(u * *inv).is_one() || !(*inv * u).is_one())
    fail(ErrorKind::VerificationFailure, "computed inverse does not invert");
  return *std::move(inv);
}

}  // namespace zgcu
