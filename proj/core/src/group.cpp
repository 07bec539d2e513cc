#include "zgcu/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "zgcu/error.hpp"

namespace zgcu {

namespace {

// Elements reachable from the identity by right multiplication with gens.
std::vector<bool> right_closure(const std::vector<Element>& table, std::size_t n,
                                const std::vector<Element>& gens) {
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element y = table[std::size_t{x} * n + s];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<Element> greedy_generators(const std::vector<Element>& table, std::size_t n) {
  std::vector<Element> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (Element x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    reached = right_closure(table, n, gens);
  }
  return gens;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::string name,
                                 std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "multiplication table is empty");
  if (!labels.empty() && labels.size() != n)
    fail(ErrorKind::InvalidInput, "label count does not match group order");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      fail(ErrorKind::InvalidInput, "multiplication table row " + std::to_string(i) +
                                        " has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table[i][j];
      if (v >= n || seen[v])
        fail(ErrorKind::InvalidInput,
             "multiplication table row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
      g->table_[i * n + j] = v;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = g->table_[i * n + j];
      if (seen[v])
        fail(ErrorKind::InvalidInput,
             "multiplication table column " + std::to_string(j) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g->table_[i] != i || g->table_[i * n] != i)
      fail(ErrorKind::InvalidInput, "index 0 is not a two-sided identity");
  }

  // Light's associativity test: (xy)s = x(ys) for all x, y and generators s.
  g->generators_ = greedy_generators(g->table_, n);
  for (Element s : g->generators_) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Element xy = g->table_[x * n + y];
        const Element ys = g->table_[y * n + s];
        if (g->table_[std::size_t{xy} * n + s] != g->table_[x * n + ys])
          fail(ErrorKind::InvalidInput, "multiplication table is not associative");
      }
    }
  }

  g->inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->table_[a * n + b] == 0) {
        g->inv_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  g->order_.resize(n);
  std::uint64_t exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t ord = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = g->table_[std::size_t{x} * n + a];
      ++ord;
    }
    g->order_[a] = ord;
    exponent = std::lcm(exponent, std::uint64_t{ord});
  }
  g->exponent_ = static_cast<std::uint32_t>(exponent);
  for (std::size_t a = 0; a < n && g->abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (g->table_[a * n + b] != g->table_[b * n + a]) {
        g->abelian_ = false;
        break;
      }
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  return g;
}

GroupPtr with_generators(GroupPtr g, std::vector<Element> gens) {
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*g));
  std::vector<Element> cleaned;
  for (Element x : gens) {
    if (x >= copy->n_) fail(ErrorKind::InvalidInput, "generator index out of range");
    if (x != 0 && std::find(cleaned.begin(), cleaned.end(), x) == cleaned.end())
      cleaned.push_back(x);
  }
  const auto reach = right_closure(copy->table_, copy->n_, cleaned);
  if (std::find(reach.begin(), reach.end(), false) != reach.end())
    fail(ErrorKind::InvalidInput, "elements do not generate the group");
  copy->generators_ = std::move(cleaned);
  return copy;
}

Element FiniteGroup::pow(Element a, std::int64_t e) const {
  const std::int64_t ord = order_[a];
  e %= ord;
  if (e < 0) e += ord;
  Element result = 0;
  for (std::int64_t i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

std::string FiniteGroup::label(Element a) const {
  if (!labels_.empty()) return labels_[a];
  return "#" + std::to_string(a);
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> all(n_);
  std::iota(all.begin(), all.end(), Element{0});
  return all;
}

GroupPtr enumerate_group(const ConcreteGroup& spec, std::string name, std::size_t max_order) {
  std::map<std::vector<int>, Element> index;
  std::vector<std::vector<int>> elems{spec.identity};
  index.emplace(spec.identity, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : spec.generators) {
      auto y = spec.multiply(elems[head], s);
      if (index.find(y) == index.end()) {
        if (elems.size() >= max_order)
          fail(ErrorKind::BoundExceeded,
               "group order exceeds the configured bound " + std::to_string(max_order));
        index.emplace(y, static_cast<Element>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(spec.multiply(elems[i], elems[j]));
      if (it == index.end())
        fail(ErrorKind::InvalidInput, "presentation does not close under multiplication");
      table[i][j] = it->second;
    }
  }
  std::vector<std::string> labels;
  if (spec.label) {
    labels.reserve(n);
    for (const auto& e : elems) labels.push_back(spec.label(e));
  }
  auto group = FiniteGroup::from_table(std::move(table), std::move(name), std::move(labels));
  std::vector<Element> gens;
  for (const auto& s : spec.generators) gens.push_back(index.at(s));
  return with_generators(group, gens);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> sorted_members, Trusted)
    : parent_(std::move(parent)), members_(std::move(sorted_members)) {
  mask_.assign(parent_->order(), false);
  for (Element x : members_) mask_[x] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  if (!parent_) fail(ErrorKind::InvalidInput, "subgroup without parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  mask_.assign(parent_->order(), false);
  for (Element x : members) {
    if (x >= parent_->order()) fail(ErrorKind::InvalidInput, "subgroup member out of range");
    mask_[x] = true;
  }
  if (members.empty() || members.front() != 0)
    fail(ErrorKind::InvalidInput, "subgroup does not contain the identity");
  for (Element a : members)
    for (Element b : members)
      if (!mask_[parent_->mul(a, b)])
        fail(ErrorKind::InvalidInput, "subset is not closed under multiplication");
  if (parent_->order() % members.size() != 0)
    fail(ErrorKind::InvalidInput, "subgroup order does not divide group order");
  members_ = std::move(members);
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), std::vector<Element>{0}, Trusted{});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  auto all = parent->elements();
  return Subgroup(std::move(parent), std::move(all), Trusted{});
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Element> gens) {
  const FiniteGroup& g = *parent;
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> found{0};
  seen[0] = true;
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element s : gens) {
      const Element y = g.mul(found[head], s);
      if (!seen[y]) {
        seen[y] = true;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(std::move(parent), std::move(found), Trusted{});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element x) { return other.contains(x); });
}

bool Subgroup::is_normal_in(const Subgroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (Element x : other.members())
    for (Element h : members_)
      if (!mask_[parent_->conj(h, x)]) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (Element x : parent_->generators())
    for (Element h : members_)
      if (!mask_[parent_->conj(h, x)]) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  return std::any_of(members_.begin(), members_.end(),
                     [&](Element x) { return parent_->element_order(x) == order(); });
}

bool Subgroup::is_abelian() const {
  for (Element a : members_)
    for (Element b : members_)
      if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
  return true;
}

Subgroup Subgroup::conjugate(Element x) const {
  std::vector<Element> out;
  out.reserve(members_.size());
  for (Element h : members_) out.push_back(parent_->conj(h, x));
  std::sort(out.begin(), out.end());
  return Subgroup(parent_, std::move(out), Trusted{});
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<Element> out;
  for (Element h : members_)
    if (other.contains(h)) out.push_back(h);
  return Subgroup(parent_, std::move(out), Trusted{});
}

Subgroup Subgroup::join(const Subgroup& other) const {
  if (is_subgroup_of(other)) return other;
  if (other.is_subgroup_of(*this)) return *this;
  std::vector<Element> gens(members_.begin(), members_.end());
  gens.insert(gens.end(), other.members_.begin(), other.members_.end());
  return generated(parent_, gens);
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return members_ <=> other.members_;
}

std::string describe(const Subgroup& h) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < h.members().size(); ++i) {
    if (i) os << ",";
    os << h.group().label(h.members()[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace zgcu
