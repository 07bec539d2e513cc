// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero if any fails.

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "zgcu/basis.hpp"
#include "zgcu/bass.hpp"
#include "zgcu/catalog.hpp"
#include "zgcu/central.hpp"
#include "zgcu/error.hpp"
#include "zgcu/classes.hpp"
#include "zgcu/shoda.hpp"

using namespace zgcu;
using oracle::Poly;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) failures.push_back(what());
  }
};

// Every catalog group of order at most 32.
std::vector<std::string> small_catalog() {
  std::vector<std::string> out;
  for (int n = 1; n <= 32; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 6; n <= 32; n += 2) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 8; n <= 32; n += 4) out.push_back("quaternion:" + std::to_string(n));
  for (const char* a : {"2,2", "2,4", "2,2,2", "3,3", "2,6", "4,4", "2,8", "2,2,4", "2,2,2,2", "3,6",
                        "2,10", "2,12", "2,2,6", "2,14", "4,8", "2,16", "2,2,8", "2,4,4", "2,2,2,4",
                        "5,5", "2,2,2,2,2"})
    out.push_back(std::string("abelian:") + a);
  for (const char* m : {"metacyclic:7,3,2", "metacyclic:5,4,2", "metacyclic:3,4,2", "symmetric:3",
                        "symmetric:4", "a4", "c3xs3", "c2xd8"})
    out.push_back(m);
  return out;
}

// Groups required to certify sum(e) = 1.
bool expected_strongly_monomial(const std::string& name) {
  return name.rfind("cyclic:", 0) == 0 || name.rfind("abelian:", 0) == 0 ||
         name.rfind("dihedral:", 0) == 0 || name.rfind("quaternion:", 0) == 0 ||
         name == "metacyclic:7,3,2";
}

Element generator_of(const GroupPtr& g) {
  for (Element x = 0; x < g->order(); ++x)
    if (g->element_order(x) == g->order()) return x;
  return 0;
}

// --- Criterion 1 -------------------------------------------------------------------------

Outcome bass_identities() {
  Outcome o;
  for (std::int64_t n = 1; n <= 12; ++n) {
    const GroupPtr g = load_group("cyclic:" + std::to_string(n));
    const Element x = generator_of(g);
    std::map<std::pair<std::int64_t, std::int64_t>, Poly> cache;
    auto B = [&](std::int64_t k, std::int64_t m) -> const Poly& {
      auto it = cache.find({k, m});
      if (it == cache.end()) it = cache.emplace(std::make_pair(k, m), oracle::bass(n, k, m)).first;
      return it->second;
    };
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k <= 2 * n; ++k)
      if (oracle::gcd(k, n) == 1) ks.push_back(k);
    const Poly one = Poly::monomial(n, 0);

    for (std::int64_t k : ks) {
      const std::int64_t ok = oracle::ord(k, n);
      std::vector<std::int64_t> ms;
      for (std::int64_t m = 1; m <= 2 * ok; ++m)
        if (oracle::powmod(k, m, n) == 1 % n) ms.push_back(m);
      for (std::int64_t m : ms) {
        const auto tag = [&](const std::string& what) {
          std::ostringstream os;
          os << what << " n=" << n << " k=" << k << " m=" << m;
          return os.str();
        };
        o.expect(bass_unit(g, x, k, m) == oracle::to_element(g, x, B(k, m)), [&] { return tag("value"); });
        o.expect(B(1, m) == one, [&] { return tag("b(1, m, g) = 1"); });
        for (std::int64_t i = 0; i <= 3; ++i)
          o.expect(B(k, m).pow(i) == (i == 0 ? one : B(k, m * i)), [&] { return tag("integral powers"); });
        std::int64_t kinv = 1;
        while (oracle::mod(k * kinv, n) != 1 % n) ++kinv;
        o.expect((B(k, m) * oracle::bass_on_power(n, k, kinv, m)).is_one(), [&] { return tag("inverse"); });
        if (m % 2 == 0) {
          o.expect(B(2 * n - 1, m) == Poly::monomial(n, -m), [&] { return tag("b(-1, m, g) = (-g)^-m"); });
          std::int64_t nk = oracle::mod(-k, n);
          if (nk == 0) nk = n;
          o.expect(B(nk, m) == B(k, m) * Poly::monomial(n, -k * m), [&] { return tag("b(n - k, m, g)"); });
        }
        for (std::int64_t k1 : ks) {
          if (oracle::mod(k - k1, n) == 0) o.expect(B(k, m) == B(k1, m), [&] { return tag("reduction of k"); });
          if (oracle::powmod(k1, m, n) == 1 % n)
            o.expect(B(k, m) * oracle::bass_on_power(n, k, k1, m) == B(k * k1, m),
                     [&] { return tag("multiplicativity in k, k1=" + std::to_string(k1)); });
          for (std::int64_t m1 : ms) {
            o.expect(B(k, m) * B(k, m1) == B(k, m + m1), [&] { return tag("additivity in m, m1=" + std::to_string(m1)); });
            const auto rep = bass_identities_check(g, x, k, k1, m, m1);
            o.expect(rep.all_hold(), [&] { return tag("library identity check k1=" + std::to_string(k1)); });
          }
        }
      }
    }
  }
  return o;
}

// --- Criterion 2 -------------------------------------------------------------------------

struct OracleCentralization {
  std::vector<GroupRingElement> stages;
  bool stays_in_ring = true;
  bool fixed = true;
};

OracleCentralization oracle_centralize(const std::vector<Subgroup>& chain, const GroupRingElement& u,
                                       std::mt19937_64& rng) {
  OracleCentralization out;
  out.stages.push_back(u);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& prev = out.stages.back();
    for (Element x : chain[i].members()) {
      const auto c = prev.conjugate(x);
      if (!oracle::supported_in(c, chain[i - 1]) || !c.is_integral()) out.stays_in_ring = false;
      if (chain[i - 1].contains(x) && !(c == prev)) out.fixed = false;
    }
    GroupRingElement next = GroupRingElement::one(u.group());
    for (Element t : oracle::random_transversal(chain[i], chain[i - 1], rng)) next = next * prev.conjugate(t);
    out.stages.push_back(std::move(next));
  }
  return out;
}

bool valid_series(const SubnormalSeries& s, Element g) {
  const GroupPtr& gp = s.chain.front().parent();
  if (s.chain.front().members().size() != oracle::generated(*gp, {g}).size()) return false;
  if (!s.chain.front().contains(g) || s.chain.back().order() != gp->order()) return false;
  for (std::size_t i = 1; i < s.chain.size(); ++i)
    for (Element x : s.chain[i].members())
      for (Element y : s.chain[i - 1].members())
        if (!s.chain[i - 1].contains(gp->conj(y, x))) return false;
  return true;
}

Outcome conjugate_products() {
  Outcome o;
  std::mt19937_64 rng(12345);
  for (const char* name : {"dihedral:8", "quaternion:8", "dihedral:12", "dihedral:16", "quaternion:16", "c3xs3"}) {
    const GroupPtr g = load_group(name);
    for (Element x = 0; x < g->order(); ++x) {
      if (!is_subnormal(Subgroup::generated(g, std::vector<Element>{x}))) continue;
      const SubnormalSeries series = subnormal_series(g, x);
      const std::string tagx = std::string(name) + " g=" + g->label(x);
      o.expect(valid_series(series, x), [&] { return "invalid series " + tagx; });
      const std::int64_t n = g->element_order(x);
      for (std::int64_t k : units_mod(n)) {
        const std::int64_t ok = oracle::ord(k, n);
        for (std::int64_t m : {ok, 2 * ok}) {
          const auto tag = [&] { return tagx + " k=" + std::to_string(k) + " m=" + std::to_string(m); };
          const auto u = bass_unit(g, x, k, m);
          const auto trace = centralize(series, u, {.check = true, .seed = rng()});
          const auto mine = oracle_centralize(series.chain, u, rng);
          o.expect(trace.all_hold(), [&] { return "library stage checks " + tag(); });
          o.expect(mine.stays_in_ring, [&] { return "conjugates leave the ring " + tag(); });
          o.expect(mine.fixed, [&] { return "not fixed by previous term " + tag(); });
          o.expect(mine.stages == trace.stages, [&] { return "transversal dependence " + tag(); });
          o.expect(oracle::central_in_group(mine.stages.back()), [&] { return "central " + tag(); });
          const auto& cu = mine.stages.back();
          for (std::int64_t k1 : units_mod(n)) {
            if (oracle::powmod(k1, m, n) != 1 % n) continue;
            const auto v = bass_unit(g, x, k1, m);
            const auto cv = oracle_centralize(series.chain, v, rng).stages.back();
            const auto cuv = oracle_centralize(series.chain, u * v, rng).stages.back();
            o.expect(cuv == cu * cv, [&] { return "not multiplicative " + tag() + " k1=" + std::to_string(k1); });
          }
          for (Element h = 0; h < g->order(); ++h) {
            std::vector<Subgroup> conj;
            for (const auto& s : series.chain) conj.push_back(s.conjugate(h));
            const auto c = oracle_centralize(conj, u.conjugate(h), rng).stages.back();
            o.expect(c == cu, [&] { return "not conjugation invariant " + tag() + " h=" + g->label(h); });
          }
        }
      }
    }
  }
  return o;
}

// --- Criteria 3 and 9 --------------------------------------------------------------------

struct ShodaOutcomes {
  Outcome idempotents;
  Outcome dimensions;
};

ShodaOutcomes shoda_suite() {
  ShodaOutcomes out;
  std::size_t not_monomial = 0;
  for (const auto& name : small_catalog()) {
    const GroupPtr g = load_group(name);
    const ShodaSearch s = strong_shoda_pairs(g);
    const Rational order(static_cast<long>(g->order()));
    GroupRingElement sum(g);
    std::vector<std::int64_t> dims;
    for (const auto& p : s.pairs) {
      const std::string tag = name + " H=" + describe(p.h) + " K=" + describe(p.k);
      const auto eps = oracle::eps_cyclic(g, p.h, p.k, p.y);
      const auto e = oracle::conjugate_sum(eps);
      out.idempotents.expect(p.eps == eps, [&] { return "eps differs from definition " + tag; });
      out.idempotents.expect(eps * eps == eps, [&] { return "eps not idempotent " + tag; });
      out.idempotents.expect(p.e == e, [&] { return "e differs from definition " + tag; });
      out.idempotents.expect(e * e == e && oracle::central_in_group(e), [&] { return "e not central idempotent " + tag; });
      sum += e;

      const Rational trace = order * e.coeff(0);
      out.dimensions.expect(is_integral(trace), [&] { return "non-integral trace " + tag; });
      const std::int64_t dim = trace.get_num().get_si();
      const std::int64_t idx_n = static_cast<std::int64_t>(g->order() / p.n.order());
      const std::int64_t formula = idx_n * idx_n * static_cast<std::int64_t>(p.n.order() / p.h.order()) *
                                   oracle::phi(static_cast<std::int64_t>(p.h.order() / p.k.order()));
      const SimpleComponentInfo info = component_params(p);
      out.dimensions.expect(dim == formula && dim == info.dimension_from_trace && dim == info.dimension,
                            [&] { return "dimension " + std::to_string(dim) + " vs formula " + std::to_string(formula) + " " + tag; });
      dims.push_back(dim);
    }
    const bool covers = sum.is_one();
    if (!covers) ++not_monomial;
    if (expected_strongly_monomial(name))
      out.idempotents.expect(covers, [&] { return "sum of e is not 1 for " + name; });
    for (std::size_t i = 0; i < s.pairs.size(); ++i)
      for (std::size_t j = i + 1; j < s.pairs.size(); ++j)
        out.idempotents.expect((s.pairs[i].e * s.pairs[j].e).is_zero(), [&] { return "not orthogonal in " + name; });

    std::int64_t total = 0;
    for (auto d : dims) total += d;
    if (covers) {
      out.dimensions.expect(total == static_cast<std::int64_t>(g->order()), [&] { return "dimensions do not total |G| for " + name; });
      for (std::size_t i = 0; i < dims.size(); ++i)
        out.dimensions.expect(dims[i] == static_cast<std::int64_t>(g->order()) - (total - dims[i]),
                              [&] { return "complement dimension for " + name; });
    } else {
      const Rational rest = order * (GroupRingElement::one(g) - sum).coeff(0);
      out.dimensions.expect(rest + total == order, [&] { return "deficit trace for " + name; });
    }
  }
  out.idempotents.note = std::to_string(small_catalog().size()) + " groups, " +
                         std::to_string(not_monomial) + " without a full certificate";
  return out;
}

// --- Criteria 4 to 7 ---------------------------------------------------------------------

struct BasisCase {
  std::string name;
  GroupPtr group;
  CentralUnitBasis basis;
};

std::vector<BasisCase> eligible_bases(std::size_t& skipped) {
  std::vector<BasisCase> out;
  std::vector<std::string> names = small_catalog();
  names.push_back("metacyclic:13,3,3");
  for (const auto& name : names) {
    const GroupPtr g = load_group(name);
    if (!group_predicates(g).eligible) {
      ++skipped;
      continue;
    }
    out.push_back({name, g, central_unit_basis(g)});
  }
  return out;
}

Outcome rank_identity(const std::vector<BasisCase>& cases) {
  Outcome o;
  // Hand-countable (#R-classes, #Q-classes).
  const std::map<std::string, std::pair<std::size_t, std::size_t>> fixtures = {
      {"cyclic:5", {3, 2}},  {"cyclic:7", {4, 2}},     {"cyclic:8", {5, 4}},
      {"dihedral:8", {5, 5}}, {"quaternion:8", {5, 5}}, {"dihedral:16", {7, 6}},
      {"metacyclic:7,3,2", {3, 3}},
  };
  const std::map<std::string, std::size_t> expected = {
      {"cyclic:5", 1}, {"cyclic:7", 2}, {"cyclic:8", 1}, {"dihedral:8", 0},
      {"quaternion:8", 0}, {"dihedral:16", 1}, {"metacyclic:7,3,2", 0},
  };
  std::size_t seen = 0;
  for (const auto& c : cases) {
    const auto counts = oracle::class_counts(*c.group);
    o.expect(c.basis.elements.size() == counts.r - counts.q, [&] {
      return c.name + ": basis size " + std::to_string(c.basis.elements.size()) + " vs " +
             std::to_string(counts.r - counts.q);
    });
    if (auto f = fixtures.find(c.name); f != fixtures.end())
      o.expect(counts.r == f->second.first && counts.q == f->second.second,
               [&] { return c.name + ": class counts differ from fixture"; });
    if (auto e = expected.find(c.name); e != expected.end()) {
      ++seen;
      o.expect(c.basis.elements.size() == e->second, [&] { return c.name + ": rank differs from expected value"; });
    }
  }
  o.expect(seen == expected.size(), [] { return std::string("a group with an expected rank was not eligible"); });
  return o;
}

Outcome central_units(const std::vector<BasisCase>& cases) {
  Outcome o;
  for (const auto& c : cases)
    for (const auto& e : c.basis.elements) {
      const std::string tag = c.name + " g=" + c.group->label(e.descriptor.g) + " k=" + std::to_string(e.descriptor.k);
      o.expect(e.value.is_integral() && oracle::central_in_group(e.value), [&] { return "not central " + tag; });
      bool unit = false;
      try {
        const auto inv = is_unit(e.value);
        unit = inv.is_integral() && (e.value * inv).is_one() && (inv * e.value).is_one();
      } catch (const Error&) {
      }
      o.expect(unit, [&] { return "no integral inverse " + tag; });
    }
  return o;
}

// log |chi_j(u)| for the characters of a cyclic group, in MPFR.
std::vector<double> cyclic_log_vector(const GroupPtr& g, const GroupRingElement& u) {
  using Big = boost::multiprecision::mpfr_float;
  Big::default_precision(600);
  const std::int64_t n = static_cast<std::int64_t>(g->order());
  const Element x = generator_of(g);
  std::vector<std::int64_t> exp_of(g->order());
  for (std::int64_t i = 0; i < n; ++i) exp_of[g->pow(x, i)] = i;
  const Big two_pi = 2 * boost::math::constants::pi<Big>();
  std::vector<double> out;
  for (std::int64_t j = 0; j < n; ++j) {
    Big re = 0, im = 0;
    for (const auto& [y, c] : u.terms()) {
      const Big angle = Big(two_pi) * Big((j * exp_of[y]) % n) / n;
      const Big coeff(c.get_num().get_mpz_t());
      re += coeff * cos(angle);
      im += coeff * sin(angle);
    }
    out.push_back(static_cast<double>(log(re * re + im * im) / 2));
  }
  return out;
}

Outcome independence(const std::vector<BasisCase>& cases) {
  Outcome o;
  double worst = 1;
  for (const auto& c : cases) {
    if (c.basis.rank == 0) continue;
    const auto rep = verify_independence(c.basis);
    worst = std::min(worst, rep.sigma_ratio);
    o.expect(rep.status == IndependenceStatus::Independent && rep.numerical_rank == c.basis.rank, [&] {
      std::ostringstream os;
      os << c.name << ": " << to_string(rep.status) << ", rank " << rep.numerical_rank << " of " << c.basis.rank
         << ", ratio " << rep.sigma_ratio;
      return os.str();
    });
    if (c.name.rfind("cyclic:", 0) == 0) {
      Eigen::MatrixXd m(static_cast<Eigen::Index>(c.basis.elements.size()), static_cast<Eigen::Index>(c.group->order()));
      for (std::size_t i = 0; i < c.basis.elements.size(); ++i) {
        const auto v = cyclic_log_vector(c.group, c.basis.elements[i].value);
        for (std::size_t j = 0; j < v.size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v[j];
      }
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
      const auto sv = svd.singularValues();
      const double ratio = sv[sv.size() - 1] / sv[0];
      o.expect(ratio >= 1e-8, [&] { return c.name + ": character-sum oracle finds a dependency"; });
    }
  }
  std::ostringstream os;
  os << "smallest sigma ratio " << worst;
  o.note = os.str();
  return o;
}

Outcome torsion(const std::vector<BasisCase>& cases) {
  Outcome o;
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t k = 1; k < std::max<std::int64_t>(n, 2); ++k) {
      if (oracle::gcd(k, n) != 1) continue;
      const Poly b = oracle::bass(n, k, oracle::ord(k, n));
      bool finite = false;
      Poly p = b;
      for (std::int64_t t = 1; t <= 2 * n * n && !finite; ++t, p = p * b) finite = p.is_one();
      const bool analytic = n <= 2 || oracle::mod(k, n) == 1 || oracle::mod(k, n) == n - 1;
      o.expect(finite == analytic && has_finite_order(n, k) == analytic,
               [&] { return "finite-order criterion n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  std::mt19937_64 rng(99);
  for (const auto& c : cases) {
    const std::int64_t t = oracle::phi(static_cast<std::int64_t>(c.group->order()));
    for (const auto& claim : verify_torsion_claims(c.group)) {
      const std::string tag = c.name + " g=" + c.group->label(claim.g) + " k=" + std::to_string(claim.k) +
                              " l=" + std::to_string(claim.l);
      o.expect(claim.holds && claim.order.has_value(), [&] { return "library claim " + tag; });
      if (!claim.order) continue;
      const Element gk = c.group->pow(claim.g, claim.k);
      const auto series = subnormal_series(c.group, claim.g);
      const auto u = oracle_centralize(series.chain, bass_unit(c.group, gk, claim.l, t), rng).stages.back();
      o.expect(u.pow(*claim.order).is_one(), [&] { return "order not confirmed " + tag; });
      if (claim.in_s_g) o.expect(u.pow(static_cast<std::uint64_t>(t)).is_one(), [&] { return "order does not divide phi(|G|) " + tag; });
    }
  }
  return o;
}

// --- Criterion 8 -------------------------------------------------------------------------

Outcome generalized_units() {
  Outcome o;
  for (const char* name : {"dihedral:8", "quaternion:8", "dihedral:12"}) {
    const GroupPtr g = load_group(name);
    for (const auto& m_sub : subgroups(g)) {
      bool normal = true;
      for (Element x : m_sub.members())
        for (Element h = 0; h < g->order(); ++h) normal = normal && m_sub.contains(g->conj(x, h));
      if (!normal) continue;
      const auto mhat = oracle::hat(g, {m_sub.members().begin(), m_sub.members().end()});
      for (Element x = 0; x < g->order(); ++x) {
        const std::int64_t n = g->element_order(x);
        for (std::int64_t k : units_mod(n)) {
          const std::string tag = std::string(name) + " M=" + describe(m_sub) + " g=" + g->label(x) + " k=" + std::to_string(k);
          const auto gb = generalized_bass_unit(g, m_sub, x, k);
          const auto b = bass_unit(g, x, k, oracle::ord(k, n));
          const auto base = GroupRingElement::one(g) - mhat + b * mhat;
          o.expect(gb.base == base, [&] { return "base differs " + tag; });
          GroupRingElement p = base;
          for (std::uint64_t t = 1; t < gb.n_b; ++t, p = p * base)
            o.expect(!p.is_integral(), [&] { return "not minimal at t=" + std::to_string(t) + " " + tag; });
          o.expect(p.is_integral() && p == gb.value, [&] { return "power not integral " + tag; });
          bool unit = false;
          try {
            const auto inv = is_unit(p);
            unit = inv.is_integral() && (p * inv).is_one();
          } catch (const Error&) {
          }
          o.expect(unit, [&] { return "not a unit of ZG " + tag; });
        }
      }
    }
  }
  return o;
}

bool report(int id, const std::string& title, const Outcome& o, double seconds, double limit) {
  const bool pass = o.failures.empty() && (limit <= 0 || seconds < limit);
  std::printf("%s %d %s: %zu checks, %zu failures, %.2f s", pass ? "PASS" : "FAIL", id, title.c_str(),
              o.checks, o.failures.size(), seconds);
  if (limit > 0) std::printf(" (limit %.0f s)", limit);
  if (!o.note.empty()) std::printf("; %s", o.note.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("    %s\n", o.failures[i].c_str());
  std::fflush(stdout);
  return pass;
}

template <typename F>
auto timed(F&& f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

int main() {
  bool ok = true;
  double s = 0;
  try {
    auto c1 = timed(bass_identities, s);
    ok &= report(1, "Bass identities on C_n, n <= 12", c1, s, 60);

    auto c2 = timed(conjugate_products, s);
    ok &= report(2, "conjugate-product stage checks and laws", c2, s, 120);

    double s_shoda = 0;
    auto sh = timed(shoda_suite, s_shoda);
    ok &= report(3, "idempotents for catalog groups of order <= 32", sh.idempotents, s_shoda, 300);

    std::size_t skipped = 0;
    double s_basis = 0;
    auto cases = timed([&] { return eligible_bases(skipped); }, s_basis);
    auto c4 = timed([&] { return rank_identity(cases); }, s);
    c4.note = std::to_string(cases.size()) + " eligible groups, " + std::to_string(skipped) + " not eligible";
    ok &= report(4, "rank = #R-classes - #Q-classes", c4, s + s_basis, 0);

    auto c5 = timed([&] { return central_units(cases); }, s);
    ok &= report(5, "basis elements are central units", c5, s, 0);

    auto c6 = timed([&] { return independence(cases); }, s);
    ok &= report(6, "multiplicative independence at threshold 1e-8", c6, s, 0);

    auto c7 = timed([&] { return torsion(cases); }, s);
    ok &= report(7, "torsion claims", c7, s, 0);

    auto c8 = timed(generalized_units, s);
    ok &= report(8, "generalized Bass units on D8, Q8, D12", c8, s, 120);

    ok &= report(9, "component dimension audit", sh.dimensions, s_shoda, 0);
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s\n", ok ? "all criteria pass" : "some criteria fail");
  return ok ? 0 : 1;
}
