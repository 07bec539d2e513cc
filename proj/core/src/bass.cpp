#include "zgcu/bass.hpp"

#include <numeric>

#include "zgcu/error.hpp"
#include "zgcu/rational.hpp"

namespace zgcu {

namespace {

using Poly = std::vector<Integer>;

// Product in Z[x]/(x^n - 1).
Poly cyclic_mul(const Poly& a, const Poly& b) {
  const std::size_t n = a.size();
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      const std::size_t s = i + j < n ? i + j : i + j - n;
      mpz_addmul(out[s].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

Poly cyclic_pow(Poly base, std::uint64_t e) {
  Poly result(base.size());
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = cyclic_mul(result, base);
    e >>= 1;
    if (e) base = cyclic_mul(base, base);
  }
  return result;
}

// b(k, m, x) in Z[x]/(x^n - 1) for k >= 1, unreduced.
Poly bass_poly(std::int64_t n, std::int64_t k, std::int64_t m) {
  Poly s(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < k; ++i) s[static_cast<std::size_t>(i % n)] += 1;
  Poly out = cyclic_pow(std::move(s), static_cast<std::uint64_t>(m));
  const Integer km = ipow(Integer(k), static_cast<unsigned long>(m));
  const Integer num = 1 - km;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(n)))
    fail(ErrorKind::InvalidInput, "Bass unit parameters violate k^m = 1 mod n");
  const Integer c = num / n;
  for (auto& v : out) v += c;
  return out;
}

GroupRingElement embed(const GroupPtr& g, Element x, const Poly& p) {
  std::vector<Rational> dense(g->order());
  Element xi = 0;
  for (const auto& c : p) {
    dense[xi] += Rational(c);
    xi = g->mul(xi, x);
  }
  return GroupRingElement::from_dense(g, dense);
}

std::int64_t reduce_k(std::int64_t k, std::int64_t n) {
  const std::int64_t r = mod_floor(k, n);
  return r == 0 ? 1 : r;  // only when n = 1
}

bool congruent_one(std::int64_t k, std::int64_t m, std::int64_t n) {
  return n == 1 || pow_mod(mod_floor(k, n), m, n) == 1 % n;
}

}  // namespace

BassDescriptor bass_descriptor(const FiniteGroup& g, Element x, std::int64_t k,
                               std::optional<std::int64_t> m) {
  if (x >= g.order()) fail(ErrorKind::InvalidInput, "element out of range");
  const std::int64_t n = g.element_order(x);
  if (gcd64(mod_floor(k, n), n) != 1 && n > 1)
    fail(ErrorKind::InvalidInput, "k must be coprime to the order of g");
  BassDescriptor d;
  d.g = x;
  d.k = reduce_k(k, n);
  d.m = m ? *m : multiplicative_order(d.k, n);
  if (d.m < 0) fail(ErrorKind::InvalidInput, "m must be non-negative");
  if (!congruent_one(d.k, d.m, n))
    fail(ErrorKind::InvalidInput, "k^m is not congruent to 1 modulo the order of g");
  return d;
}

GroupRingElement bass_unit(const GroupPtr& g, const BassDescriptor& d) {
  const std::int64_t n = g->element_order(d.g);
  return embed(g, d.g, bass_poly(n, d.k, d.m));
}

GroupRingElement bass_unit(const GroupPtr& g, Element x, std::int64_t k, std::int64_t m) {
  return bass_unit(g, bass_descriptor(*g, x, k, m));
}

GroupRingElement bass_unit_unreduced(const GroupPtr& g, Element x, std::int64_t k, std::int64_t m) {
  if (k < 1) fail(ErrorKind::InvalidInput, "unreduced evaluation needs k >= 1");
  const std::int64_t n = g->element_order(x);
  return embed(g, x, bass_poly(n, k, m));
}

bool BassIdentityReport::all_hold() const {
  for (const auto& c : checks)
    if (c.applicable && !c.holds) return false;
  return true;
}

std::vector<std::string> BassIdentityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.applicable && !c.holds) out.push_back(c.name);
  return out;
}

BassIdentityReport bass_identities_check(const GroupPtr& g, Element x, std::int64_t k,
                                         std::int64_t k1, std::int64_t m, std::int64_t m1,
                                         int max_power) {
  const std::int64_t n = g->element_order(x);
  BassIdentityReport rep;
  auto add = [&](std::string name, bool applicable, auto&& body) {
    IdentityCheck c;
    c.name = std::move(name);
    c.applicable = applicable;
    if (applicable) c.holds = body();
    rep.checks.push_back(std::move(c));
  };

  const bool unit_k = gcd64(mod_floor(k, n), n) == 1 || n == 1;
  const bool unit_k1 = gcd64(mod_floor(k1, n), n) == 1 || n == 1;
  const bool km = unit_k && congruent_one(k, m, n);
  const bool k1m = unit_k1 && congruent_one(k1, m, n);
  const bool km1 = unit_k && congruent_one(k, m1, n);
  // (-1)^m = 1 mod n; for n <= 2 the congruence is vacuous but both identities still need m even.
  const bool sign_even = m % 2 == 0;
  auto b = [&](Element base, std::int64_t kk, std::int64_t mm) { return bass_unit(g, base, kk, mm); };

  add("reduction of k", km && k >= 1, [&] {
    const auto lhs = bass_unit_unreduced(g, x, k, m);
    bool ok = lhs == bass_unit_unreduced(g, x, k + n, m) && lhs == b(x, k, m);
    if (k1 >= 1 && mod_floor(k1 - k, n) == 0) ok = ok && lhs == bass_unit_unreduced(g, x, k1, m);
    return ok;
  });
  add("additivity in m", km && km1, [&] { return b(x, k, m) * b(x, k, m1) == b(x, k, m + m1); });
  add("multiplicativity in k", km && k1m, [&] {
    const Element xk = g->pow(x, mod_floor(k, n));
    return b(x, k, m) * b(xk, k1, m) == b(x, k * k1, m);
  });
  add("b(1, m, g) = 1", true, [&] { return b(x, 1, m).is_one(); });
  add("b(-1, m, g) = (-g)^-m", sign_even, [&] {
    // (-g)^-m = (-1)^m g^-m.
    auto rhs = GroupRingElement::basis(g, g->pow(x, -m), (m % 2 == 0) ? 1 : -1);
    return b(x, -1, m) == rhs;
  });
  add("integral powers", km, [&] {
    const auto base = b(x, k, m);
    for (int i = 0; i <= max_power; ++i)
      if (base.pow(static_cast<std::uint64_t>(i)) != b(x, k, m * i)) return false;
    return true;
  });
  add("inverse", km, [&] {
    const std::int64_t kinv = n == 1 ? 1 : inverse_mod(mod_floor(k, n), n);
    const Element xk = g->pow(x, mod_floor(k, n));
    const auto inv = b(xk, kinv, m);
    return (b(x, k, m) * inv).is_one() && (inv * b(x, k, m)).is_one();
  });
  add("b(n - k, m, g) = b(k, m, g) g^-km", km && sign_even, [&] {
    const Element shift = g->pow(x, mod_floor(-k * m, n));
    return b(x, n - mod_floor(k, n), m) == b(x, k, m) * GroupRingElement::basis(g, shift);
  });
  return rep;
}

bool has_finite_order(std::int64_t n, std::int64_t k) {
  if (n <= 2) return true;
  const std::int64_t r = mod_floor(k, n);
  return r == 1 || r == n - 1;
}

std::optional<std::uint64_t> torsion_order(const GroupRingElement& u, std::uint64_t bound) {
  GroupRingElement p = u;
  for (std::uint64_t t = 1; t <= bound; ++t) {
    if (p.is_one()) return t;
    p = p * u;
  }
  return std::nullopt;
}

std::uint64_t torsion_bound(const FiniteGroup& g) { return 2 * g.order() * g.order(); }

GeneralizedBassUnit generalized_bass_unit(const GroupPtr& g, const Subgroup& m_sub, Element x,
                                          std::int64_t k, std::optional<std::int64_t> m,
                                          std::uint64_t max_exponent) {
  if (m_sub.parent() != g) fail(ErrorKind::GroupMismatch, "M is not a subgroup of this group");
  const Quotient q = quotient(m_sub);  // throws NotNormal
  const BassDescriptor d = bass_descriptor(*g, x, k, m);
  const GroupRingElement b = bass_unit(g, d);
  const GroupRingElement mhat = hat(m_sub);
  const GroupRingElement one = GroupRingElement::one(g);

  // u^t lies in ZG iff the image of b^t in Z(G/M) is 1 modulo |M|.
  const auto mod = static_cast<std::int64_t>(m_sub.order());
  const FiniteGroup& gq = *q.group;
  std::vector<std::int64_t> bbar(gq.order(), 0);
  for (const auto& [y, c] : b.terms()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(mod));
    bbar[q.projection[y]] = (bbar[q.projection[y]] + r.get_si()) % mod;
  }
  auto is_one_mod = [&](const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != (i == 0 ? 1 % mod : 0)) return false;
    return true;
  };
  std::uint64_t n_b = 1;
  std::vector<std::int64_t> power = bbar;
  while (!is_one_mod(power)) {
    if (++n_b > max_exponent)
      fail(ErrorKind::BoundExceeded, "no power of the generalized Bass unit within the exponent cap");
    std::vector<std::int64_t> next(gq.order(), 0);
    for (Element a = 0; a < gq.order(); ++a) {
      if (power[a] == 0) continue;
      for (Element c = 0; c < gq.order(); ++c)
        if (bbar[c] != 0) {
          auto& slot = next[gq.mul(a, c)];
          slot = static_cast<std::int64_t>((slot + static_cast<__int128>(power[a]) * bbar[c]) % mod);
        }
    }
    power = std::move(next);
  }

  GeneralizedBassUnit out{d, m_sub, one - mhat + b * mhat, n_b, one, one};
  out.value = one - mhat + b.pow(n_b) * mhat;
  if (!out.value.is_integral())
    fail(ErrorKind::VerificationFailure, "generalized Bass unit power is not integral");
  out.inverse = is_unit(out.value);
  return out;
}

BassLift lift_bass_unit(const Quotient& q, const GroupPtr& g, Element xbar, std::int64_t k,
                        std::int64_t m) {
  const FiniteGroup& gq = *q.group;
  const BassDescriptor dbar = bass_descriptor(gq, xbar, k, m);
  Element x = g->order();
  for (Element y = 0; y < g->order(); ++y)
    if (q.projection[y] == xbar) {
      x = y;
      break;
    }
  if (x == g->order()) fail(ErrorKind::InvalidInput, "element has no preimage");
  const std::int64_t n = g->element_order(x);
  const std::int64_t nbar = gq.element_order(xbar);
  std::int64_t k_lift = dbar.k;
  while (gcd64(k_lift, n) != 1) k_lift += nbar;
  const std::int64_t ord = multiplicative_order(mod_floor(k_lift, n), n);
  const std::int64_t m_lift = dbar.m == 0 ? 0 : std::lcm(dbar.m, ord);
  BassLift out;
  out.lift = bass_descriptor(*g, x, k_lift, m_lift);
  out.power = dbar.m == 0 ? 1 : m_lift / dbar.m;
  return out;
}

}  // namespace zgcu
