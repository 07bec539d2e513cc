#include "zgcu/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "zgcu/basis.hpp"
#include "zgcu/bass.hpp"
#include "zgcu/central.hpp"
#include "zgcu/classes.hpp"
#include "zgcu/rational.hpp"
#include "zgcu/shoda.hpp"

namespace zgcu::cli {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::GroupInfo, "group-info"}, {Command::Classes, "classes"},
    {Command::SsPairs, "sspairs"},      {Command::Bass, "bass"},
    {Command::Centralize, "centralize"}, {Command::Basis, "basis"},
    {Command::VerifyAll, "verify-all"},
};

bool timing_enabled() {
  const char* v = std::getenv("ZGCU_TIMING");
  return v && std::string_view(v) == "1";
}

Element require_element(const GroupPtr& g, const RunConfig& c) {
  if (!c.g) fail(ErrorKind::InvalidInput, std::string(to_string(c.command)) + " needs --g");
  return parse_element(*g, *c.g);
}

Subgroup parse_subgroup(const GroupPtr& g, std::string_view text) {
  std::vector<Element> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos) gens.push_back(parse_element(*g, part));
    start = end + 1;
  }
  return Subgroup::generated(g, gens);
}

// Default k for centralize: the smallest unit that is not +-1 mod n, else 1.
std::int64_t default_k(std::int64_t n) {
  for (std::int64_t k : units_mod(n))
    if (!has_finite_order(n, k)) return k;
  return 1;
}

json bass_report(const GroupPtr& g, const RunConfig& c) {
  const Element x = require_element(g, c);
  if (!c.k) fail(ErrorKind::InvalidInput, "bass needs --k");
  const std::int64_t n = g->element_order(x);
  if (c.M) {
    const Subgroup m_sub = parse_subgroup(g, *c.M);
    const GeneralizedBassUnit u = generalized_bass_unit(g, m_sub, x, *c.k, c.m);
    json out = generalized_unit_json(u);
    out["unit"] = (u.value * u.inverse).is_one();
    return out;
  }
  const BassDescriptor d = bass_descriptor(*g, x, *c.k, c.m);
  const GroupRingElement value = bass_unit(g, d);
  const GroupRingElement inverse = is_unit(value);
  const BassIdentityReport ids = bass_identities_check(g, x, d.k, d.k, d.m, d.m);
  if (!ids.all_hold()) fail(ErrorKind::VerificationFailure, "a Bass unit identity failed");
  return {{"descriptor", descriptor_to_json(d)},
          {"order_of_g", n},
          {"value", element_to_json(value)},
          {"inverse", element_to_json(inverse)},
          {"finite_order", has_finite_order(n, d.k)},
          {"identities", identities_json(ids)}};
}

json centralize_report(const GroupPtr& g, const RunConfig& c) {
  const Element x = require_element(g, c);
  const SubnormalSeries series = subnormal_series(g, x);
  const std::int64_t n = g->element_order(x);
  const BassDescriptor d = bass_descriptor(*g, x, c.k.value_or(default_k(n)), c.m);
  const CentralizationTrace t = centralize(series, bass_unit(g, d), {.check = true, .seed = c.seed});
  if (!t.all_hold()) fail(ErrorKind::VerificationFailure, "a conjugate-product stage check failed");
  json out = trace_json(t);
  out["descriptor"] = descriptor_to_json(d);
  return out;
}

json basis_report(const GroupPtr& g, const RunConfig& c) {
  CentralUnitBasis b = central_unit_basis(g, c.bounds);
  if (!b.elements.empty()) {
    b.verification.independence = verify_independence(b, {.seed = c.seed});
    if (b.verification.independence->status != IndependenceStatus::Independent)
      fail(ErrorKind::IndependenceUnresolved,
           "independence check returned " + to_string(b.verification.independence->status));
  }
  return basis_json(b);
}

// Collects named checks, keeping only failure descriptions.
struct Tally {
  std::size_t checked = 0;
  bool failed = false;
  json failures = json::array();

  void record(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (!ok && failures.size() < 50) failures.push_back(what());
    if (!ok) failed = true;
  }
  json to_json() const { return {{"checked", checked}, {"failures", failures}, {"ok", !failed}}; }
};

json verify_bass(const GroupPtr& g, const ClassStructure& cs) {
  Tally t;
  for (Element x : cs.representatives) {
    const std::int64_t n = g->element_order(x);
    if (n < 2) continue;
    const auto units = units_mod(n);
    for (std::int64_t k : units) {
      const std::int64_t o = multiplicative_order(k, n);
      for (std::int64_t k1 : units)
        for (std::int64_t m : {o, 2 * o}) {
          const auto r = bass_identities_check(g, x, k, k1, m, o);
          t.record(r.all_hold(), [&] {
            std::ostringstream os;
            os << "g=" << g->label(x) << " k=" << k << " k1=" << k1 << " m=" << m << " m1=" << o;
            for (const auto& f : r.failures()) os << "; " << f;
            return os.str();
          });
        }
      // Units of Z<g> of finite order are +-g^i, so a power 2n != 1 certifies infinite order.
      const auto order = torsion_order(bass_unit(g, x, k, o), 2 * static_cast<std::uint64_t>(n));
      t.record(order.has_value() == has_finite_order(n, k), [&] {
        return "finite-order criterion disagrees for g=" + g->label(x) + " k=" + std::to_string(k);
      });
    }
  }
  return t.to_json();
}

json verify_centralization(const GroupPtr& g, const ClassStructure& cs, std::uint64_t seed) {
  Tally t;
  std::size_t skipped = 0;
  for (Element x : cs.representatives) {
    const std::int64_t n = g->element_order(x);
    if (n < 2) continue;
    if (!is_subnormal(Subgroup::generated(g, std::vector<Element>{x}))) {
      ++skipped;
      continue;
    }
    const SubnormalSeries series = subnormal_series(g, x);
    const auto units = units_mod(n);
    for (std::size_t i = 0; i < units.size(); ++i) {
      const std::int64_t k = units[i];
      const std::int64_t k1 = units[(i + 1) % units.size()];
      const auto label = [&] { return "g=" + g->label(x) + " k=" + std::to_string(k); };
      const auto u = bass_unit(g, x, k, multiplicative_order(k, n));
      const auto v = bass_unit(g, x, k1, multiplicative_order(k1, n));
      try {
        const auto trace = centralize(series, u, {.check = true, .seed = seed});
        t.record(trace.all_hold() && trace.central, [&] { return "stage checks failed: " + label(); });
      } catch (const Error& e) {
        t.record(false, [&] { return std::string(e.what()) + ": " + label(); });
      }
      for (Element h : g->generators()) {
        const auto r = conjugate_product_laws(u, v, series, h);
        t.record(r.all_hold(), [&] { return "multiplicativity or conjugation invariance failed: " + label(); });
      }
    }
  }
  json out = t.to_json();
  out["non_subnormal_skipped"] = skipped;
  return out;
}

json verify_shoda(const GroupPtr& g, const Bounds& bounds) {
  Tally t;
  const ShodaSearch s = strong_shoda_pairs(g, bounds);
  std::int64_t total = 0;
  for (const auto& p : s.pairs) {
    const std::string label = describe(p.h) + " / " + describe(p.k);
    t.record((p.eps * p.eps) == p.eps, [&] { return "eps not idempotent: " + label; });
    t.record((p.e * p.e) == p.e && p.e.is_central(), [&] { return "e not a central idempotent: " + label; });
    const SimpleComponentInfo info = component_params(p);
    t.record(info.dimension == info.dimension_from_trace, [&] { return "dimension mismatch: " + label; });
    total += info.dimension_from_trace;
  }
  t.record(s.equivalence_tests_agree, [] { return std::string("equivalence tests disagree"); });
  t.record(s.pairwise_orthogonal, [] { return std::string("idempotents not orthogonal"); });
  if (s.sum_is_one)
    t.record(total == static_cast<std::int64_t>(g->order()), [] { return std::string("dimensions do not total |G|"); });
  json out = t.to_json();
  out["classes"] = s.pairs.size();
  out["strongly_monomial_certificate"] = s.sum_is_one;
  return out;
}

json verify_basis(const GroupPtr& g, const RunConfig& c) {
  const GroupPredicates pred = group_predicates(g, c.bounds);
  if (!pred.eligible) return {{"eligible", false}, {"ok", true}};
  Tally t;
  CentralUnitBasis b = central_unit_basis(g, c.bounds);
  t.record(b.verification.all_central_units, [] { return std::string("not all central units"); });
  t.record(b.verification.cardinality_matches, [] { return std::string("cardinality mismatch"); });
  json independence;
  if (!b.elements.empty()) {
    const auto rep = verify_independence(b, {.seed = c.seed});
    t.record(rep.status == IndependenceStatus::Independent && rep.numerical_rank == b.rank,
             [&] { return "independence: " + to_string(rep.status); });
    independence = independence_json(rep);
  }
  for (const auto& s : verify_exponent_scaling(b))
    t.record(s.holds, [&] { return "exponent scaling failed for t=" + std::to_string(s.t); });
  for (const auto& tc : verify_torsion_claims(g))
    t.record(tc.holds, [&] {
      return "torsion claim failed: g=" + g->label(tc.g) + " k=" + std::to_string(tc.k) +
             " l=" + std::to_string(tc.l);
    });
  json out = t.to_json();
  out["eligible"] = true;
  out["rank"] = b.rank;
  if (!independence.is_null()) out["independence"] = independence;
  return out;
}

json verify_all(const GroupPtr& g, const RunConfig& c) {
  const ClassStructure cs = class_structure(*g);
  json sections = {
      {"bass", verify_bass(g, cs)},
      {"centralization", verify_centralization(g, cs, c.seed)},
      {"strong_shoda_pairs", verify_shoda(g, c.bounds)},
      {"basis", verify_basis(g, c)},
  };
  bool ok = true;
  for (const auto& [name, s] : sections.items()) ok = ok && s.at("ok").get<bool>();
  return {{"group", g->name()}, {"order", g->order()}, {"sections", sections}, {"ok", ok}};
}

json dispatch(const RunConfig& c) {
  const GroupPtr g = load_group(c.group, c.bounds);
  switch (c.command) {
    case Command::GroupInfo: return group_info_json(g, c.bounds);
    case Command::Classes: return classes_json(*g);
    case Command::SsPairs: return shoda_json(strong_shoda_pairs(g, c.bounds));
    case Command::Bass: return bass_report(g, c);
    case Command::Centralize: return centralize_report(g, c);
    case Command::Basis: return basis_report(g, c);
    case Command::VerifyAll: return verify_all(g, c);
  }
  fail(ErrorKind::InvalidInput, "unknown command");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands)
    if (n == name) return c;
  return std::nullopt;
}

std::string_view to_string(Command c) {
  for (const auto& [cmd, n] : kCommands)
    if (cmd == c) return n;
  return "unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotEligible:
    case ErrorKind::NotSubnormal: return 2;
    case ErrorKind::VerificationFailure:
    case ErrorKind::IndependenceUnresolved: return 1;
    default: return 3;
  }
}

json error_json(ErrorKind kind, std::string_view message) {
  return {{"error", {{"kind", std::string(zgcu::to_string(kind))}, {"message", std::string(message)}}}};
}

RunResult run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult r;
  try {
    r.report = dispatch(config);
    if (config.command == Command::VerifyAll && !r.report.at("ok").get<bool>()) r.exit_code = 1;
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e.kind());
    r.report = error_json(e.kind(), e.what());
  } catch (const std::bad_alloc&) {
    r.exit_code = 3;
    r.report = error_json(ErrorKind::BoundExceeded, "out of memory");
  }
  if (timing_enabled()) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    r.report["timing_ms"] = ms.count();
  }
  return r;
}

std::string render_text(Command c, const json& j) {
  std::ostringstream os;
  switch (c) {
    case Command::GroupInfo:
      os << "group " << j["name"].get<std::string>() << ", order " << j["order"] << ", exponent "
         << j["exponent"] << "\n"
         << "abelian " << yes_no(j["abelian"]) << ", nilpotent " << yes_no(j["nilpotent"])
         << ", supersolvable " << yes_no(j["supersolvable"]) << "\n"
         << "abelian-by-supersolvable " << yes_no(j["abelian_by_supersolvable"]) << ", eligible "
         << yes_no(j["eligible"]) << "\n";
      break;
    case Command::Classes:
      os << j["conjugacy_classes"].size() << " conjugacy classes, " << j["r_classes"].size()
         << " R-classes, " << j["q_classes"].size() << " Q-classes, rank " << j["rank"] << "\n";
      for (const auto& r : j["representatives"])
        os << "  " << r["label"].get<std::string>() << " (order " << r["order"] << "): S_g "
           << r["S_g"].dump() << ", T_g " << r["T_g"].dump() << "\n";
      break;
    case Command::SsPairs:
      os << j["pairs"].size() << " classes of strong Shoda pairs; sum of idempotents is one: "
         << yes_no(j["sum_is_one"]) << "\n";
      for (const auto& p : j["pairs"]) {
        const auto& c2 = p["component"];
        os << "  |H|=" << p["H"].size() << " |K|=" << p["K"].size() << ": M_" << c2["n"]
           << ", k=" << c2["k"] << ", [N:H]=" << c2["s"] << ", dim " << c2["dimension"];
        for (const auto& f : c2["flags"]) os << " [" << f.get<std::string>() << "]";
        os << "\n";
      }
      break;
    case Command::Bass:
      os << "descriptor " << j["descriptor"].dump() << "\nvalue " << j["value"].dump() << "\n";
      if (j.contains("n_b")) os << "n_b " << j["n_b"] << "\n";
      break;
    case Command::Centralize:
      os << "descriptor " << j["descriptor"].dump() << ", series length "
         << j["series"]["chain"].size() - 1 << ", central " << yes_no(j["central"]) << "\nresult "
         << j["result"].dump() << "\n";
      break;
    case Command::Basis:
      os << "rank " << j["rank"] << ", " << j["elements"].size() << " basis elements\n";
      for (const auto& e : j["elements"])
        os << "  g=" << e["label"].get<std::string>() << " k=" << e["descriptor"]["k"]
           << " m=" << e["descriptor"]["m"] << "\n";
      if (j["verification"].contains("independence"))
        os << "independence: " << j["verification"]["independence"]["status"].get<std::string>() << "\n";
      break;
    case Command::VerifyAll:
      for (const auto& [name, s] : j["sections"].items()) {
        os << name << ": " << (s["ok"].get<bool>() ? "ok" : "FAILED");
        if (s.contains("checked")) os << " (" << s["checked"] << " checks)";
        os << "\n";
        if (s.contains("failures"))
          for (const auto& f : s["failures"]) os << "  " << f.get<std::string>() << "\n";
      }
      os << (j["ok"].get<bool>() ? "all checks passed" : "some checks failed") << "\n";
      break;
  }
  return os.str();
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult r = run(config);
  if (r.report.contains("error")) {
    err << r.report.dump() << "\n";
    return r.exit_code;
  }
  const std::string text =
      config.format == Format::Json ? r.report.dump(2) + "\n" : render_text(config.command, r.report);
  if (config.output) {
    std::ofstream f(*config.output);
    if (!f || !(f << text)) {
      err << error_json(ErrorKind::Io, "cannot write " + config.output->string()).dump() << "\n";
      return 3;
    }
  } else {
    out << text;
  }
  return r.exit_code;
}

}  // namespace zgcu::cli
