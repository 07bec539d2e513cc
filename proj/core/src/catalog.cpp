#include "zgcu/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "zgcu/error.hpp"
#include "zgcu/rational.hpp"

#ifndef ZGCU_CATALOG_SOURCE_PATH
#define ZGCU_CATALOG_SOURCE_PATH ""
#endif
#ifndef ZGCU_CATALOG_INSTALL_PATH
#define ZGCU_CATALOG_INSTALL_PATH ""
#endif

namespace zgcu {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Recursive-descent evaluator for catalog parameter expressions.
class ExprParser {
 public:
  ExprParser(std::string_view text, const std::map<std::string, std::int64_t>& env)
      : text_(text), env_(env) {}

  std::int64_t parse() {
    const std::int64_t v = sum();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return v;
  }

 private:
  std::int64_t sum() {
    std::int64_t v = product();
    for (;;) {
      skip_ws();
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  std::int64_t product() {
    std::int64_t v = unary();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const std::int64_t d = unary();
        if (d == 0 || v % d != 0) error("is not an exact integer quotient");
        v /= d;
      } else if (eat('%')) {
        const std::int64_t d = unary();
        if (d == 0) error("modulo by zero");
        v = mod_floor(v, d);
      } else {
        return v;
      }
    }
  }

  std::int64_t unary() {
    skip_ws();
    if (eat('-')) return -unary();
    if (eat('(')) {
      const std::int64_t v = sum();
      skip_ws();
      if (!eat(')')) error("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = v * 10 + (text_[pos_++] - '0');
      return v;
    }
    std::string ident;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ident += text_[pos_++];
    if (ident.empty()) error("expected a number or parameter");
    auto it = env_.find(ident);
    if (it == env_.end()) error("unknown parameter '" + ident + "'");
    return it->second;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::InvalidInput, "parameter expression '" + std::string(text_) + "' " + msg);
  }

  std::string_view text_;
  const std::map<std::string, std::int64_t>& env_;
  std::size_t pos_ = 0;
};

std::string power_word(const std::string& name, std::int64_t e) {
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace

std::int64_t eval_param_expr(std::string_view expr,
                             const std::map<std::string, std::int64_t>& env) {
  return ExprParser(expr, env).parse();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const std::string s = trim(text);
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') fail(ErrorKind::InvalidInput, "bad permutation '" + s + "'");
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos) fail(ErrorKind::InvalidInput, "unclosed cycle in '" + s + "'");
    const std::string body = s.substr(i + 1, close - i - 1);
    std::vector<int> cycle;
    const bool separated = body.find_first_of(", \t") != std::string::npos;
    if (separated) {
      std::string tok;
      for (char c : body + ",") {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
          if (!tok.empty()) {
            if (!all_digits(tok)) fail(ErrorKind::InvalidInput, "bad point '" + tok + "'");
            cycle.push_back(std::stoi(tok));
            tok.clear();
          }
        } else {
          tok += c;
        }
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          fail(ErrorKind::InvalidInput, "bad point in cycle '" + body + "'");
        cycle.push_back(c - '0');
      }
    }
    for (int p : cycle)
      if (p < 1) fail(ErrorKind::InvalidInput, "permutation points are 1-based");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  int degree = 0;
  for (const auto& c : cycles)
    for (int p : c) degree = std::max(degree, p);
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (int p : c) {
      if (used[p - 1]) fail(ErrorKind::InvalidInput, "cycles are not disjoint in '" + s + "'");
      used[p - 1] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) perm[c[k] - 1] = c[(k + 1) % c.size()] - 1;
  }
  return perm;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr permutation_group(const std::vector<std::string>& generators, std::string name,
                           std::size_t max_order) {
  std::vector<Permutation> perms;
  std::size_t degree = 0;
  for (const auto& text : generators) {
    perms.push_back(parse_permutation(text));
    degree = std::max(degree, perms.back().size());
  }
  for (auto& p : perms) {
    const std::size_t old = p.size();
    p.resize(degree);
    for (std::size_t i = old; i < degree; ++i) p[i] = static_cast<int>(i);
  }
  ConcreteGroup spec;
  spec.identity.resize(degree);
  std::iota(spec.identity.begin(), spec.identity.end(), 0);
  spec.generators = perms;
  spec.multiply = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[static_cast<std::size_t>(x[i])];
    return r;
  };
  spec.label = [](const std::vector<int>& x) { return format_permutation(x); };
  return enumerate_group(spec, std::move(name), max_order);
}

GroupPtr cyclic_extension(std::int64_t a_order, std::int64_t b_order, std::int64_t b_power,
                          std::int64_t action, std::vector<std::string> names, std::string name,
                          std::size_t max_order) {
  if (a_order < 1 || b_order < 1)
    fail(ErrorKind::InvalidInput, "presentation orders must be positive");
  if (static_cast<std::size_t>(a_order) * static_cast<std::size_t>(b_order) > max_order)
    fail(ErrorKind::BoundExceeded,
         "group order exceeds the configured bound " + std::to_string(max_order));
  const std::int64_t r = mod_floor(action, a_order);
  const std::int64_t s = mod_floor(b_power, a_order);
  if (gcd64(r, a_order) != 1 && a_order > 1)
    fail(ErrorKind::InvalidInput, "conjugation exponent must be a unit modulo the order of a");
  if (pow_mod(r, b_order, a_order) != mod_floor(1, a_order))
    fail(ErrorKind::InvalidInput, "r^q is not congruent to 1 modulo p (r=" +
                                      std::to_string(action) + ", q=" + std::to_string(b_order) +
                                      ", p=" + std::to_string(a_order) + ")");
  if (mod_floor(s * (r - 1), a_order) != 0)
    fail(ErrorKind::InvalidInput, "b^q must be central: a^s is not fixed by conjugation");
  if (names.size() < 2) names.resize(2);
  if (names[0].empty()) names[0] = "a";
  if (names[1].empty()) names[1] = "b";
  const std::int64_t r_inv = inverse_mod(r, a_order);

  ConcreteGroup spec;
  spec.identity = {0, 0};
  spec.generators.push_back({static_cast<int>(mod_floor(1, a_order)), 0});
  if (b_order > 1) spec.generators.push_back({0, 1});
  spec.multiply = [=](const std::vector<int>& x, const std::vector<int>& y) {
    // a^i b^j a^k b^l = a^(i + k r^-j) b^(j+l), folding b^q = a^s.
    const std::int64_t twist = pow_mod(r_inv, x[1], a_order);
    std::int64_t i = x[0] + static_cast<std::int64_t>(y[0]) * twist;
    std::int64_t j = x[1] + y[1];
    if (j >= b_order) {
      j -= b_order;
      i += s;
    }
    return std::vector<int>{static_cast<int>(mod_floor(i, a_order)), static_cast<int>(j)};
  };
  spec.label = [names](const std::vector<int>& x) {
    if (x[0] == 0 && x[1] == 0) return std::string("e");
    std::string out;
    if (x[0] != 0) out += power_word(names[0], x[0]);
    if (x[1] != 0) {
      if (!out.empty()) out += "*";
      out += power_word(names[1], x[1]);
    }
    return out;
  };
  return enumerate_group(spec, std::move(name), max_order);
}

GroupPtr abelian_group(const std::vector<std::int64_t>& orders, std::vector<std::string> names,
                       std::string name, std::size_t max_order) {
  if (orders.empty()) fail(ErrorKind::InvalidInput, "abelian group needs at least one factor");
  std::size_t total = 1;
  for (auto o : orders) {
    if (o < 1) fail(ErrorKind::InvalidInput, "cyclic factor orders must be positive");
    total *= static_cast<std::size_t>(o);
    if (total > max_order)
      fail(ErrorKind::BoundExceeded,
           "group order exceeds the configured bound " + std::to_string(max_order));
  }
  for (std::size_t i = names.size(); i < orders.size(); ++i)
    names.push_back("x" + std::to_string(i + 1));
  ConcreteGroup spec;
  spec.identity.assign(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<int> g(orders.size(), 0);
    g[i] = orders[i] > 1 ? 1 : 0;
    spec.generators.push_back(g);
  }
  spec.multiply = [orders](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = static_cast<int>((x[i] + y[i]) % orders[i]);
    return r;
  };
  spec.label = [names](const std::vector<int>& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += power_word(names[i], x[i]);
    }
    return out.empty() ? std::string("e") : out;
  };
  return enumerate_group(spec, std::move(name), max_order);
}

GroupPtr group_from_table_json(const nlohmann::json& doc, std::string name) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    fail(ErrorKind::InvalidInput, "table document needs \"order\" and \"table\"");
  const auto n = doc.at("order").get<std::int64_t>();
  const auto& rows = doc.at("table");
  if (n < 1 || !rows.is_array() || static_cast<std::int64_t>(rows.size()) != n)
    fail(ErrorKind::InvalidInput, "table must have \"order\" rows");
  std::vector<std::vector<Element>> table;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != n)
      fail(ErrorKind::InvalidInput, "table rows must have \"order\" entries");
    std::vector<Element> r;
    for (const auto& v : row) {
      const auto x = v.get<std::int64_t>();
      if (x < 0 || x >= n) fail(ErrorKind::InvalidInput, "table entry out of range");
      r.push_back(static_cast<Element>(x));
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

GroupPtr group_from_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed table file: ") + e.what());
  }
  return group_from_table_json(doc, path.filename().string());
}

nlohmann::json group_to_table_json(const FiniteGroup& g) {
  nlohmann::json table = nlohmann::json::array();
  for (Element a = 0; a < g.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"table", std::move(table)}};
}

// ---------------------------------------------------------------------------

Catalog Catalog::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open group catalog " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed group catalog: ") + e.what());
  }
  return from_json(std::move(doc));
}

Catalog Catalog::from_json(nlohmann::json doc) {
  if (!doc.is_object()) fail(ErrorKind::InvalidInput, "group catalog must be a JSON object");
  Catalog c;
  c.doc_ = std::move(doc);
  return c;
}

namespace {

std::pair<std::string, std::string> split_spec(std::string_view spec) {
  const std::string s = trim(spec);
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {s, ""};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::vector<std::string> permutation_templates(const nlohmann::json& gens,
                                               const std::map<std::string, std::int64_t>& env) {
  std::vector<std::string> out;
  for (const auto& g : gens) {
    if (g.is_string()) {
      out.push_back(g.get<std::string>());
      continue;
    }
    std::string text;
    for (const auto& cycle : g) {
      std::vector<std::int64_t> points;
      if (cycle.is_string()) {
        const auto s = cycle.get<std::string>();
        const auto dots = s.find("..");
        if (dots == std::string::npos)
          fail(ErrorKind::InvalidInput, "cycle range must look like 'lo..hi'");
        const auto lo = eval_param_expr(s.substr(0, dots), env);
        const auto hi = eval_param_expr(s.substr(dots + 2), env);
        for (auto p = lo; p <= hi; ++p) points.push_back(p);
      } else {
        for (const auto& p : cycle) points.push_back(eval_param_expr(p.get<std::string>(), env));
      }
      if (points.size() < 2) continue;
      text += "(";
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(points[i]);
      }
      text += ")";
    }
    out.push_back(text.empty() ? "()" : text);
  }
  return out;
}

GroupPtr build_entry(const nlohmann::json& entry, const std::vector<std::int64_t>& args,
                     const std::string& name, std::size_t max_order) {
  std::map<std::string, std::int64_t> env;
  const auto& params = entry.contains("params") ? entry.at("params") : nlohmann::json::array();
  const bool variadic = params.is_string() && params.get<std::string>() == "variadic";
  if (!variadic) {
    if (params.size() != args.size())
      fail(ErrorKind::InvalidInput, "'" + name + "' expects " + std::to_string(params.size()) +
                                        " parameter(s)");
    for (std::size_t i = 0; i < args.size(); ++i) env[params[i].get<std::string>()] = args[i];
  } else if (args.empty()) {
    fail(ErrorKind::InvalidInput, "'" + name + "' expects at least one parameter");
  }
  if (entry.contains("constraints")) {
    for (const auto& c : entry.at("constraints")) {
      const auto v = eval_param_expr(c.at("expr").get<std::string>(), env);
      if (c.contains("min") && v < c.at("min").get<std::int64_t>())
        fail(ErrorKind::InvalidInput, "'" + name + "': " + c.at("expr").get<std::string>() +
                                          " must be at least " + c.at("min").dump());
      if (c.contains("max") && v > c.at("max").get<std::int64_t>())
        fail(ErrorKind::InvalidInput, "'" + name + "': " + c.at("expr").get<std::string>() +
                                          " must be at most " + c.at("max").dump());
    }
  }
  std::vector<std::string> names;
  if (entry.contains("names")) names = entry.at("names").get<std::vector<std::string>>();

  const std::string kind = entry.value("kind", "");
  if (kind == "presentation") {
    auto ev = [&](const char* key) { return eval_param_expr(entry.at(key).get<std::string>(), env); };
    return cyclic_extension(ev("a_order"), ev("b_order"), ev("b_power"), ev("action"),
                            std::move(names), name, max_order);
  }
  if (kind == "permutations") {
    return permutation_group(permutation_templates(entry.at("generators"), env), name, max_order);
  }
  if (kind == "abelian") return abelian_group(args, std::move(names), name, max_order);
  fail(ErrorKind::InvalidInput, "catalog entry '" + name + "' has unknown kind '" + kind + "'");
}

}  // namespace

GroupPtr Catalog::build(std::string_view spec, std::size_t max_order) const {
  const auto [family, arg_text] = split_spec(spec);
  std::vector<std::int64_t> args;
  if (!arg_text.empty()) {
    for (const auto& a : split(arg_text, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoll(a, &used));
        if (used != a.size()) throw std::invalid_argument(a);
      } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidInput, "bad catalog parameter '" + a + "'");
      }
    }
  }
  const std::string canonical = trim(spec);
  if (doc_.contains("families") && doc_["families"].contains(family))
    return build_entry(doc_["families"][family], args, canonical, max_order);
  if (doc_.contains("groups") && doc_["groups"].contains(family)) {
    if (!args.empty()) fail(ErrorKind::InvalidInput, "'" + family + "' takes no parameters");
    return build_entry(doc_["groups"][family], args, canonical, max_order);
  }
  fail(ErrorKind::InvalidInput, "unknown catalog group '" + family + "'");
}

bool Catalog::knows(std::string_view spec) const {
  const auto family = split_spec(spec).first;
  return (doc_.contains("families") && doc_["families"].contains(family)) ||
         (doc_.contains("groups") && doc_["groups"].contains(family));
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const char* section : {"families", "groups"})
    if (doc_.contains(section))
      for (const auto& [k, v] : doc_[section].items()) out.push_back(k);
  return out;
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("ZGCU_CATALOG"); env && *env) return env;
  for (const char* candidate : {ZGCU_CATALOG_INSTALL_PATH, ZGCU_CATALOG_SOURCE_PATH}) {
    if (*candidate && std::filesystem::exists(candidate)) return candidate;
  }
  return "catalog.json";
}

const Catalog& default_catalog() {
  static const Catalog catalog = Catalog::from_file(default_catalog_path());
  return catalog;
}

GroupPtr load_group(std::string_view spec, const Bounds& bounds) {
  const std::string s = trim(spec);
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty group specification");
  GroupPtr g;
  if (s.rfind("table:", 0) == 0) {
    g = group_from_table_file(s.substr(6));
  } else if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    g = group_from_table_file(s);
  } else if (s.rfind("perm:", 0) == 0 || s.front() == '(') {
    const std::string body = s.rfind("perm:", 0) == 0 ? s.substr(5) : s;
    g = permutation_group(split(body, ';'), s, bounds.max_order);
  } else {
    g = default_catalog().build(s, bounds.max_order);
  }
  if (g->order() > bounds.max_order)
    fail(ErrorKind::BoundExceeded,
         "group order exceeds the configured bound " + std::to_string(bounds.max_order));
  return g;
}

Element parse_element(const FiniteGroup& g, std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty element specification");
  auto checked_index = [&](const std::string& digits) {
    const auto v = std::stoull(digits);
    if (v >= g.order()) fail(ErrorKind::InvalidInput, "element index out of range: " + digits);
    return static_cast<Element>(v);
  };
  if (s.front() == '#' && all_digits(s.substr(1))) return checked_index(s.substr(1));
  if (all_digits(s)) return checked_index(s);
  if (s.front() == '(') {
    const std::string canonical = format_permutation(parse_permutation(s));
    for (Element x = 0; x < g.order(); ++x)
      if (g.label(x) == canonical) return x;
    fail(ErrorKind::InvalidInput, "permutation " + s + " is not an element of " + g.name());
  }
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x) == s) return x;

  // Word over generator labels (or a, b, c, ... by position).
  const auto gens = g.generators();
  auto generator_named = [&](const std::string& name) -> Element {
    for (Element x : gens)
      if (g.label(x) == name) return x;
    if (name.size() == 1 && name[0] >= 'a' && name[0] < 'a' + static_cast<int>(gens.size()))
      return gens[static_cast<std::size_t>(name[0] - 'a')];
    fail(ErrorKind::InvalidInput, "unknown generator '" + name + "' in element '" + s + "'");
  };
  Element result = g.identity();
  for (const auto& factor : split(s, '*')) {
    const auto caret = factor.find('^');
    const std::string base = trim(factor.substr(0, caret));
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      const std::string exp = trim(factor.substr(caret + 1));
      try {
        std::size_t used = 0;
        e = std::stoll(exp, &used);
        if (used != exp.size()) throw std::invalid_argument(exp);
      } catch (const std::logic_error&) {
        fail(ErrorKind::InvalidInput, "bad exponent in element '" + s + "'");
      }
    }
    const Element x = (base == "e" || base == "1") ? g.identity() : generator_named(base);
    result = g.mul(result, g.pow(x, e));
  }
  return result;
}

}  // namespace zgcu
