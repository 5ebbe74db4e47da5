#include "cohesionlab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cohesionlab/affine.hpp"
#include "cohesionlab/cohesion.hpp"
#include "cohesionlab/errors.hpp"

namespace clab {

namespace {

// ---------------------------------------------------------------------------
// lexical helpers

struct Tok {
  std::string s;
  size_t col;  // 0-based offset in the raw line
};

std::string strip_comment(const std::string& raw) {
  size_t h = raw.find('#');
  return h == std::string::npos ? raw : raw.substr(0, h);
}

std::vector<Tok> lex_line(const std::string& raw) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < raw.size()) {
    if (std::isspace(static_cast<unsigned char>(raw[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    out.push_back({raw.substr(start, i - start), start});
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_at(const std::string& msg, int line, size_t col0) {
  throw ParseError(msg, line, static_cast<int>(col0) + 1);
}

long parse_count(const std::string& s, int line, size_t col) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 0) fail_at("expected a non-negative integer", line, col);
    return v;
  } catch (const std::invalid_argument&) {
    fail_at("expected a non-negative integer", line, col);
  } catch (const std::out_of_range&) {
    fail_at("integer out of range", line, col);
  }
}

// blanks out raw[0..upto) so polynomial-parser columns match the file line
std::string pad_prefix(const std::string& raw, size_t upto) {
  std::string s = raw;
  for (size_t i = 0; i < upto && i < s.size(); ++i) s[i] = ' ';
  return s;
}

// ---------------------------------------------------------------------------
// interval literal:  {3}  |  [0, 2)  |  (-oo, 0]  |  (1/2, oo)

QInterval parse_interval_literal(const std::string& text, int line, size_t col) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') {
    Rational q;
    try {
      q = parse_rational(trim(t.substr(1, t.size() - 2)));
    } catch (const std::invalid_argument&) {
      fail_at("bad rational in point interval", line, col);
    }
    return qinterval(q, true, q, true);
  }
  if (t.size() < 2 || (t.front() != '[' && t.front() != '(') ||
      (t.back() != ']' && t.back() != ')'))
    fail_at("expected an interval like [0, 2), (-oo, 0] or {3}", line, col);
  bool lo_closed = t.front() == '[';
  bool hi_closed = t.back() == ']';
  size_t comma = t.find(',');
  if (comma == std::string::npos) fail_at("interval needs a comma", line, col);
  std::string lo_s = trim(t.substr(1, comma - 1));
  std::string hi_s = trim(t.substr(comma + 1, t.size() - comma - 2));
  std::optional<Rational> lo, hi;
  if (lo_s != "-oo") {
    try {
      lo = parse_rational(lo_s);
    } catch (const std::invalid_argument&) {
      fail_at("bad lower endpoint '" + lo_s + "'", line, col);
    }
  }
  if (hi_s != "oo") {
    try {
      hi = parse_rational(hi_s);
    } catch (const std::invalid_argument&) {
      fail_at("bad upper endpoint '" + hi_s + "'", line, col);
    }
  }
  return qinterval(lo, lo_closed, hi, hi_closed);
}

// ---------------------------------------------------------------------------
// stanza assembly

struct BodyLine {
  int no;
  std::string raw;  // comment-stripped, untrimmed
  std::vector<Tok> toks;
};

size_t index_of(const std::vector<std::string>& names, const std::string& s, int line, size_t col,
                const std::string& what) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) throw UnresolvedName("unknown " + what + " '" + s + "' at line " +
                                              std::to_string(line) + ":" + std::to_string(col + 1));
  return static_cast<size_t>(it - names.begin());
}

void build_algebra(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
                   int header_line, MonomialOrder order) {
  std::vector<std::string> gens;
  bool have_vars = false;
  std::vector<Polynomial> rels;
  for (const auto& bl : body) {
    const std::string& key = bl.toks[0].s;
    if (key == "vars") {
      if (have_vars) fail_at("duplicate vars line", bl.no, bl.toks[0].col);
      have_vars = true;
      for (size_t i = 1; i < bl.toks.size(); ++i) gens.push_back(bl.toks[i].s);
    } else if (key == "rel") {
      if (!have_vars) fail_at("rel before vars", bl.no, bl.toks[0].col);
      if (bl.toks.size() < 2) fail_at("rel needs a polynomial", bl.no, bl.toks[0].col + 3);
      rels.push_back(parse_polynomial(pad_prefix(bl.raw, bl.toks[1].col), gens, bl.no));
    } else {
      fail_at("unknown algebra key '" + key + "'", bl.no, bl.toks[0].col);
    }
  }
  if (!have_vars) fail_at("algebra stanza needs a vars line", header_line, 0);
  sc.algebras.emplace(name, FpAlgebra::make(gens, rels, order));
}

void build_site(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
                int header_line) {
  std::vector<std::string> objects;
  std::vector<FinCat::Mor> mors;
  std::vector<std::string> mor_names;
  std::vector<std::optional<size_t>> ids;
  std::vector<std::tuple<size_t, size_t, size_t>> comps;  // g, f, g o f
  for (const auto& bl : body) {
    const std::string& key = bl.toks[0].s;
    if (key == "builtin") {
      if (bl.toks.size() != 2) fail_at("builtin needs one name", bl.no, bl.toks[0].col);
      const std::string& b = bl.toks[1].s;
      FinCat c = b == "one_object" ? one_object_site()
                 : b == "arrow"    ? arrow_site()
                 : b == "retract"  ? retract_site()
                                   : (fail_at("unknown builtin site '" + b + "'", bl.no,
                                              bl.toks[1].col),
                                      FinCat());
      sc.sites.emplace(name, std::make_unique<FinCat>(std::move(c)));
      return;
    }
    if (key == "indiscrete") {
      std::vector<std::string> objs;
      for (size_t i = 1; i < bl.toks.size(); ++i) objs.push_back(bl.toks[i].s);
      if (objs.empty()) fail_at("indiscrete needs object names", bl.no, bl.toks[0].col);
      sc.sites.emplace(name, std::make_unique<FinCat>(indiscrete_site(std::move(objs))));
      return;
    }
    if (key == "objects") {
      for (size_t i = 1; i < bl.toks.size(); ++i) objects.push_back(bl.toks[i].s);
      ids.assign(objects.size(), std::nullopt);
    } else if (key == "mor") {
      if (bl.toks.size() != 4) fail_at("mor needs: name dom cod", bl.no, bl.toks[0].col);
      size_t d = index_of(objects, bl.toks[2].s, bl.no, bl.toks[2].col, "object");
      size_t c = index_of(objects, bl.toks[3].s, bl.no, bl.toks[3].col, "object");
      mors.push_back({d, c, bl.toks[1].s});
      mor_names.push_back(bl.toks[1].s);
    } else if (key == "id") {
      if (bl.toks.size() != 3) fail_at("id needs: object morphism", bl.no, bl.toks[0].col);
      size_t o = index_of(objects, bl.toks[1].s, bl.no, bl.toks[1].col, "object");
      ids[o] = index_of(mor_names, bl.toks[2].s, bl.no, bl.toks[2].col, "morphism");
    } else if (key == "comp") {
      if (bl.toks.size() != 4) fail_at("comp needs: g f result", bl.no, bl.toks[0].col);
      comps.emplace_back(index_of(mor_names, bl.toks[1].s, bl.no, bl.toks[1].col, "morphism"),
                         index_of(mor_names, bl.toks[2].s, bl.no, bl.toks[2].col, "morphism"),
                         index_of(mor_names, bl.toks[3].s, bl.no, bl.toks[3].col, "morphism"));
    } else {
      fail_at("unknown site key '" + key + "'", bl.no, bl.toks[0].col);
    }
  }
  std::vector<size_t> identities;
  for (size_t o = 0; o < objects.size(); ++o) {
    if (!ids[o]) fail_at("object '" + objects[o] + "' has no id line", header_line, 0);
    identities.push_back(*ids[o]);
  }
  std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
  // identity compositions are implied
  for (size_t f = 0; f < mors.size(); ++f) {
    table[identities[mors[f].cod]][f] = static_cast<int>(f);
    table[f][identities[mors[f].dom]] = static_cast<int>(f);
  }
  for (auto& [g, f, h] : comps) table[g][f] = static_cast<int>(h);
  sc.sites.emplace(name, std::make_unique<FinCat>(FinCat::make(std::move(objects), std::move(mors),
                                                               std::move(identities),
                                                               std::move(table))));
}

void build_presheaf(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
                    int header_line) {
  const FinCat* site = nullptr;
  std::string site_name;
  std::vector<std::optional<size_t>> card;
  std::vector<std::optional<std::vector<size_t>>> act;
  for (const auto& bl : body) {
    const std::string& key = bl.toks[0].s;
    if (key == "site") {
      if (bl.toks.size() != 2) fail_at("site needs one name", bl.no, bl.toks[0].col);
      auto it = sc.sites.find(bl.toks[1].s);
      if (it == sc.sites.end())
        throw UnresolvedName("unknown site '" + bl.toks[1].s + "' at line " + std::to_string(bl.no));
      site = it->second.get();
      site_name = bl.toks[1].s;
      card.assign(site->objects(), std::nullopt);
      act.assign(site->morphisms(), std::nullopt);
    } else if (key == "card") {
      if (!site) fail_at("card before site", bl.no, bl.toks[0].col);
      if (bl.toks.size() != 3) fail_at("card needs: object n", bl.no, bl.toks[0].col);
      std::vector<std::string> onames;
      for (size_t o = 0; o < site->objects(); ++o) onames.push_back(site->object_name(o));
      size_t o = index_of(onames, bl.toks[1].s, bl.no, bl.toks[1].col, "object");
      card[o] = static_cast<size_t>(parse_count(bl.toks[2].s, bl.no, bl.toks[2].col));
    } else if (key == "map") {
      if (!site) fail_at("map before site", bl.no, bl.toks[0].col);
      if (bl.toks.size() < 2) fail_at("map needs a morphism name", bl.no, bl.toks[0].col);
      std::vector<std::string> mnames;
      for (size_t f = 0; f < site->morphisms(); ++f) mnames.push_back(site->mor(f).name);
      size_t f = index_of(mnames, bl.toks[1].s, bl.no, bl.toks[1].col, "morphism");
      std::vector<size_t> values;
      for (size_t i = 2; i < bl.toks.size(); ++i)
        values.push_back(static_cast<size_t>(parse_count(bl.toks[i].s, bl.no, bl.toks[i].col)));
      act[f] = std::move(values);
    } else {
      fail_at("unknown presheaf key '" + key + "'", bl.no, bl.toks[0].col);
    }
  }
  if (!site) fail_at("presheaf stanza needs a site line", header_line, 0);
  Presheaf x;
  x.site = site;
  for (size_t o = 0; o < site->objects(); ++o) {
    if (!card[o])
      fail_at("missing card for object '" + site->object_name(o) + "'", header_line, 0);
    x.card.push_back(*card[o]);
  }
  x.act.resize(site->morphisms());
  for (size_t f = 0; f < site->morphisms(); ++f) {
    bool is_id = site->id(site->mor(f).dom) == f;
    if (is_id && !act[f]) {
      x.act[f].resize(x.card[site->mor(f).cod]);
      for (size_t i = 0; i < x.act[f].size(); ++i) x.act[f][i] = i;
      continue;
    }
    if (!act[f]) fail_at("missing map for morphism '" + site->mor(f).name + "'", header_line, 0);
    if (act[f]->size() != x.card[site->mor(f).cod])
      fail_at("map for '" + site->mor(f).name + "' must list one value per element of the codomain stage",
              header_line, 0);
    for (size_t v : *act[f])
      if (v >= x.card[site->mor(f).dom])
        fail_at("map value out of range for '" + site->mor(f).name + "'", header_line, 0);
    x.act[f] = *act[f];
  }
  x.validate();
  sc.presheaves.emplace(name, Scenario::NamedPresheaf{site_name, std::move(x)});
}

void build_rig(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
               int header_line) {
  std::vector<std::string> elements;
  std::vector<std::vector<size_t>> add, mul;
  std::optional<size_t> zero, one;
  for (const auto& bl : body) {
    const std::string& key = bl.toks[0].s;
    if (key == "builtin") {
      if (bl.toks.size() != 2) fail_at("builtin needs one name", bl.no, bl.toks[0].col);
      const FiniteRig* k = find_rig(bl.toks[1].s);
      if (!k) fail_at("unknown catalog rig '" + bl.toks[1].s + "'", bl.no, bl.toks[1].col);
      sc.rigs.emplace(name, *k);
      return;
    }
    if (key == "elements") {
      for (size_t i = 1; i < bl.toks.size(); ++i) elements.push_back(bl.toks[i].s);
    } else if (key == "add" || key == "mul") {
      if (bl.toks.size() != elements.size() + 1)
        fail_at(key + " row needs one entry per element", bl.no, bl.toks[0].col);
      std::vector<size_t> row;
      for (size_t i = 1; i < bl.toks.size(); ++i)
        row.push_back(index_of(elements, bl.toks[i].s, bl.no, bl.toks[i].col, "element"));
      (key == "add" ? add : mul).push_back(std::move(row));
    } else if (key == "zero" || key == "one") {
      if (bl.toks.size() != 2) fail_at(key + " needs one element", bl.no, bl.toks[0].col);
      size_t e = index_of(elements, bl.toks[1].s, bl.no, bl.toks[1].col, "element");
      (key == "zero" ? zero : one) = e;
    } else {
      fail_at("unknown rig key '" + key + "'", bl.no, bl.toks[0].col);
    }
  }
  if (elements.empty() || !zero || !one || add.size() != elements.size() ||
      mul.size() != elements.size())
    fail_at("rig stanza needs elements, full add and mul tables, zero and one", header_line, 0);
  sc.rigs.emplace(name, FiniteRig::make(name, elements, add, mul, *zero, *one));
}

const FiniteRig* resolve_rig(const Scenario& sc, const std::string& name) {
  auto it = sc.rigs.find(name);
  if (it != sc.rigs.end()) return &it->second;
  return find_rig(name);
}

void build_subset(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
                  int header_line) {
  const FiniteRig* rig = nullptr;
  std::string rig_name;
  Subset members;
  for (const auto& bl : body) {
    const std::string& key = bl.toks[0].s;
    if (key == "rig") {
      if (bl.toks.size() != 2) fail_at("rig needs one name", bl.no, bl.toks[0].col);
      rig = resolve_rig(sc, bl.toks[1].s);
      if (!rig)
        throw UnresolvedName("unknown rig '" + bl.toks[1].s + "' at line " + std::to_string(bl.no));
      rig_name = bl.toks[1].s;
      members.assign(rig->size(), 0);
    } else if (key == "elements") {
      if (!rig) fail_at("elements before rig", bl.no, bl.toks[0].col);
      for (size_t i = 1; i < bl.toks.size(); ++i)
        members[index_of(rig->names, bl.toks[i].s, bl.no, bl.toks[i].col, "element")] = 1;
    } else {
      fail_at("unknown subset key '" + key + "'", bl.no, bl.toks[0].col);
    }
  }
  if (!rig) fail_at("subset stanza needs a rig line", header_line, 0);
  sc.subsets.emplace(name, Scenario::NamedSubset{rig_name, std::move(members)});
}

void build_interval(Scenario& sc, const std::string& name, const std::vector<BodyLine>& body,
                    int /*header_line*/) {
  std::vector<QInterval> parts;
  for (const auto& bl : body) {
    if (bl.toks[0].s != "part")
      fail_at("unknown interval key '" + bl.toks[0].s + "'", bl.no, bl.toks[0].col);
    if (bl.toks.size() < 2) fail_at("part needs an interval", bl.no, bl.toks[0].col + 4);
    parts.push_back(
        parse_interval_literal(bl.raw.substr(bl.toks[1].col), bl.no, bl.toks[1].col));
  }
  sc.intervals.emplace(name, QIntervalSet::of(std::move(parts)));
}

// ---------------------------------------------------------------------------
// check validation (name resolution and arity at parse time)

const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds = {
      "weil",       "prolong",    "euler",      "kl",         "euler_composition",
      "idempotents", "site",      "triangles",  "hyperconnected", "components",
      "hom_count",  "oracle_exp", "prop2",      "lemma_am",   "interval_a",
      "interval_m"};
  return kinds;
}

void require_args(const Check& c, size_t n) {
  if (c.args.size() != n)
    fail_at("check '" + c.kind + "' takes " + std::to_string(n) + " argument(s)", c.line, 0);
}

void require_algebra(const Scenario& sc, const Check& c, const std::string& name) {
  if (!sc.algebras.count(name))
    throw UnresolvedName("unknown algebra '" + name + "' at line " + std::to_string(c.line));
}

void require_site(const Scenario& sc, const Check& c, const std::string& name) {
  if (!sc.sites.count(name))
    throw UnresolvedName("unknown site '" + name + "' at line " + std::to_string(c.line));
}

void require_presheaf(const Scenario& sc, const Check& c, const std::string& name) {
  if (!sc.presheaves.count(name))
    throw UnresolvedName("unknown presheaf '" + name + "' at line " + std::to_string(c.line));
}

// subset reference: named subset, {a,b} literal, all, empty
void require_subset_ref(const Scenario& sc, const Check& c, const std::string& rig_name,
                        const std::string& ref) {
  if (rig_name == "Qline") {
    if (ref == "all" || ref == "empty" || sc.intervals.count(ref)) return;
    throw UnresolvedName("unknown interval '" + ref + "' at line " + std::to_string(c.line));
  }
  const FiniteRig* k = resolve_rig(sc, rig_name);
  if (!k) throw UnresolvedName("unknown rig '" + rig_name + "' at line " + std::to_string(c.line));
  if (ref == "all" || ref == "empty") return;
  if (!ref.empty() && ref.front() == '{') {
    if (ref.back() != '}') fail_at("unterminated subset literal", c.line, 0);
    std::string inner = ref.substr(1, ref.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      index_of(k->names, item, c.line, 0, "element of " + rig_name);
    }
    return;
  }
  auto it = sc.subsets.find(ref);
  if (it == sc.subsets.end())
    throw UnresolvedName("unknown subset '" + ref + "' at line " + std::to_string(c.line));
  const FiniteRig* sk = resolve_rig(sc, it->second.rig);
  if (!sk || sk->names != k->names)
    fail_at("subset '" + ref + "' belongs to rig '" + it->second.rig + "'", c.line, 0);
}

void validate_check(const Scenario& sc, const Check& c) {
  const auto& kinds = check_kinds();
  if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
    fail_at("unknown check kind '" + c.kind + "'", c.line, 0);
  if (c.kind == "weil" || c.kind == "euler" || c.kind == "idempotents") {
    require_args(c, 1);
    require_algebra(sc, c, c.args[0]);
  } else if (c.kind == "prolong") {
    require_args(c, 2);
    require_algebra(sc, c, c.args[0]);
    require_algebra(sc, c, c.args[1]);
  } else if (c.kind == "kl") {
    require_args(c, 1);
    if (c.args[0] != "line") {
      require_algebra(sc, c, c.args[0]);
      if (sc.algebras.at(c.args[0]).gens().size() != 1)
        fail_at("kl needs a one-generator algebra or 'line'", c.line, 0);
    }
  } else if (c.kind == "euler_composition") {
    require_args(c, 0);
  } else if (c.kind == "site") {
    require_args(c, 1);
    require_site(sc, c, c.args[0]);
    if (c.expect && *c.expect != "ok" && *c.expect != "fail")
      fail_at("site expects 'ok' or 'fail'", c.line, 0);
  } else if (c.kind == "triangles" || c.kind == "hyperconnected" || c.kind == "components") {
    require_args(c, 1);
    require_presheaf(sc, c, c.args[0]);
  } else if (c.kind == "hom_count") {
    require_args(c, 2);
    require_presheaf(sc, c, c.args[0]);
    require_presheaf(sc, c, c.args[1]);
    if (sc.presheaves.at(c.args[0]).site != sc.presheaves.at(c.args[1]).site)
      fail_at("hom_count needs presheaves on the same site", c.line, 0);
  } else if (c.kind == "oracle_exp") {
    require_args(c, 2);
    require_site(sc, c, c.args[0]);
    parse_count(c.args[1], c.line, 0);
  } else if (c.kind == "prop2" || c.kind == "lemma_am") {
    require_args(c, 2);
    require_subset_ref(sc, c, c.args[0], c.args[1]);
  } else if (c.kind == "interval_a" || c.kind == "interval_m") {
    require_args(c, 1);
    if (c.args[0] != "all" && c.args[0] != "empty" && !sc.intervals.count(c.args[0]))
      throw UnresolvedName("unknown interval '" + c.args[0] + "' at line " +
                           std::to_string(c.line));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// parse_scenario

Scenario parse_scenario(const std::string& text, MonomialOrder order) {
  Scenario sc;
  sc.source = text;

  struct Stanza {
    std::string kind, name;
    int line;
    std::vector<BodyLine> body;
  };
  std::vector<Stanza> stanzas;
  Stanza* open = nullptr;

  std::istringstream in(text);
  std::string raw_line;
  int lineno = 0;
  while (std::getline(in, raw_line)) {
    ++lineno;
    std::string raw = strip_comment(raw_line);
    std::vector<Tok> toks = lex_line(raw);
    if (toks.empty()) continue;
    if (toks[0].s.front() == '[') {
      // header: [kind name]
      std::string joined = trim(raw);
      if (joined.back() != ']') fail_at("stanza header must end with ']'", lineno, raw.size());
      std::vector<Tok> inner = lex_line(joined.substr(1, joined.size() - 2));
      if (inner.size() != 2) fail_at("stanza header must be [kind name]", lineno, toks[0].col);
      stanzas.push_back({inner[0].s, inner[1].s, lineno, {}});
      open = &stanzas.back();
      continue;
    }
    if (toks[0].s == "check") {
      open = nullptr;
      if (toks.size() < 2) fail_at("check needs a kind", lineno, toks[0].col + 5);
      Check c;
      c.kind = toks[1].s;
      c.line = lineno;
      c.text = trim(raw);
      size_t i = 2;
      for (; i < toks.size() && toks[i].s != "expect"; ++i) c.args.push_back(toks[i].s);
      if (i < toks.size()) {  // expect consumes the rest of the line verbatim
        size_t after = toks[i].col + toks[i].s.size();
        std::string value = trim(raw.substr(after));
        if (value.empty()) fail_at("expect needs a value", lineno, after);
        c.expect = value;
      }
      sc.checks.push_back(std::move(c));
      continue;
    }
    if (!open) fail_at("expected a stanza header or a check line", lineno, toks[0].col);
    open->body.push_back({lineno, raw, std::move(toks)});
  }

  for (const auto& st : stanzas) {
    auto dup = [&](bool exists) {
      if (exists) fail_at("duplicate " + st.kind + " '" + st.name + "'", st.line, 0);
    };
    if (st.kind == "algebra") {
      dup(sc.algebras.count(st.name));
      build_algebra(sc, st.name, st.body, st.line, order);
    } else if (st.kind == "site") {
      dup(sc.sites.count(st.name));
      build_site(sc, st.name, st.body, st.line);
    } else if (st.kind == "presheaf") {
      dup(sc.presheaves.count(st.name));
      build_presheaf(sc, st.name, st.body, st.line);
    } else if (st.kind == "rig") {
      dup(sc.rigs.count(st.name));
      build_rig(sc, st.name, st.body, st.line);
    } else if (st.kind == "subset") {
      dup(sc.subsets.count(st.name));
      build_subset(sc, st.name, st.body, st.line);
    } else if (st.kind == "interval") {
      dup(sc.intervals.count(st.name));
      build_interval(sc, st.name, st.body, st.line);
    } else {
      fail_at("unknown stanza kind '" + st.kind + "'", st.line, 0);
    }
  }

  for (const auto& c : sc.checks) validate_check(sc, c);
  return sc;
}

// ---------------------------------------------------------------------------
// check execution

namespace {

std::string subset_str(const FiniteRig& k, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i]) {
      if (!first) out += ", ";
      out += k.names[i];
      first = false;
    }
  return out + "}";
}

Subset resolve_finite_subset(const Scenario& sc, const FiniteRig& k, const std::string& ref) {
  if (ref == "all") return Subset(k.size(), 1);
  if (ref == "empty") return Subset(k.size(), 0);
  if (!ref.empty() && ref.front() == '{') {
    Subset s(k.size(), 0);
    std::stringstream ss(ref.substr(1, ref.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      s[index_of(k.names, item, 0, 0, "element")] = 1;
    }
    return s;
  }
  return sc.subsets.at(ref).members;
}

QIntervalSet resolve_interval(const Scenario& sc, const std::string& ref) {
  if (ref == "all") return QIntervalSet::all();
  if (ref == "empty") return QIntervalSet::empty();
  return sc.intervals.at(ref);
}

RingData ring_for_kl(const FpAlgebra& a) {
  RingData r;
  r.algebra = a;
  r.square = tensor_coproduct(a, a);
  r.comult = hom_check(a, r.square.algebra, std::vector<std::string>{"y z"});
  r.coadd_images = {r.square.algebra.parse("y + z")};
  FpAlgebra k = FpAlgebra::base();
  r.zero = hom_check(a, k, {Polynomial::constant({}, 0)});
  try {
    r.one = hom_check(a, k, {Polynomial::constant({}, 1)});
  } catch (const NotWellDefined&) {
    r.one = r.zero;  // the unit point collapses onto zero, as on Spec k[x]/(x^2)
  }
  return r;
}

// seeded sampler for the exponential hom-count oracle: products and coproducts
// of representables and small constants are valid presheaves on any site
Presheaf sample_presheaf(const FinCat& site, std::mt19937_64& rng) {
  auto base = [&]() -> Presheaf {
    if (rng() % 2 == 0) return constant_presheaf(site, 1 + rng() % 3);
    return representable(site, rng() % site.objects());
  };
  switch (rng() % 4) {
    case 0:
      return base();
    case 1:
      return product(base(), base()).obj;
    case 2:
      return coproduct(base(), base()).obj;
    default:
      return terminal_presheaf(site);
  }
}

void run_one(const Scenario& sc, const Check& c, const RunConfig& cfg, size_t index,
             CheckResult& out) {
  out.check = c.text;
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    if (c.kind == "weil") {
      const FpAlgebra& a = sc.algebras.at(c.args[0]);
      pass = is_weil(a);
      out.notes.push_back("presentation: " + a.presentation());
    } else if (c.kind == "prolong") {
      Prolongation p = weil_prolongation(sc.algebras.at(c.args[0]), sc.algebras.at(c.args[1]));
      std::string pres = p.algebra.presentation();
      out.notes.push_back("prolongation: Spec(" + pres + ")");
      pass = !c.expect || pres == *c.expect;
    } else if (c.kind == "euler") {
      EulerMonoid m = monoid_mult(pointed(sc.algebras.at(c.args[0])));
      std::string pres = m.reals.algebra.presentation();
      out.notes.push_back("R = Spec(" + pres + ")");
      const auto& gens = m.reals.algebra.gens();
      for (size_t i = 0; i < gens.size(); ++i)
        out.notes.push_back("mult: " + gens[i] + " ↦ " + m.comult.images()[i].str());
      bool laws = euler_monoid_laws(m);
      out.notes.push_back(laws ? "monoid laws: ok" : "monoid laws: violated");
      pass = laws && (!c.expect || pres == *c.expect);
    } else if (c.kind == "kl") {
      RingData r = c.args[0] == "line" ? line_ring() : ring_for_kl(sc.algebras.at(c.args[0]));
      KlVerdict v = check_kl(r);
      out.notes.push_back("certificate: " + v.certificate);
      bool expected = !c.expect || *c.expect == "true";
      pass = v.holds == expected;
    } else if (c.kind == "euler_composition") {
      EulerCompositionReport r = check_euler_composition();
      auto flag = [&](const char* n, bool b) {
        out.notes.push_back(std::string(n) + ": " + (b ? "ok" : "violated"));
      };
      flag("composition law", r.law);
      flag("pair constraints", r.constraints);
      flag("identity", r.identity);
      flag("zero law", r.zero_law);
      flag("presentation", r.presentation);
      pass = r.ok();
    } else if (c.kind == "idempotents") {
      size_t n = idempotents(sc.algebras.at(c.args[0])).size();
      out.notes.push_back("idempotents: " + std::to_string(n));
      pass = !c.expect || std::to_string(n) == *c.expect;
    } else if (c.kind == "site") {
      SiteVerdict v = check_precohesive_site(*sc.sites.at(c.args[0]));
      if (!v.ok) out.notes.push_back("reason: " + v.reason);
      bool expected_ok = !c.expect || *c.expect == "ok";
      pass = v.ok == expected_ok;
    } else if (c.kind == "triangles") {
      const auto& np = sc.presheaves.at(c.args[0]);
      AdjointString a = adjoint_string(*sc.sites.at(np.site));
      pass = true;
      for (size_t s = 0; s <= 3; ++s) pass = pass && triangle_identities(a, np.obj, s);
      out.notes.push_back("triangle identities checked for set sizes 0..3");
    } else if (c.kind == "hyperconnected") {
      const auto& np = sc.presheaves.at(c.args[0]);
      AdjointString a = adjoint_string(*sc.sites.at(np.site));
      pass = hyperconnected_check(a, np.obj);
    } else if (c.kind == "components") {
      size_t n = components(sc.presheaves.at(c.args[0]).obj).count;
      out.notes.push_back("components: " + std::to_string(n));
      pass = !c.expect || std::to_string(n) == *c.expect;
    } else if (c.kind == "hom_count") {
      uint64_t n = nat_trans_count(sc.presheaves.at(c.args[0]).obj,
                                   sc.presheaves.at(c.args[1]).obj, cfg.max_enumeration);
      out.notes.push_back("hom count: " + std::to_string(n));
      pass = !c.expect || std::to_string(n) == *c.expect;
    } else if (c.kind == "oracle_exp") {
      const FinCat& site = *sc.sites.at(c.args[0]);
      long n = std::stol(c.args[1]);
      std::mt19937_64 rng(cfg.seed * 1000003ull + index);
      pass = true;
      for (long i = 0; i < n && pass; ++i) {
        Presheaf z = sample_presheaf(site, rng);
        Presheaf t = sample_presheaf(site, rng);
        Presheaf x = sample_presheaf(site, rng);
        Exponential e = exponential(x, t, cfg.max_enumeration);
        uint64_t lhs = nat_trans_count(z, e.obj, cfg.max_enumeration);
        uint64_t rhs = nat_trans_count(product(z, t).obj, x, cfg.max_enumeration);
        if (lhs != rhs) {
          pass = false;
          out.notes.push_back("instance " + std::to_string(i) + ": |Hom(Z, X^T)| = " +
                              std::to_string(lhs) + " but |Hom(Z x T, X)| = " +
                              std::to_string(rhs));
        }
      }
      out.notes.push_back("instances: " + c.args[1]);
    } else if (c.kind == "prop2" || c.kind == "lemma_am") {
      if (c.args[0] == "Qline") {
        QIntervalSet p = resolve_interval(sc, c.args[1]);
        if (c.kind == "prop2") {
          IntervalProp2Report r = verify_prop2_interval(p);
          out.notes.push_back("A = " + r.a.str());
          out.notes.push_back("M = " + r.m.str());
          if (!r.witness.empty()) out.notes.push_back("witness: " + r.witness);
          pass = r.ok();
        } else {
          IntervalLemmaAMReport r = verify_lemma_am_interval(p);
          out.notes.push_back(std::string("clause 1: ") + (r.clause1 ? "ok" : "violated"));
          out.notes.push_back(std::string("clause 2: ") + (r.clause2 ? "ok" : "violated"));
          pass = r.ok();
        }
      } else {
        const FiniteRig& k = *resolve_rig(sc, c.args[0]);
        Subset p = resolve_finite_subset(sc, k, c.args[1]);
        if (c.kind == "prop2") {
          Prop2Report r = verify_prop2(k, p);
          out.notes.push_back("A = " + subset_str(k, r.a));
          out.notes.push_back("M = " + subset_str(k, r.m));
          if (!r.witness.empty()) out.notes.push_back("witness: " + r.witness);
          pass = r.ok();
        } else {
          LemmaAMReport r = verify_lemma_am(k, p, k.is_ring());
          out.notes.push_back(std::string("clause 1: ") +
                              (r.clause1_checked ? (r.clause1 ? "ok" : "violated")
                                                 : "not a ring, skipped"));
          out.notes.push_back(std::string("clause 2: ") + (r.clause2 ? "ok" : "violated"));
          if (!r.witness.empty()) out.notes.push_back("witness: " + r.witness);
          pass = r.ok();
        }
      }
    } else if (c.kind == "interval_a" || c.kind == "interval_m") {
      QIntervalSet p = resolve_interval(sc, c.args[0]);
      QIntervalSet a = a_of_interval(p);
      QIntervalSet v = c.kind == "interval_a" ? a : m_of_interval(a);
      std::string s = v.str();
      out.notes.push_back((c.kind == "interval_a" ? "A = " : "M = ") + s);
      pass = !c.expect || s == *c.expect;
    }
    out.verdict = pass ? "pass" : "fail";
  } catch (const std::exception& e) {
    out.verdict = "error";
    out.notes.push_back(std::string("error: ") + e.what());
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
}

unsigned worker_count(const RunConfig& cfg, size_t jobs) {
  unsigned w = cfg.workers;
  if (w == 0) {
    w = std::thread::hardware_concurrency();
    if (w == 0) w = 1;
  }
  if (const char* env = std::getenv("COHESION_LAB_WORKERS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) w = std::min<unsigned>(w, static_cast<unsigned>(cap));
  }
  return std::min<unsigned>(w, jobs ? static_cast<unsigned>(jobs) : 1u);
}

}  // namespace

int Report::exit_code() const {
  if (errored) return 2;
  if (failed) return 1;
  return 0;
}

Report run(const Scenario& sc, const RunConfig& cfg) {
  Report rep;
  rep.checks.resize(sc.checks.size());
  if (cfg.fail_fast) {
    size_t i = 0;
    for (; i < sc.checks.size(); ++i) {
      run_one(sc, sc.checks[i], cfg, i, rep.checks[i]);
      if (rep.checks[i].verdict != "pass") {
        ++i;
        break;
      }
    }
    for (; i < sc.checks.size(); ++i) {
      rep.checks[i].check = sc.checks[i].text;
      rep.checks[i].verdict = "skipped";
    }
  } else {
    unsigned workers = worker_count(cfg, sc.checks.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= sc.checks.size()) return;
        run_one(sc, sc.checks[i], cfg, i, rep.checks[i]);
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
  }
  for (const auto& r : rep.checks) {
    if (r.verdict == "pass") ++rep.passed;
    else if (r.verdict == "fail") ++rep.failed;
    else if (r.verdict == "error") ++rep.errored;
    else ++rep.skipped;
  }
  return rep;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << "[" << c.verdict << "] " << c.check;
    if (c.verdict != "skipped") {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", c.ms);
      out << "  (" << buf << " ms)";
    }
    out << "\n";
    for (const auto& n : c.notes) out << "       " << n << "\n";
  }
  out << r.checks.size() << " checks: " << r.passed << " passed, " << r.failed << " failed, "
      << r.errored << " errored, " << r.skipped << " skipped\n";
  return out.str();
}

std::string report_json(const Report& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["config"] = {{"seed", cfg.seed},
                 {"max_enumeration", cfg.max_enumeration},
                 {"idempotent_degree_bound", cfg.idempotent_degree_bound}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"check", c.check}, {"verdict", c.verdict}, {"notes", c.notes}});
  j["summary"] = {{"pass", r.passed},
                  {"fail", r.failed},
                  {"error", r.errored},
                  {"skipped", r.skipped}};
  return j.dump(2) + "\n";
}

std::string catalog_text() {
  std::ostringstream out;
  out << "rigs:\n";
  for (const auto& k : rig_catalog()) out << "  " << k.name << "  (" << k.size() << " elements)\n";
  out << "  Qline  (rational line; subsets are interval unions)\n";
  out << "sites:\n";
  out << "  one_object  retract  arrow  (builtin names for [site] stanzas)\n";
  out << "  indiscrete <objects...>\n";
  out << "checks:\n  ";
  const auto& kinds = check_kinds();
  for (size_t i = 0; i < kinds.size(); ++i) out << kinds[i] << (i + 1 < kinds.size() ? " " : "\n");
  out << "fixtures:\n";
  out << "  scenarios/paper_example_affine.scn\n";
  out << "  scenarios/johnstone_gate.scn\n";
  return out.str();
}

}  // namespace clab
