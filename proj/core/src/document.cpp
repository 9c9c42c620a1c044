#include "rba/document.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "rba/axioms.hpp"
#include "rba/errors.hpp"

namespace rba {

namespace {

using OJson = nlohmann::ordered_json;

int line_of(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] void bad(const std::string& where, const std::string& reason) {
  fail(Errc::parse_error, where + ": " + reason);
}

std::string type_name(const OJson& j) { return j.type_name(); }

const OJson& want(const OJson& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) bad(where, "missing key '" + key + "'");
  return j.at(key);
}

std::string want_string(const OJson& j, const std::string& key, const std::string& where) {
  const OJson& v = want(j, key, where);
  if (!v.is_string()) bad(where, "'" + key + "' must be a string, got " + type_name(v));
  return v.get<std::string>();
}

void check_keys(const OJson& j, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) bad(where, "unknown key '" + k + "'");
}

std::vector<std::string> string_list(const OJson& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of strings, got " + type_name(v));
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(where, "expected a string entry, got " + type_name(e));
    out.push_back(e.get<std::string>());
  }
  return out;
}

Rat want_rat(const OJson& v, const std::string& where) {
  if (v.is_number_integer()) return rat(v.get<long>());
  if (!v.is_string()) bad(where, "expected a rational as a string, got " + type_name(v));
  auto r = rat_parse(v.get<std::string>());
  if (!r) bad(where, "malformed rational '" + v.get<std::string>() + "'");
  return *r;
}

std::uint32_t want_nat(const OJson& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint32_t>();
  if (v.is_number_integer() && v.get<long>() >= 0) return static_cast<std::uint32_t>(v.get<long>());
  bad(where, "expected a natural number, got " + v.dump());
}

AlgebraDecl parse_algebra(const OJson& j, const std::string& where) {
  check_keys(j, {"kind", "name", "model", "atoms", "adjacency", "bounded"}, where);
  AlgebraDecl d;
  d.name = want_string(j, "name", where);
  if (j.contains("model")) d.model = want_string(j, "model", where);
  if (d.model == "rational-interval" || d.model == "cofinite-nat") {
    if (j.contains("atoms") || j.contains("adjacency") || j.contains("bounded"))
      bad(where, "model '" + d.model + "' takes no atom structure");
    return d;
  }
  if (d.model != "finite") bad(where, "unknown model '" + d.model + "'");
  d.atoms = string_list(want(j, "atoms", where), where + ".atoms");
  const OJson& adj = want(j, "adjacency", where);
  if (!adj.is_array() || adj.size() != d.atoms.size())
    bad(where, "adjacency must be a " + std::to_string(d.atoms.size()) + "-row matrix");
  std::size_t n = d.atoms.size();
  d.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (!adj[i].is_array() || adj[i].size() != n)
      bad(where, "adjacency row " + std::to_string(i) + " must have " + std::to_string(n) +
                     " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const OJson& cell = adj[i][k];
      if (cell.is_boolean())
        d.adjacency[i][k] = cell.get<bool>();
      else if (cell.is_number_integer() && (cell.get<int>() == 0 || cell.get<int>() == 1))
        d.adjacency[i][k] = cell.get<int>() == 1;
      else
        bad(where, "adjacency[" + std::to_string(i) + "][" + std::to_string(k) +
                       "] must be 0 or 1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!d.adjacency[i][i])
      bad(where, "adjacency[" + std::to_string(i) + "][" + std::to_string(i) +
                     "] must be 1: an atom touches itself");
    for (std::size_t k = 0; k < n; ++k)
      if (d.adjacency[i][k] != d.adjacency[k][i])
        bad(where, "adjacency[" + std::to_string(i) + "][" + std::to_string(k) +
                       "] differs from adjacency[" + std::to_string(k) + "][" +
                       std::to_string(i) + "]");
  }
  if (j.contains("bounded")) {
    d.bounded = string_list(j.at("bounded"), where + ".bounded");
    for (const auto& b : d.bounded)
      if (std::find(d.atoms.begin(), d.atoms.end(), b) == d.atoms.end())
        fail(Errc::reference_error, where + ": bounded atom '" + b + "' is not an atom");
  } else {
    d.bounded = d.atoms;
  }
  return d;
}

SpaceDecl parse_space(const OJson& j, const std::string& where) {
  check_keys(j, {"kind", "name", "points", "opens"}, where);
  SpaceDecl d;
  d.name = want_string(j, "name", where);
  d.points = string_list(want(j, "points", where), where + ".points");
  const OJson& opens = want(j, "opens", where);
  if (!opens.is_array()) bad(where, "'opens' must be an array of point lists");
  for (const auto& o : opens) d.opens.push_back(string_list(o, where + ".opens"));
  return d;
}

MapDecl parse_map(const OJson& j, const std::string& where) {
  check_keys(j,
             {"kind", "name", "carrier", "stock", "breakpoints", "slope-left", "slope-right",
              "exceptions", "tail-shift", "tail-constant"},
             where);
  MapDecl d;
  d.name = want_string(j, "name", where);
  d.carrier = want_string(j, "carrier", where);
  if (d.carrier != "line" && d.carrier != "nat")
    bad(where, "carrier must be 'line' or 'nat', got '" + d.carrier + "'");
  if (j.contains("stock")) {
    d.stock = want_string(j, "stock", where);
    if (j.size() > 4) bad(where, "a stock map takes no further description");
    return d;
  }
  if (d.carrier == "line") {
    const OJson& bps = want(j, "breakpoints", where);
    if (!bps.is_array() || bps.empty()) bad(where, "'breakpoints' must be a nonempty array");
    for (const auto& bp : bps) {
      if (!bp.is_array() || bp.size() != 2)
        bad(where, "each breakpoint is a [x, value] pair");
      d.breakpoints.emplace_back(want_rat(bp[0], where + ".breakpoints"),
                                 want_rat(bp[1], where + ".breakpoints"));
    }
    d.slope_left = want_rat(want(j, "slope-left", where), where + ".slope-left");
    d.slope_right = want_rat(want(j, "slope-right", where), where + ".slope-right");
  } else {
    if (j.contains("exceptions")) {
      const OJson& ex = j.at("exceptions");
      if (!ex.is_array()) bad(where, "'exceptions' must list the values on an initial segment");
      for (const auto& e : ex) d.exceptions.push_back(want_nat(e, where + ".exceptions"));
    }
    bool has_shift = j.contains("tail-shift");
    bool has_const = j.contains("tail-constant");
    if (has_shift == has_const)
      bad(where, "exactly one of 'tail-shift' and 'tail-constant' is required");
    if (has_shift) {
      const OJson& s = j.at("tail-shift");
      if (!s.is_number_integer()) bad(where, "'tail-shift' must be an integer");
      d.tail_shift = s.get<std::int32_t>();
    } else {
      d.tail_is_constant = true;
      d.tail_constant = want_nat(j.at("tail-constant"), where);
    }
  }
  return d;
}

MorphismDecl parse_morphism(const OJson& j, const std::string& where) {
  check_keys(j, {"kind", "name", "lane", "from", "to", "table", "map", "points"}, where);
  MorphismDecl d;
  d.name = want_string(j, "name", where);
  d.lane = want_string(j, "lane", where);
  if (d.lane == "table") {
    d.from = want_string(j, "from", where);
    d.to = want_string(j, "to", where);
    d.table = string_list(want(j, "table", where), where + ".table");
  } else if (d.lane == "map") {
    d.map = want_string(j, "map", where);
  } else if (d.lane == "space-map") {
    d.from = want_string(j, "from", where);
    d.to = want_string(j, "to", where);
    const OJson& pts = want(j, "points", where);
    if (!pts.is_object()) bad(where, "'points' must map domain points to codomain points");
    for (const auto& [k, v] : pts.items()) {
      if (!v.is_string()) bad(where, "point image for '" + k + "' must be a string");
      d.points.emplace_back(k, v.get<std::string>());
    }
  } else {
    bad(where, "lane must be 'table', 'map', or 'space-map', got '" + d.lane + "'");
  }
  return d;
}

struct CmdSpec {
  std::set<std::string> scalars;
  std::set<std::string> required;
  const char* list_key = nullptr;
};

const std::map<std::string, CmdSpec>& command_table() {
  static const std::map<std::string, CmdSpec> t = {
      {"check-axioms", {{"target", "contact", "seed"}, {"target"}, "suites"}},
      {"clusters", {{"target", "mode"}, {"target"}, nullptr}},
      {"dualize", {{"target"}, {"target"}, nullptr}},
      {"roundtrip", {{"target"}, {"target"}, nullptr}},
      {"ideal-frame", {{"target"}, {"target"}, nullptr}},
      {"prime-bijection", {{"target"}, {"target"}, nullptr}},
      {"check-morphism", {{"target", "seed"}, {"target"}, "families"}},
      {"compose", {{"outer", "inner", "as", "mode"}, {"outer", "inner", "as"}, nullptr}},
      {"dual-map", {{"target", "at"}, {"target"}, nullptr}},
      {"functor-laws",
       {{"lane", "seed", "triples", "points", "outer", "inner", "regions", "depth"},
        {"lane"},
        nullptr}},
      {"naturality", {{"lane", "target", "points", "seed"}, {"lane"}, nullptr}},
      {"classify", {{"target"}, {"target"}, nullptr}},
      {"emit-dot", {{"target", "graph"}, {"target", "graph"}, nullptr}},
  };
  return t;
}

bool numeric_key(const std::string& k) {
  return k == "seed" || k == "triples" || k == "points" || k == "regions" || k == "depth";
}

Command parse_command(const OJson& j, const std::string& where) {
  if (!j.is_object()) bad(where, "a command must be an object");
  Command c;
  c.cmd = want_string(j, "cmd", where);
  auto it = command_table().find(c.cmd);
  if (it == command_table().end()) bad(where, "unknown command '" + c.cmd + "'");
  const CmdSpec& spec = it->second;
  for (const auto& [k, v] : j.items()) {
    if (k == "cmd") continue;
    if (spec.list_key && k == spec.list_key) {
      c.list_key = k;
      c.list = string_list(v, where + "." + k);
      continue;
    }
    if (!spec.scalars.count(k)) bad(where, "unknown key '" + k + "' for " + c.cmd);
    if (v.is_string())
      c.args[k] = v.get<std::string>();
    else if (v.is_number_integer())
      c.args[k] = std::to_string(v.get<long long>());
    else
      bad(where, "'" + k + "' must be a string or integer");
  }
  for (const auto& r : spec.required)
    if (!c.args.count(r)) bad(where, c.cmd + " requires '" + r + "'");
  return c;
}

void validate_references(const WorkbenchDocument& doc) {
  std::set<std::string> names;
  auto declare = [&](const std::string& n, const std::string& what) {
    if (n.empty()) fail(Errc::parse_error, what + " with an empty name");
    if (!names.insert(n).second)
      fail(Errc::parse_error, "duplicate declaration name '" + n + "'");
  };
  std::set<std::string> algebras, spaces, maps, morphisms;
  for (const auto& a : doc.algebras) {
    declare(a.name, "algebra");
    algebras.insert(a.name);
  }
  for (const auto& s : doc.spaces) {
    declare(s.name, "space");
    spaces.insert(s.name);
  }
  for (const auto& m : doc.maps) {
    declare(m.name, "map");
    maps.insert(m.name);
  }
  auto need = [&](const std::set<std::string>& pool, const std::string& n,
                  const std::string& what) {
    if (!pool.count(n)) fail(Errc::reference_error, "unknown " + what + " '" + n + "'");
  };
  for (const auto& m : doc.morphisms) {
    declare(m.name, "morphism");
    morphisms.insert(m.name);
    if (m.lane == "table") {
      need(algebras, m.from, "algebra");
      need(algebras, m.to, "algebra");
    } else if (m.lane == "map") {
      need(maps, m.map, "map");
    } else {
      need(spaces, m.from, "space");
      need(spaces, m.to, "space");
    }
  }
  for (std::size_t i = 0; i < doc.commands.size(); ++i) {
    const Command& c = doc.commands[i];
    std::string where = "commands[" + std::to_string(i) + "]";
    auto arg = [&](const char* k) { return c.args.count(k) ? c.args.at(k) : std::string(); };
    if (c.cmd == "check-axioms" || c.cmd == "clusters" || c.cmd == "dualize" ||
        c.cmd == "roundtrip" || c.cmd == "ideal-frame" || c.cmd == "prime-bijection" ||
        c.cmd == "emit-dot")
      need(algebras, arg("target"), "algebra");
    if (c.cmd == "check-morphism" || c.cmd == "classify" || c.cmd == "dual-map")
      need(morphisms, arg("target"), "morphism");
    if (c.cmd == "compose") {
      need(morphisms, arg("outer"), "morphism");
      need(morphisms, arg("inner"), "morphism");
      const std::string& as = c.args.at("as");
      if (names.count(as)) fail(Errc::parse_error, where + ": name '" + as + "' already taken");
      names.insert(as);
      morphisms.insert(as);
    }
    if (c.cmd == "check-axioms")
      for (const auto& s : c.list)
        if (!suite_parse(s)) fail(Errc::parse_error, where + ": unknown suite '" + s + "'");
    if (c.cmd == "check-morphism")
      for (const auto& f : c.list) family_parse(f);
    if (c.cmd == "functor-laws") {
      std::string lane = arg("lane");
      if (lane != "finite" && lane != "spaces" && lane != "dyadic")
        fail(Errc::parse_error, where + ": lane must be finite, spaces, or dyadic");
      if (lane == "dyadic") {
        need(maps, arg("outer"), "map");
        need(maps, arg("inner"), "map");
      }
    }
    if (c.cmd == "naturality") {
      std::string lane = arg("lane");
      if (lane != "finite" && lane != "spaces" && lane != "sampled")
        fail(Errc::parse_error, where + ": lane must be finite, spaces, or sampled");
      if (lane == "finite") need(morphisms, arg("target"), "morphism");
      if (lane == "sampled") need(maps, arg("target"), "map");
    }
    if (c.cmd == "emit-dot") {
      std::string g = arg("graph");
      if (g != "contact-graph" && g != "dual-space")
        fail(Errc::parse_error, where + ": graph must be contact-graph or dual-space");
    }
  }
}

}  // namespace

WorkbenchDocument parse_document(const std::string& text) {
  OJson j;
  try {
    j = OJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error,
         "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) fail(Errc::parse_error, "the document must be a JSON object");
  check_keys(j, {"workbench", "declarations", "commands"}, "document");
  if (!j.contains("workbench") || !j.at("workbench").is_number_integer() ||
      j.at("workbench").get<int>() != 1)
    fail(Errc::parse_error, "the document must declare \"workbench\": 1");
  WorkbenchDocument doc;
  if (j.contains("declarations")) {
    const OJson& decls = j.at("declarations");
    if (!decls.is_array()) fail(Errc::parse_error, "'declarations' must be an array");
    for (std::size_t i = 0; i < decls.size(); ++i) {
      std::string where = "declarations[" + std::to_string(i) + "]";
      const OJson& d = decls[i];
      if (!d.is_object()) bad(where, "a declaration must be an object");
      std::string kind = want_string(d, "kind", where);
      if (kind == "algebra")
        doc.algebras.push_back(parse_algebra(d, where));
      else if (kind == "space")
        doc.spaces.push_back(parse_space(d, where));
      else if (kind == "map")
        doc.maps.push_back(parse_map(d, where));
      else if (kind == "morphism")
        doc.morphisms.push_back(parse_morphism(d, where));
      else
        bad(where, "unknown declaration kind '" + kind + "'");
    }
  }
  if (j.contains("commands")) {
    const OJson& cmds = j.at("commands");
    if (!cmds.is_array()) fail(Errc::parse_error, "'commands' must be an array");
    for (std::size_t i = 0; i < cmds.size(); ++i)
      doc.commands.push_back(parse_command(cmds[i], "commands[" + std::to_string(i) + "]"));
  }
  validate_references(doc);
  try {
    resolve(doc);
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error || e.code() == Errc::reference_error) throw;
    fail(Errc::parse_error, e.what());
  }
  return doc;
}

std::string print_document(const WorkbenchDocument& doc) {
  OJson j;
  j["workbench"] = 1;
  j["declarations"] = OJson::array();
  for (const auto& a : doc.algebras) {
    OJson d;
    d["kind"] = "algebra";
    d["name"] = a.name;
    d["model"] = a.model;
    if (a.model == "finite") {
      d["atoms"] = a.atoms;
      OJson adj = OJson::array();
      for (const auto& row : a.adjacency) {
        OJson r = OJson::array();
        for (bool cell : row) r.push_back(cell ? 1 : 0);
        adj.push_back(std::move(r));
      }
      d["adjacency"] = std::move(adj);
      d["bounded"] = a.bounded;
    }
    j["declarations"].push_back(std::move(d));
  }
  for (const auto& s : doc.spaces) {
    OJson d;
    d["kind"] = "space";
    d["name"] = s.name;
    d["points"] = s.points;
    d["opens"] = s.opens;
    j["declarations"].push_back(std::move(d));
  }
  for (const auto& m : doc.maps) {
    OJson d;
    d["kind"] = "map";
    d["name"] = m.name;
    d["carrier"] = m.carrier;
    if (!m.stock.empty()) {
      d["stock"] = m.stock;
    } else if (m.carrier == "line") {
      OJson bps = OJson::array();
      for (const auto& [x, v] : m.breakpoints)
        bps.push_back(OJson::array({rat_str(x), rat_str(v)}));
      d["breakpoints"] = std::move(bps);
      d["slope-left"] = rat_str(m.slope_left);
      d["slope-right"] = rat_str(m.slope_right);
    } else {
      d["exceptions"] = m.exceptions;
      if (m.tail_is_constant)
        d["tail-constant"] = m.tail_constant;
      else
        d["tail-shift"] = m.tail_shift;
    }
    j["declarations"].push_back(std::move(d));
  }
  for (const auto& m : doc.morphisms) {
    OJson d;
    d["kind"] = "morphism";
    d["name"] = m.name;
    d["lane"] = m.lane;
    if (m.lane == "table") {
      d["from"] = m.from;
      d["to"] = m.to;
      d["table"] = m.table;
    } else if (m.lane == "map") {
      d["map"] = m.map;
    } else {
      d["from"] = m.from;
      d["to"] = m.to;
      OJson pts;
      for (const auto& [k, v] : m.points) pts[k] = v;
      d["points"] = std::move(pts);
    }
    j["declarations"].push_back(std::move(d));
  }
  j["commands"] = OJson::array();
  for (const auto& c : doc.commands) {
    OJson d;
    d["cmd"] = c.cmd;
    for (const auto& [k, v] : c.args) {
      if (numeric_key(k))
        d[k] = std::stoll(v);
      else
        d[k] = v;
    }
    if (!c.list_key.empty()) d[c.list_key] = c.list;
    j["commands"].push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

Registry resolve(const WorkbenchDocument& doc) {
  Registry reg;
  for (const auto& a : doc.algebras) {
    reg.algebra_order.push_back(a.name);
    if (a.model == "rational-interval") {
      reg.models.emplace(a.name, CarrierKind::rational_interval);
    } else if (a.model == "cofinite-nat") {
      reg.models.emplace(a.name, CarrierKind::cofinite_nat);
    } else {
      reg.finite.emplace(a.name, make_finite(a.atoms, a.adjacency, a.bounded));
    }
  }
  for (const auto& s : doc.spaces) {
    FiniteSpace sp = validate_topology(s.points, s.opens);
    if (sp.size() <= 5) reg.rc.emplace(s.name, rc_algebra(sp));
    reg.spaces.emplace(s.name, std::move(sp));
  }
  for (const auto& m : doc.maps) {
    CarrierKind kind =
        m.carrier == "line" ? CarrierKind::rational_interval : CarrierKind::cofinite_nat;
    if (!m.stock.empty()) {
      reg.maps.emplace(m.name, stock_map(m.stock, kind));
      continue;
    }
    if (m.carrier == "line") {
      PlMap pl = make_pl_map(m.breakpoints, m.slope_left, m.slope_right);
      reg.maps.emplace(m.name, described_pl(m.name, std::move(pl)));
    } else {
      NatMap nm = m.tail_is_constant ? make_nat_const(m.exceptions, m.tail_constant)
                                     : make_nat_map(m.exceptions, m.tail_shift);
      reg.maps.emplace(m.name, described_nat(m.name, std::move(nm)));
    }
  }
  for (const auto& m : doc.morphisms) {
    if (m.lane == "table") {
      auto fi = reg.finite.find(m.from);
      auto ti = reg.finite.find(m.to);
      if (fi == reg.finite.end() || ti == reg.finite.end())
        fail(Errc::reference_error, "morphism '" + m.name + "' needs finite algebras");
      const auto& dom = fi->second.algebra;
      const auto& cod = ti->second.algebra;
      if (static_cast<int>(m.table.size()) != dom->size())
        fail(Errc::parse_error, "morphism '" + m.name + "': table has " +
                                    std::to_string(m.table.size()) + " entries, the domain has " +
                                    std::to_string(dom->size()) + " elements");
      std::vector<std::uint8_t> t;
      for (const auto& label : m.table) t.push_back(element_by_label(*cod, label));
      reg.morphisms.emplace(m.name, finite_morphism(dom, cod, std::move(t), m.name));
    } else if (m.lane == "map") {
      Morphism phi = morphism_from_map(reg.maps.at(m.map));
      phi.name = m.name;
      reg.morphisms.emplace(m.name, std::move(phi));
    } else {
      auto fi = reg.rc.find(m.from);
      auto ti = reg.rc.find(m.to);
      if (fi == reg.rc.end() || ti == reg.rc.end())
        fail(Errc::precondition_violated,
             "morphism '" + m.name + "' needs spaces small enough for a regular closed algebra");
      const RcAlgebra& X = fi->second;
      const RcAlgebra& Y = ti->second;
      const FiniteSpace& xs = reg.spaces.at(m.from);
      const FiniteSpace& ys = reg.spaces.at(m.to);
      std::vector<int> pm(xs.size(), -1);
      for (const auto& [from, to] : m.points) {
        auto xi = std::find(xs.points.begin(), xs.points.end(), from);
        auto yi = std::find(ys.points.begin(), ys.points.end(), to);
        if (xi == xs.points.end())
          fail(Errc::reference_error, "unknown point '" + from + "' in space '" + m.from + "'");
        if (yi == ys.points.end())
          fail(Errc::reference_error, "unknown point '" + to + "' in space '" + m.to + "'");
        pm[xi - xs.points.begin()] = static_cast<int>(yi - ys.points.begin());
      }
      for (std::size_t i = 0; i < pm.size(); ++i)
        if (pm[i] < 0)
          fail(Errc::parse_error,
               "morphism '" + m.name + "': point '" + xs.points[i] + "' has no image");
      reg.morphisms.emplace(m.name, morphism_from_space_map(X, Y, pm, m.name));
    }
  }
  return reg;
}

std::uint8_t element_by_label(const FiniteAlgebra& alg, const std::string& label) {
  for (std::size_t i = 0; i < alg.labels.size(); ++i)
    if (alg.labels[i] == label) return static_cast<std::uint8_t>(i);
  fail(Errc::reference_error, "no element labeled '" + label + "'");
}

}  // namespace rba
