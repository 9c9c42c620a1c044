#include "rba/run.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>

#include "json.hpp"
#include "rba/axioms.hpp"
#include "rba/delta_ideal.hpp"
#include "rba/errors.hpp"
#include "rba/region_model.hpp"

namespace rba {

namespace {

using OJson = nlohmann::ordered_json;

enum class CmdStatus { holds, fails, inconclusive, error };

const char* cmd_status_name(CmdStatus s) {
  switch (s) {
    case CmdStatus::holds: return "holds";
    case CmdStatus::fails: return "fails";
    case CmdStatus::inconclusive: return "inconclusive";
    case CmdStatus::error: return "error";
  }
  return "error";
}

CmdStatus worse(CmdStatus a, CmdStatus b) { return a > b ? a : b; }

CmdStatus from_flag(bool ok) { return ok ? CmdStatus::holds : CmdStatus::fails; }

struct Ctx {
  Registry& reg;
  const RunOptions& opts;
};

std::string arg_of(const Command& c, const char* key, const std::string& fallback = "") {
  auto it = c.args.find(key);
  return it == c.args.end() ? fallback : it->second;
}

std::uint64_t num_arg(const Command& c, const char* key, std::uint64_t fallback) {
  auto it = c.args.find(key);
  if (it == c.args.end()) return fallback;
  return std::stoull(it->second);
}

const FiniteContactStructure& finite_target(Ctx& ctx, const std::string& name,
                                            const char* verb) {
  auto it = ctx.reg.finite.find(name);
  if (it == ctx.reg.finite.end())
    fail(Errc::not_finite, std::string(verb) + " needs a finite algebra, and '" + name +
                               "' names an infinite model");
  return it->second;
}

RegionAlgebra model_of(Ctx& ctx, const std::string& name) {
  CarrierKind kind = ctx.reg.models.at(name);
  RegionAlgebra m = kind == CarrierKind::rational_interval ? interval_model() : nat_model();
  m.name = name;
  return m;
}

ContactChoice contact_arg(const Command& c) {
  std::string v = arg_of(c, "contact", "rho");
  if (v == "rho") return ContactChoice::rho;
  if (v == "alexandroff") return ContactChoice::alexandroff;
  fail(Errc::parse_error, "contact must be 'rho' or 'alexandroff', got '" + v + "'");
}

OJson axiom_verdicts(const AxiomReport& r, const RegionAlgebra& alg) {
  OJson out = OJson::array();
  for (const AxiomVerdict& v : r.verdicts) {
    OJson o;
    o["axiom"] = v.axiom;
    o["status"] = ax_status_name(v.status);
    if (!v.witness.empty()) {
      OJson w = OJson::array();
      for (const Element& e : v.witness) w.push_back(alg.print(e));
      o["witness"] = std::move(w);
    }
    if (!v.note.empty()) o["note"] = v.note;
    out.push_back(std::move(o));
  }
  return out;
}

CmdStatus report_status(const AxiomReport& r) {
  if (r.any_fails()) return CmdStatus::fails;
  if (r.any_inconclusive()) return CmdStatus::inconclusive;
  return CmdStatus::holds;
}

CmdStatus law_json(OJson& out, const char* key, const LawReport& r) {
  OJson o;
  o["ok"] = r.ok;
  o["cases"] = r.cases;
  if (!r.failures.empty()) o["failures"] = r.failures;
  out[key] = std::move(o);
  return from_flag(r.ok);
}

std::vector<std::string> member_labels(const FiniteAlgebra& alg, std::uint32_t members) {
  std::vector<std::string> out;
  for (int e = 0; e < alg.size(); ++e)
    if (members & (1u << e)) out.push_back(alg.labels[e]);
  return out;
}

CmdStatus run_check_axioms(Ctx& ctx, const Command& c, OJson& out) {
  std::string target = c.args.at("target");
  std::vector<Suite> suites;
  if (c.list.empty())
    suites = {Suite::BOOL, Suite::CA, Suite::LL, Suite::NCA, Suite::LCA, Suite::CON};
  else
    for (const auto& s : c.list) suites.push_back(*suite_parse(s));

  bool finite = ctx.reg.finite.count(target) != 0;
  RegionAlgebra alg;
  QuantifierStrategy strat;
  if (finite) {
    alg = finite_contract(ctx.reg.finite.at(target).algebra, contact_arg(c), target);
    strat = QuantifierStrategy::exhaustive();
  } else {
    alg = model_of(ctx, target);
    if (contact_arg(c) == ContactChoice::alexandroff) alg = make_alexandroff_nca(alg);
    strat = QuantifierStrategy::sampled(num_arg(c, "seed", ctx.opts.seed), ctx.opts.samples,
                                        ctx.opts.depth);
  }
  out["contact"] = arg_of(c, "contact", "rho");
  out["mode"] = finite ? "exhaustive" : "sampled";
  if (!finite) {
    out["seed"] = strat.seed;
    out["samples"] = strat.sample_count;
    out["depth"] = strat.witness_depth;
  }
  CmdStatus st = CmdStatus::holds;
  OJson rows = OJson::array();
  for (Suite s : suites) {
    AxiomReport r = check_axioms(alg, s, strat);
    OJson row;
    row["suite"] = suite_name(s);
    CmdStatus ss = report_status(r);
    row["status"] = cmd_status_name(ss);
    row["verdicts"] = axiom_verdicts(r, alg);
    rows.push_back(std::move(row));
    st = worse(st, ss);
  }
  out["suites"] = std::move(rows);
  return st;
}

CmdStatus run_clusters(Ctx& ctx, const Command& c, OJson& out) {
  const auto& st = finite_target(ctx, c.args.at("target"), "clusters");
  std::string mode = arg_of(c, "mode", "brute");
  if (mode != "brute" && mode != "ultrafilter")
    fail(Errc::parse_error, "mode must be 'brute' or 'ultrafilter', got '" + mode + "'");
  ClusterSet cs = enumerate_clusters(
      *st.algebra, mode == "brute" ? ClusterMode::brute : ClusterMode::ultrafilter,
      ContactChoice::alexandroff);
  out["mode"] = mode;
  out["count"] = cs.clusters.size();
  OJson rows = OJson::array();
  for (std::size_t i = 0; i < cs.clusters.size(); ++i) {
    OJson row;
    row["members"] = member_labels(*st.algebra, cs.clusters[i]);
    row["bounded"] = static_cast<bool>(cs.bounded[i]);
    rows.push_back(std::move(row));
  }
  out["clusters"] = std::move(rows);
  if (!cs.warnings.empty()) out["warnings"] = cs.warnings;
  return CmdStatus::holds;
}

CmdStatus run_dualize(Ctx& ctx, const Command& c, OJson& out) {
  const auto& st = finite_target(ctx, c.args.at("target"), "dualize");
  DualSpace d = dualize(st.algebra);
  out["points"] = d.clusters.clusters.size();
  out["carrier-points"] = d.carrier.space.size();
  OJson rows = OJson::array();
  for (std::size_t i = 0; i < d.clusters.clusters.size(); ++i) {
    OJson row;
    row["cluster"] = member_labels(*d.algebra, d.clusters.clusters[i]);
    row["bounded"] = (d.bounded_points & (1u << i)) != 0;
    rows.push_back(std::move(row));
  }
  out["clusters"] = std::move(rows);
  out["lca-guarantees"] = d.lca_guarantees;
  if (!d.notes.empty()) out["notes"] = d.notes;
  RealizationReport rr = verify_realization(d);
  OJson real;
  real["contact-realized"] = rr.contact_realized;
  real["open-base"] = rr.open_base;
  real["complement-interior"] = rr.complement_interior;
  real["join-recovered"] = rr.join_recovered;
  if (!rr.failures.empty()) real["failures"] = rr.failures;
  out["realization"] = std::move(real);
  return from_flag(rr.all());
}

CmdStatus run_roundtrip(Ctx& ctx, const Command& c, OJson& out) {
  const auto& st = finite_target(ctx, c.args.at("target"), "roundtrip");
  DualSpace d = dualize(st.algebra);
  RoundTrip rt = roundtrip_algebra(d);
  out["boolean-iso"] = rt.boolean_iso;
  out["contact-iso"] = rt.contact_iso;
  out["bounded-iso"] = rt.bounded_iso;
  out["ok"] = rt.ok;
  if (!rt.declined.empty()) out["declined"] = rt.declined;
  return from_flag(rt.ok);
}

CmdStatus run_ideal_frame(Ctx& ctx, const Command& c, OJson& out) {
  const auto& st = finite_target(ctx, c.args.at("target"), "ideal-frame");
  const FiniteAlgebra& B = *st.algebra;
  DualSpace d = dualize(st.algebra);
  DeltaIdealSet all = all_delta_ideals(B);
  const FiniteSpace& carrier = d.carrier.space;

  std::vector<std::uint32_t> images;
  images.reserve(all.ideals.size());
  for (std::uint32_t I : all.ideals) images.push_back(iota(d, I));

  bool order_iso = true;
  std::string order_note;
  for (std::size_t i = 0; i < all.ideals.size() && order_iso; ++i)
    for (std::size_t j = 0; j < all.ideals.size(); ++j) {
      bool sub = (all.ideals[i] & all.ideals[j]) == all.ideals[i];
      bool img_sub = (images[i] & images[j]) == images[i];
      if (sub != img_sub) {
        order_iso = false;
        order_note = "order mismatch between ideals " + std::to_string(i) + " and " +
                     std::to_string(j);
        break;
      }
    }
  std::set<std::uint32_t> image_set(images.begin(), images.end());
  std::set<std::uint32_t> open_set(carrier.opens.begin(), carrier.opens.end());
  bool onto = image_set == open_set && image_set.size() == images.size();
  if (order_iso && !onto) order_note = "iota is not a bijection onto the carrier opens";

  bool ops_ok = true;
  std::string ops_note;
  for (std::size_t i = 0; i < all.ideals.size() && ops_ok; ++i)
    for (std::size_t j = i; j < all.ideals.size(); ++j) {
      std::uint32_t m = iota(d, frame_meet(B, all.ideals[i], all.ideals[j]));
      std::uint32_t o = iota(d, frame_join(B, all.ideals[i], all.ideals[j]));
      if (m != (images[i] & images[j]) || o != (images[i] | images[j])) {
        ops_ok = false;
        ops_note = "frame operation image mismatch at ideals " + std::to_string(i) + ", " +
                   std::to_string(j);
        break;
      }
    }

  std::set<std::uint32_t> principal_images;
  for (int a = 0; a < B.size(); ++a)
    if (B.bounded(a))
      principal_images.insert(iota(d, principal_delta_ideal(B, static_cast<std::uint8_t>(a)).members));
  std::set<std::uint32_t> regular_opens;
  for (std::uint32_t u : carrier.opens)
    if (carrier.interior(carrier.closure(u)) == u) regular_opens.insert(u);
  bool principal_ok = principal_images == regular_opens;

  out["ideals"] = all.ideals.size();
  out["carrier-opens"] = carrier.opens.size();
  out["order-iso"] = order_iso && onto;
  if (!order_note.empty()) out["order-note"] = order_note;
  out["frame-ops"] = ops_ok;
  if (!ops_note.empty()) out["frame-ops-note"] = ops_note;
  out["principal-regular-open"] = principal_ok;
  out["regular-opens"] = regular_opens.size();
  return from_flag(order_iso && onto && ops_ok && principal_ok);
}

CmdStatus run_prime_bijection(Ctx& ctx, const Command& c, OJson& out) {
  const auto& st = finite_target(ctx, c.args.at("target"), "prime-bijection");
  DualSpace d = dualize(st.algebra);
  PrimeBijection pb = prime_cluster_bijection(d);
  out["pairs"] = pb.pairs.size();
  OJson rows = OJson::array();
  for (const auto& [sigma, prime] : pb.pairs) {
    OJson row;
    row["cluster"] = member_labels(*st.algebra, sigma);
    row["prime"] = member_labels(*st.algebra, prime);
    rows.push_back(std::move(row));
  }
  out["matching"] = std::move(rows);
  out["ok"] = pb.ok;
  if (!pb.failures.empty()) out["failures"] = pb.failures;
  return from_flag(pb.ok);
}

std::vector<Family> default_families(const Morphism& phi) {
  std::vector<Family> fams;
  for (int f = 0; f <= static_cast<int>(Family::CBH); ++f) {
    Family fam = static_cast<Family>(f);
    if (phi.map_induced && fam == Family::L2) continue;
    fams.push_back(fam);
  }
  return fams;
}

CmdStatus run_check_morphism(Ctx& ctx, const Command& c, OJson& out) {
  const Morphism& phi = ctx.reg.morphisms.at(c.args.at("target"));
  std::vector<Family> fams;
  if (c.list.empty())
    fams = default_families(phi);
  else
    for (const auto& f : c.list) fams.push_back(family_parse(f));
  QuantifierStrategy strat =
      phi.map_induced ? QuantifierStrategy::sampled(num_arg(c, "seed", ctx.opts.seed),
                                                    ctx.opts.samples, ctx.opts.depth)
                      : QuantifierStrategy::exhaustive();
  MorphismReport r = check_morphism(phi, fams, strat);
  out["mode"] = r.mode == QuantifierStrategy::Mode::exhaustive ? "exhaustive" : "sampled";
  if (r.mode == QuantifierStrategy::Mode::sampled) out["seed"] = r.seed;
  CmdStatus st = CmdStatus::holds;
  OJson rows = OJson::array();
  for (const FamilyVerdict& v : r.verdicts) {
    OJson row;
    row["family"] = family_name(v.family);
    row["status"] = ax_status_name(v.status);
    if (!v.witness.empty()) row["witness"] = v.witness;
    if (!v.note.empty()) row["note"] = v.note;
    rows.push_back(std::move(row));
    if (v.status == AxStatus::fails) st = worse(st, CmdStatus::fails);
    if (v.status == AxStatus::inconclusive) st = worse(st, CmdStatus::inconclusive);
  }
  out["families"] = std::move(rows);
  return st;
}

CmdStatus run_compose(Ctx& ctx, const Command& c, OJson& out) {
  const Morphism& outer = ctx.reg.morphisms.at(c.args.at("outer"));
  const Morphism& inner = ctx.reg.morphisms.at(c.args.at("inner"));
  std::string mode = arg_of(c, "mode", "diamond");
  if (mode != "diamond" && mode != "plain")
    fail(Errc::parse_error, "mode must be 'diamond' or 'plain', got '" + mode + "'");
  Morphism m = mode == "diamond" ? diamond(outer, inner) : compose_plain(outer, inner);
  std::string as = c.args.at("as");
  m.name = as;
  out["as"] = as;
  out["mode"] = mode;
  if (m.map_induced) {
    out["lane"] = "map";
    out["map"] = map_str(m.map);
  } else {
    out["lane"] = "table";
    OJson t = OJson::array();
    for (std::uint8_t e : m.table) t.push_back(m.cod->labels[e]);
    out["table"] = std::move(t);
  }
  ctx.reg.morphisms.insert_or_assign(as, std::move(m));
  return CmdStatus::holds;
}

ClusterPoint parse_point(const Morphism& phi, const std::string& text) {
  if (text == "inf" || text == "infinity") return ClusterPoint::inf();
  if (phi.model.kind == CarrierKind::cofinite_nat) {
    for (char ch : text)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(Errc::parse_error, "point on the naturals must be a natural number, got '" +
                                    text + "'");
    return ClusterPoint::at_nat(static_cast<std::uint32_t>(std::stoul(text)));
  }
  auto r = rat_parse(text);
  if (!r) fail(Errc::parse_error, "malformed point '" + text + "'");
  return ClusterPoint::at(*r);
}

CmdStatus run_dual_map(Ctx& ctx, const Command& c, OJson& out) {
  const Morphism& phi = ctx.reg.morphisms.at(c.args.at("target"));
  if (c.args.count("at")) {
    if (!phi.map_induced)
      fail(Errc::precondition_violated,
           "pointwise dual-map evidence applies to map-induced morphisms only");
    ClusterPoint p = parse_point(phi, c.args.at("at"));
    QuantifierStrategy strat =
        QuantifierStrategy::sampled(ctx.opts.seed, ctx.opts.samples, ctx.opts.depth);
    DualPointEvidence ev = dual_map_point(phi, p, strat);
    out["at"] = ev.source.str();
    out["image"] = ev.image.str();
    out["checks"] = ev.checks;
    out["consistent"] = ev.consistent;
    return from_flag(ev.consistent);
  }
  DualMapResult r = dual_map(phi);
  out["domain-carrier"] = r.dom_dual.carrier.space.size();
  out["codomain-carrier"] = r.cod_dual.carrier.space.size();
  OJson rows = OJson::array();
  bool total = true;
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    OJson row;
    row["point"] = i;
    row["maps-to"] = r.table[i];
    if (r.table[i] < 0) total = false;
    row["trace"] = member_labels(*phi.dom, r.S[i]);
    rows.push_back(std::move(row));
  }
  out["points"] = std::move(rows);
  out["continuous"] = r.continuous;
  out["commutes"] = r.commutes;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return from_flag(total && r.continuous && r.commutes);
}

CmdStatus run_functor_laws(Ctx& ctx, const Command& c, OJson& out) {
  std::string lane = c.args.at("lane");
  out["lane"] = lane;
  if (lane == "finite") {
    std::uint64_t seed = num_arg(c, "seed", ctx.opts.seed);
    auto triples = static_cast<std::uint32_t>(num_arg(c, "triples", 25));
    out["seed"] = seed;
    out["triples"] = triples;
    return law_json(out, "laws", functor_laws_finite(seed, triples));
  }
  if (lane == "spaces") {
    int points = static_cast<int>(num_arg(c, "points", 3));
    out["points"] = points;
    return law_json(out, "laws", functor_laws_spaces(points));
  }
  const DescribedMap& g = ctx.reg.maps.at(c.args.at("outer"));
  const DescribedMap& f = ctx.reg.maps.at(c.args.at("inner"));
  auto regions = static_cast<std::uint32_t>(num_arg(c, "regions", 100));
  auto depth = static_cast<std::uint32_t>(num_arg(c, "depth", ctx.opts.depth));
  std::uint64_t seed = num_arg(c, "seed", ctx.opts.seed);
  out["outer"] = c.args.at("outer");
  out["inner"] = c.args.at("inner");
  out["regions"] = regions;
  out["depth"] = depth;
  out["seed"] = seed;
  return law_json(out, "laws", functor_laws_dyadic(g, f, regions, depth, seed));
}

CmdStatus run_naturality(Ctx& ctx, const Command& c, OJson& out) {
  std::string lane = c.args.at("lane");
  out["lane"] = lane;
  if (lane == "finite") {
    const Morphism& phi = ctx.reg.morphisms.at(c.args.at("target"));
    return law_json(out, "laws", naturality_finite(phi));
  }
  if (lane == "spaces") {
    int points = static_cast<int>(num_arg(c, "points", 3));
    out["points"] = points;
    return law_json(out, "laws", naturality_spaces(points));
  }
  const DescribedMap& f = ctx.reg.maps.at(c.args.at("target"));
  auto points = static_cast<std::uint32_t>(num_arg(c, "points", 200));
  std::uint64_t seed = num_arg(c, "seed", ctx.opts.seed);
  out["points"] = points;
  out["seed"] = seed;
  return law_json(out, "laws", naturality_sampled(f, points, seed));
}

CmdStatus run_classify(Ctx& ctx, const Command& c, OJson& out) {
  const Morphism& phi = ctx.reg.morphisms.at(c.args.at("target"));
  QuantifierStrategy strat =
      phi.map_induced
          ? QuantifierStrategy::sampled(ctx.opts.seed, ctx.opts.samples, ctx.opts.depth)
          : QuantifierStrategy::exhaustive();
  Classification cl = classify(phi, strat);
  out["dlc"] = cl.is_dlc;
  out["pal"] = cl.is_pal;
  out["dval"] = cl.is_dval;
  out["skeletal"] = cl.is_skeletal;
  out["proper"] = cl.proper;
  if (!cl.notes.empty()) out["notes"] = cl.notes;
  return CmdStatus::holds;
}

CmdStatus run_emit_dot(Ctx& ctx, const Command& c, OJson& out, std::string& dot_sink) {
  const auto& st = finite_target(ctx, c.args.at("target"), "emit-dot");
  std::string graph = c.args.at("graph");
  std::string dot;
  if (graph == "contact-graph")
    dot = contact_graph_dot(st);
  else
    dot = dual_space_dot(dualize(st.algebra));
  out["graph"] = graph;
  out["dot"] = dot;
  dot_sink = dot;
  return CmdStatus::holds;
}

std::string quote_id(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string contact_graph_dot(const FiniteContactStructure& s) {
  std::string out = "graph contact {\n";
  std::size_t n = s.atom_names.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool bound = std::find(s.bound_atoms.begin(), s.bound_atoms.end(), s.atom_names[i]) !=
                 s.bound_atoms.end();
    out += "  " + quote_id(s.atom_names[i]);
    if (bound) out += " [peripheries=2]";
    out += ";\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s.adjacency[i][j])
        out += "  " + quote_id(s.atom_names[i]) + " -- " + quote_id(s.atom_names[j]) + ";\n";
  out += "}\n";
  return out;
}

std::string dual_space_dot(const DualSpace& d) {
  std::string out = "graph dual {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < d.clusters.clusters.size(); ++i) {
    std::uint32_t trace = 0;
    for (int e = 0; e < d.algebra->size(); ++e)
      if ((d.clusters.clusters[i] & (1u << e)) && d.algebra->bounded(e)) trace |= 1u << e;
    std::string label =
        trace == 0 ? "∞" : element_set_str(*d.algebra, trace);
    out += "  s" + std::to_string(i) + " [label=" + quote_id(label);
    if (!(d.bounded_points & (1u << i))) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

RunOutcome run_document(const WorkbenchDocument& doc, const RunOptions& opts) {
  Registry reg = resolve(doc);
  Ctx ctx{reg, opts};
  RunOutcome outcome;

  OJson report;
  report["schema"] = "workbench-report/1";
  report["seed"] = opts.seed;
  report["samples"] = opts.samples;
  report["depth"] = opts.depth;
  OJson commands = OJson::array();

  for (const Command& c : doc.commands) {
    OJson row;
    row["cmd"] = c.cmd;
    for (const auto& [k, v] : c.args)
      if (k == "target" || k == "outer" || k == "inner") row[k] = v;
    auto started = std::chrono::steady_clock::now();
    CmdStatus st;
    try {
      if (c.cmd == "check-axioms") st = run_check_axioms(ctx, c, row);
      else if (c.cmd == "clusters") st = run_clusters(ctx, c, row);
      else if (c.cmd == "dualize") st = run_dualize(ctx, c, row);
      else if (c.cmd == "roundtrip") st = run_roundtrip(ctx, c, row);
      else if (c.cmd == "ideal-frame") st = run_ideal_frame(ctx, c, row);
      else if (c.cmd == "prime-bijection") st = run_prime_bijection(ctx, c, row);
      else if (c.cmd == "check-morphism") st = run_check_morphism(ctx, c, row);
      else if (c.cmd == "compose") st = run_compose(ctx, c, row);
      else if (c.cmd == "dual-map") st = run_dual_map(ctx, c, row);
      else if (c.cmd == "functor-laws") st = run_functor_laws(ctx, c, row);
      else if (c.cmd == "naturality") st = run_naturality(ctx, c, row);
      else if (c.cmd == "classify") st = run_classify(ctx, c, row);
      else if (c.cmd == "emit-dot") st = run_emit_dot(ctx, c, row, outcome.dot);
      else fail(Errc::parse_error, "unknown command '" + c.cmd + "'");
    } catch (const Error& e) {
      st = CmdStatus::error;
      OJson err;
      err["code"] = errc_name(e.code());
      err["message"] = e.what();
      row["error"] = std::move(err);
    }
    if (opts.timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      row["ms"] = ms;
    }
    row["status"] = cmd_status_name(st);
    commands.push_back(std::move(row));
    switch (st) {
      case CmdStatus::holds: ++outcome.holds; break;
      case CmdStatus::fails: ++outcome.fails; break;
      case CmdStatus::inconclusive: ++outcome.inconclusive; break;
      case CmdStatus::error: ++outcome.errors; break;
    }
  }

  report["commands"] = std::move(commands);
  OJson summary;
  summary["holds"] = outcome.holds;
  summary["fails"] = outcome.fails;
  summary["inconclusive"] = outcome.inconclusive;
  summary["errors"] = outcome.errors;
  report["summary"] = std::move(summary);
  if (outcome.fails > 0 || outcome.errors > 0)
    outcome.exit_code = 1;
  else if (outcome.inconclusive > 0)
    outcome.exit_code = 2;
  else
    outcome.exit_code = 0;
  report["status"] = outcome.exit_code == 0   ? "holds"
                     : outcome.exit_code == 1 ? "fails"
                                              : "inconclusive";
  report["exit"] = outcome.exit_code;
  outcome.report = report.dump(2) + "\n";
  return outcome;
}

}  // namespace rba
