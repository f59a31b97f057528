// Batch front end: routes verbs to the library, prints JSON / TSV / DOT.
// Output for a fixed command line is byte-identical between runs.

#include "hypermat/acceptance.hpp"
#include "hypermat/dmod.hpp"
#include "hypermat/homology.hpp"
#include "hypermat/orbits.hpp"
#include "hypermat/quiver.hpp"
#include "hypermat/schur.hpp"
#include "hypermat/weight_expr.hpp"
#include "hypermat/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <limits>

using json = nlohmann::ordered_json;
using namespace hypermat;

namespace {

json weight_json(const Weight& w) { return json(w.entries()); }

json triple_json(const TripleWeight& t) {
  return json{{"a", t.a.entries()}, {"b", t.b.entries()}, {"c", t.c.entries()}};
}

json int_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

json verdict_json(const Verdict& v) {
  json j;
  j["known"] = v.known;
  if (v.known) j["value"] = int_json(v.value);
  j["provenance"] = v.provenance;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int parse_n_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(text);
  } else {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  }
  if (lo < 3 || hi < lo) throw CLI::ValidationError("--n", "expected n >= 3 (or a range lo..hi)");
  return 0;
}

int cmd_orbits(int n, const std::string& format) {
  if (format == "dot") {
    std::cout << hasse_dot(n);
    return 0;
  }
  json out;
  out["n"] = n;
  out["provenance"] = "orbit-catalog";
  json list = json::array();
  for (const OrbitEntry& e : orbit_catalog(n)) {
    json o;
    o["label"] = e.label;
    o["dim"] = e.dim;
    o["representative"] = e.representative;
    o["closure_covers"] = e.closure_covers;
    if (e.subspace_id) o["subspace"] = {(*e.subspace_id)[0], (*e.subspace_id)[1], (*e.subspace_id)[2]};
    if (e.determinantal_id) o["determinantal"] = *e.determinantal_id;
    o["component_group"] = e.z2_component_group ? "Z/2" : "trivial";
    o["dual_orbit"] = *e.dual_orbit;
    o["conormal_cycle"] = e.conormal_cycle;
    o["hypersurface"] = e.hypersurface;
    o["dense"] = e.dense;
    if (e.rank_conditions_cut_union_only) o["rank_conditions_cut_union_only"] = true;
    list.push_back(std::move(o));
  }
  out["orbits"] = std::move(list);
  emit(out);
  return 0;
}

int cmd_quiver(int n, const std::string& format) {
  const Quiver q = build_quiver(n);
  if (format == "dot") {
    std::cout << quiver_dot(q);
    return 0;
  }
  json out;
  out["n"] = n;
  out["provenance"] = "quiver-presentation";
  out["vertices"] = q.vertices;
  json arrows = json::array();
  for (const Arrow& a : q.arrows) arrows.push_back({{"name", a.name}, {"from", a.src}, {"to", a.dst}});
  out["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const Relation& r : q.relations) {
    json terms = json::array();
    for (const Relation::Term& t : r.terms) {
      json term;
      term["coeff"] = t.coeff;
      json path = json::array();
      for (int a : t.path) path.push_back(q.arrows[a].name);
      term["path"] = std::move(path);
      terms.push_back(std::move(term));
    }
    rels.push_back(std::move(terms));
  }
  out["relations"] = std::move(rels);
  emit(out);
  return 0;
}

int cmd_paths(int n, const std::string& from, const std::string& to, int cap) {
  const Quiver q = build_quiver(n);
  const PathSpace ps = path_space(q, from, to, cap);
  json out;
  out["n"] = n;
  out["from"] = from;
  out["to"] = to;
  out["dim"] = ps.dim();
  json basis = json::array();
  for (const auto& p : ps.basis) basis.push_back(q.path_str(p));
  out["basis"] = std::move(basis);
  out["provenance"] = "path-algebra-reduction";
  emit(out);
  return 0;
}

int cmd_plethysm(const std::string& gamma_text, const std::string& alpha_text,
                 const std::string& beta_text) {
  const Weight gamma = parse_weight_expr(gamma_text, 0);
  json out;
  out["gamma"] = weight_json(gamma);
  if (!alpha_text.empty() || !beta_text.empty()) {
    if (alpha_text.empty() || beta_text.empty())
      throw CLI::ValidationError("--alpha/--beta", "give both factors or neither");
    const Weight alpha = parse_weight_expr(alpha_text, 0);
    const Weight beta = parse_weight_expr(beta_text, 0);
    out["alpha"] = weight_json(alpha);
    out["beta"] = weight_json(beta);
    out["multiplicity"] = int_json(plethysm_pair_multiplicity(gamma, alpha, beta));
    out["provenance"] = "plethysm-oracle(targeted)";
  } else {
    const DecompResult dec = plethysm_2x2(gamma);
    json table = json::object();
    for (const auto& [ab, m] : dec.mult) table[ab.first.str() + "x" + ab.second.str()] = int_json(m);
    out["decomposition"] = std::move(table);
    out["dimension"] = int_json(dec.dimension_lhs());
    out["provenance"] = "plethysm-oracle(character-peel)";
  }
  emit(out);
  return 0;
}

int cmd_symmult(int n, const std::string& weight_text) {
  const TripleWeight t = parse_triple_expr(weight_text, n);
  json out;
  out["n"] = n;
  out["weight"] = triple_json(t);
  out["multiplicity"] = int_json(sym_multiplicity(t));
  out["provenance"] = "cauchy+plethysm-oracle";
  emit(out);
  return 0;
}

int cmd_locmult(const std::string& weight_text) {
  const TripleWeight t = parse_triple_expr(weight_text, 3);
  json out;
  out["n"] = 3;
  out["weight"] = triple_json(t);
  out["multiplicity"] = int_json(localization_multiplicity(t));
  out["provenance"] = "semiinvariant-localization(stabilized)";
  emit(out);
  return 0;
}

int cmd_euler(const std::string& config, int n, const std::string& weight_text) {
  const TripleWeight t = parse_triple_expr(weight_text, n);
  json out;
  out["config"] = config;
  out["n"] = n;
  out["weight"] = triple_json(t);
  out["value"] = int_json(euler_limit(parse_euler_config(config), t, n));
  out["provenance"] = "euler-limit(" + config + ",stabilized)";
  emit(out);
  return 0;
}

int cmd_character(const std::string& simple_text, int n, int box_lo, int box_hi) {
  const SimpleLabel s = parse_simple(simple_text);
  if (box_hi < box_lo || box_hi - box_lo > 24)
    throw CLI::ValidationError("--box", "expected a window of at most 25 values per entry");
  json out;
  out["simple"] = to_string(s);
  out["n"] = n;
  out["box"] = {box_lo, box_hi};
  json entries = json::array();
  json undetermined = json::array();
  // scan dominant triples inside the box with matching degrees, pruning on
  // the gamma-level window of the simple
  std::vector<Weight> rank2;
  for (int a1 = box_hi; a1 >= box_lo; --a1)
    for (int a2 = a1; a2 >= box_lo; --a2) rank2.push_back(Weight({a1, a2}));
  std::vector<Weight> rankn;
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int prev) {
      if (static_cast<int>(cur.size()) == n) {
        const Weight gamma(cur);
        if (character_window_admits(s, gamma, n)) rankn.push_back(gamma);
        return;
      }
      for (int v = prev; v >= box_lo; --v) {
        cur.push_back(v);
        rec(v);
        cur.pop_back();
      }
    };
    rec(box_hi);
  }
  for (const Weight& gamma : rankn)
    for (const Weight& alpha : rank2) {
      if (alpha.degree() != gamma.degree()) continue;
      for (const Weight& beta : rank2) {
        if (beta.degree() != gamma.degree()) continue;
        const TripleWeight t(alpha, beta, gamma);
        const Verdict v = simple_char_multiplicity(s, t, n);
        if (v.known && v.value != 0) {
          json e;
          e["weight"] = triple_json(t);
          e["multiplicity"] = int_json(v.value);
          e["provenance"] = v.provenance;
          entries.push_back(std::move(e));
        } else if (!v.known) {
          json e;
          e["weight"] = triple_json(t);
          e["provenance"] = v.provenance;
          undetermined.push_back(std::move(e));
        }
      }
    }
  out["entries"] = std::move(entries);
  out["undetermined"] = std::move(undetermined);
  emit(out);
  return 0;
}

int cmd_witness(int n, const std::string& simple_text, bool all, const std::string& weight_text,
                const std::vector<int>& ts) {
  json out;
  out["n"] = n;
  json reports = json::array();
  bool every_ok = true;
  auto run_one = [&](SimpleLabel s, const TripleWeight& w) {
    const WitnessReport rep = witness_check(s, w, n);
    json r;
    r["target"] = to_string(s);
    r["weight"] = triple_json(w);
    json verdicts = json::object();
    for (const auto& [lab, v] : rep.verdicts) verdicts[to_string(lab)] = verdict_json(v);
    r["verdicts"] = std::move(verdicts);
    r["status"] = rep.status == WitnessReport::Status::Verified ? "VERIFIED"
                  : rep.status == WitnessReport::Status::PartiallyVerified ? "PARTIALLY-VERIFIED"
                                                                           : "FAILED";
    every_ok = every_ok && rep.status != WitnessReport::Status::Failed;
    reports.push_back(std::move(r));
  };
  if (!weight_text.empty()) {
    if (simple_text.empty()) throw CLI::ValidationError("--simple", "required with --weight");
    run_one(parse_simple(simple_text), parse_triple_expr(weight_text, n));
  } else {
    for (const auto& [s, w] : witness_table(n, ts.empty() ? std::vector<int>{1, 2, 3} : ts)) {
      if (!all && !simple_text.empty() && parse_simple(simple_text) != s) continue;
      run_one(s, w);
    }
  }
  out["reports"] = std::move(reports);
  emit(out);
  return every_ok ? 0 : 1;
}

int cmd_localcoh(const std::string& support, int n, const std::string& format, bool expand) {
  const Ledger l = local_cohomology(support, n);
  if (format == "tsv") {
    for (const auto& [deg, entry] : l.rows) {
      std::cout << deg << "\t";
      if (expand) {
        const auto factors = l.expanded_factors(deg);
        for (size_t i = 0; i < factors.size(); ++i)
          std::cout << (i ? "+" : "") << to_string(factors[i]);
      } else {
        for (size_t i = 0; i < entry.factors.size(); ++i)
          std::cout << (i ? "+" : "") << to_string(entry.factors[i]);
      }
      std::cout << "\t" << (entry.chain ? "chain" : "sum") << "\n";
    }
    return 0;
  }
  json out;
  out["support"] = support;
  out["n"] = n;
  out["provenance"] = l.provenance;
  out["derived"] = l.derived;
  json rows = json::object();
  for (const auto& [deg, entry] : l.rows) {
    json row;
    json factors = json::array();
    for (ModLabel m : entry.factors) factors.push_back(to_string(m));
    row["factors"] = std::move(factors);
    row["chain"] = entry.chain;
    if (expand) {
      json ex = json::array();
      for (SimpleLabel s : l.expanded_factors(deg)) ex.push_back(to_string(s));
      row["expanded"] = std::move(ex);
    }
    rows[std::to_string(deg)] = std::move(row);
  }
  out["rows"] = std::move(rows);
  emit(out);
  return 0;
}

int cmd_lyubeznik(const std::string& orbit, int n, const std::string& format) {
  const LyubeznikTable t = lyubeznik(orbit, n);
  if (format == "tsv") {
    for (const auto& [pi, m] : t.values)
      std::cout << pi.first << "\t" << pi.second << "\t" << m << "\n";
    return 0;
  }
  json out;
  out["orbit"] = orbit;
  out["n"] = n;
  out["provenance"] = t.provenance;
  json values = json::array();
  for (const auto& [pi, m] : t.values)
    values.push_back({{"p", pi.first}, {"i", pi.second}, {"value", m}});
  out["values"] = std::move(values);
  emit(out);
  return 0;
}

int cmd_ih(const std::string& orbit, int n) {
  json out;
  out["orbit"] = orbit;
  out["n"] = n;
  out["dims"] = ih_dims(orbit, n);
  out["provenance"] = "point-support-table+cone-duality";
  emit(out);
  return 0;
}

int cmd_check(const std::string& n_range, bool verbose) {
  int lo = 3, hi = 6;
  if (!n_range.empty()) parse_n_range(n_range, lo, hi);
  const auto results = run_acceptance(lo, hi, verbose ? &std::cerr : nullptr);
  std::cout << acceptance_report(results);
  return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of the GL x GL x GL action on 2 x 2 x n hypermatrices"};
  app.require_subcommand(1);

  std::string n_text = "3";
  std::string format = "json";
  std::string weight_text, simple_text, support, orbit, gamma_text, alpha_text, beta_text, config;
  std::string from_v, to_v, n_range;
  std::vector<int> ts;
  bool all = false, expand = false, verbose = false;
  int cap = 8, box_lo = -6, box_hi = 2;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", n_text, "dimension of the long factor"); };

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit catalog and Hasse diagram");
  add_n(orbits_cmd);
  orbits_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* quiver_cmd = app.add_subcommand("quiver", "quiver with relations");
  add_n(quiver_cmd);
  quiver_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  CLI::App* paths_cmd = app.add_subcommand("paths", "path space between two vertices");
  add_n(paths_cmd);
  paths_cmd->add_option("--from", from_v)->required();
  paths_cmd->add_option("--to", to_v)->required();
  paths_cmd->add_option("--cap", cap);

  CLI::App* plethysm_cmd = app.add_subcommand("plethysm", "decomposition of S_gamma(A ox B)");
  plethysm_cmd->add_option("--gamma", gamma_text)->required();
  plethysm_cmd->add_option("--alpha", alpha_text);
  plethysm_cmd->add_option("--beta", beta_text);

  CLI::App* symmult_cmd = app.add_subcommand("symmult", "multiplicity in the polynomial ring");
  add_n(symmult_cmd);
  symmult_cmd->add_option("--weight", weight_text)->required();

  CLI::App* locmult_cmd = app.add_subcommand("locmult", "multiplicity in the semi-invariant localization (n=3)");
  locmult_cmd->add_option("--weight", weight_text)->required();

  CLI::App* euler_cmd = app.add_subcommand("euler", "stable euler-characteristic multiplicity");
  add_n(euler_cmd);
  euler_cmd->add_option("--config", config)->required()->check(CLI::IsMember({"y111", "y222", "y222tw"}));
  euler_cmd->add_option("--weight", weight_text)->required();

  CLI::App* character_cmd = app.add_subcommand("character", "character window of a simple module");
  add_n(character_cmd);
  character_cmd->add_option("--simple", simple_text)->required();
  character_cmd->add_option("--box-lo", box_lo, "lower entry bound (default -3n)");
  character_cmd->add_option("--box-hi", box_hi, "upper entry bound (default n)");

  CLI::App* witness_cmd = app.add_subcommand("witness", "witness-weight verification");
  add_n(witness_cmd);
  witness_cmd->add_flag("--all", all);
  witness_cmd->add_option("--simple", simple_text);
  witness_cmd->add_option("--weight", weight_text);
  witness_cmd->add_option("--t", ts, "parameters for the weight families");

  CLI::App* localcoh_cmd = app.add_subcommand("localcoh", "local cohomology ledger");
  add_n(localcoh_cmd);
  localcoh_cmd->add_option("--support", support)->required();
  localcoh_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  localcoh_cmd->add_flag("--expand", expand);

  CLI::App* lyub_cmd = app.add_subcommand("lyubeznik", "lyubeznik table of an orbit closure");
  add_n(lyub_cmd);
  lyub_cmd->add_option("--orbit", orbit)->required();
  lyub_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* ih_cmd = app.add_subcommand("ih", "intersection cohomology dimensions");
  add_n(ih_cmd);
  ih_cmd->add_option("--orbit", orbit)->required();

  CLI::App* check_cmd = app.add_subcommand("check", "run the full verification sweep");
  check_cmd->add_option("--n", n_range, "range lo..hi (default 3..6)");
  check_cmd->add_flag("--all", all);
  check_cmd->add_flag("--verbose", verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int n = std::stoi(n_text);
    if (character_cmd->parsed() && character_cmd->count("--box-lo") == 0) box_lo = -3 * n;
    if (character_cmd->parsed() && character_cmd->count("--box-hi") == 0) box_hi = n;
    if (orbits_cmd->parsed()) return cmd_orbits(n, format);
    if (quiver_cmd->parsed()) return cmd_quiver(n, format);
    if (paths_cmd->parsed()) return cmd_paths(n, from_v, to_v, cap);
    if (plethysm_cmd->parsed()) return cmd_plethysm(gamma_text, alpha_text, beta_text);
    if (symmult_cmd->parsed()) return cmd_symmult(n, weight_text);
    if (locmult_cmd->parsed()) return cmd_locmult(weight_text);
    if (euler_cmd->parsed()) return cmd_euler(config, n, weight_text);
    if (character_cmd->parsed()) return cmd_character(simple_text, n, box_lo, box_hi);
    if (witness_cmd->parsed()) return cmd_witness(n, simple_text, all, weight_text, ts);
    if (localcoh_cmd->parsed()) return cmd_localcoh(support, n, format, expand);
    if (lyub_cmd->parsed()) return cmd_lyubeznik(orbit, n, format);
    if (ih_cmd->parsed()) return cmd_ih(orbit, n);
    if (check_cmd->parsed()) return cmd_check(n_range, verbose);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
