// Command-line front end: reads an edge list, runs one construction and
// prints a JSON (or flat table) report.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "hyperex/hyperex.hpp"
#include "report.hpp"

using namespace hyperex;
using report::Json;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string graph_path;
  std::string format = "json";
  bool json = false;
  std::uint64_t seed = 0;
  std::string delta;       // override, as text
  std::int32_t max_degree = -1;
};

Graph read_graph(const std::string& path) {
  if (path.empty()) throw InputError("--graph is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

NodeId node_of(const Graph& g, std::int64_t label, const char* flag) {
  const auto& labels = g.labels();
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (labels[u] == label) return u;
  }
  throw std::domain_error(std::string("--") + flag + ": node " + std::to_string(label) + " not in graph");
}

std::optional<HalfInteger> delta_override(const Common& c) {
  if (c.delta.empty()) return std::nullopt;
  HalfInteger h;
  try {
    h = parse_half_integer(c.delta);
  } catch (const std::exception&) {
    throw std::domain_error("--delta must be a multiple of 1/2, got " + c.delta);
  }
  if (h.halves() < 0) throw std::domain_error("--delta must be non-negative");
  return h;
}

std::optional<std::int32_t> degree_override(const Common& c) {
  if (c.max_degree < 0) return std::nullopt;
  return c.max_degree;
}

// The delta a command uses: the override, or the resolved value.
report::DeltaEcho pick_delta(const Graph& g, const Common& c) {
  if (auto d = delta_override(c)) return {effective_delta(*d), true, "override"};
  const ResolvedDelta r = resolve_delta(g);
  return {r.delta, r.is_exact, r.method};
}

Ratio ratio_flag(const std::string& text, const char* flag) {
  try {
    return parse_ratio(text);
  } catch (const std::exception&) {
    throw std::domain_error(std::string("--") + flag + " is not a rational: " + text);
  }
}

void add_common(CLI::App* sub, Common& c, bool needs_graph = true) {
  if (needs_graph) sub->add_option("--graph", c.graph_path, "edge-list file")->required();
  sub->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sub->add_flag("--json", c.json, "same as --format json");
  sub->add_option("--seed", c.seed, "random seed");
}

void add_overrides(CLI::App* sub, Common& c) {
  sub->add_option("--delta", c.delta, "hyperbolicity override (multiple of 1/2)");
  sub->add_option("--max-degree", c.max_degree, "degree bound override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperex: constructions on hyperbolic graphs"};
  app.require_subcommand(1);
  Common c;
  Json out;
  std::string text_out;  // for gen, which prints an edge list

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "hyperbolicity of a graph");
  add_common(delta_cmd, c);
  bool approx = false;
  NodeId max_nodes = 400;
  unsigned workers = 1;
  delta_cmd->add_flag("--approx", approx, "fixed-basepoint 2-approximation");
  delta_cmd->add_option("--max-nodes", max_nodes, "node cap for the exact scan");
  delta_cmd->add_option("--workers", workers, "threads for the exact scan");

  // witnesses
  auto* wit_cmd = app.add_subcommand("witnesses", "nested expansion witnesses between p and q");
  add_common(wit_cmd, c);
  add_overrides(wit_cmd, c);
  std::int64_t p = 0, q = 0;
  std::string mu = "1/2";
  wit_cmd->add_option("--p", p)->required();
  wit_cmd->add_option("--q", q)->required();
  wit_cmd->add_option("--mu", mu, "exponent in (0,1)");

  // overlap
  auto* ov_cmd = app.add_subcommand("overlap", "limited-overlap witness families");
  add_common(ov_cmd, c);
  add_overrides(ov_cmd, c);
  std::int32_t tau = 1;
  bool force = false;
  ov_cmd->add_option("--p", p)->required();
  ov_cmd->add_option("--q", q)->required();
  ov_cmd->add_option("--tau", tau)->required();
  ov_cmd->add_option("--mu", mu);
  ov_cmd->add_flag("--force", force, "run even if tau fails validation");

  // cuts
  auto* cut_cmd = app.add_subcommand("cuts", "disjoint small s-t cuts");
  add_common(cut_cmd, c);
  add_overrides(cut_cmd, c);
  std::int64_t s = 0, t = 0;
  cut_cmd->add_option("--s", s)->required();
  cut_cmd->add_option("--t", t)->required();

  // ehssc
  auto* eh_cmd = app.add_subcommand("ehssc", "hitting set for small s-t cuts");
  add_common(eh_cmd, c);
  add_overrides(eh_cmd, c);
  std::int64_t k = 1;
  std::optional<std::int64_t> threshold;
  eh_cmd->add_option("--s", s)->required();
  eh_cmd->add_option("--t", t)->required();
  eh_cmd->add_option("--k", k)->required();
  eh_cmd->add_option("--threshold-override", threshold, "branch threshold (testing only)");

  // uumv
  auto* uu_cmd = app.add_subcommand("uumv", "route kappa paths minimizing shared edges");
  add_common(uu_cmd, c);
  add_overrides(uu_cmd, c);
  std::int64_t r = 1, kappa = 2;
  bool greedy = false;
  uu_cmd->add_option("--s", s)->required();
  uu_cmd->add_option("--t", t)->required();
  uu_cmd->add_option("--r", r)->required();
  uu_cmd->add_option("--kappa", kappa)->required();
  uu_cmd->add_flag("--greedy", greedy, "greedy baseline instead");
  uu_cmd->add_option("--threshold-override", threshold, "branch threshold (testing only)");

  // sse
  auto* sse_cmd = app.add_subcommand("sse", "small set with low normalized expansion");
  add_common(sse_cmd, c);
  add_overrides(sse_cmd, c);
  std::string epsilon = "1/2", zeta = "49/100";
  sse_cmd->add_option("--epsilon", epsilon);
  sse_cmd->add_option("--zeta", zeta);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "print a generated graph as an edge list");
  add_common(gen_cmd, c, false);
  std::string family;
  gen_cmd->add_option("--family", family)->required()->check(CLI::IsMember(gen::family_names()));
  std::map<std::string, std::string> gen_params;
  for (const char* key : {"n", "k", "a", "b", "c", "rows", "cols", "dim", "branching", "depth", "size", "p"}) {
    gen_cmd->add_option_function<std::string>(std::string("--") + key,
                                               [&gen_params, key](const std::string& v) { gen_params[key] = v; });
  }

  // oracle
  auto* or_cmd = app.add_subcommand("oracle", "brute-force references for small graphs");
  add_common(or_cmd, c);
  std::string op;
  or_cmd->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"min-expansion", "cuts", "ehssc", "uumv", "uumv-direct", "delta"}));
  or_cmd->add_option("--s", s);
  or_cmd->add_option("--t", t);
  or_cmd->add_option("--k", k);
  or_cmd->add_option("--r", r);
  or_cmd->add_option("--kappa", kappa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (c.json) c.format = "json";

  try {
    if (gen_cmd->parsed()) {
      std::cout << gen::generate(family, gen_params, c.seed).to_edge_list();
      return 0;
    }
    const Graph g = read_graph(c.graph_path);
    const report::Labels L(g);
    out["command"] = app.get_subcommands().front()->get_name();
    out["graph"] = {{"n", g.node_count()}, {"m", g.edge_count()}, {"max_degree", g.max_degree()}};

    if (delta_cmd->parsed()) {
      DeltaOptions o;
      o.max_nodes = max_nodes;
      o.workers = std::max(1u, workers);
      const HyperbolicityResult res = approx ? delta_two_approx(g) : delta_exact(g, o);
      out["delta"] = res.delta.str();
      out["effective_delta"] = res.effective_delta.str();
      out["exact"] = res.is_exact;
      out["witness"] = L.set(NodeSet(res.witness));
      if (approx) out["upper_bound"] = HalfInteger::from_halves(2 * res.delta.halves()).str();
    } else if (wit_cmd->parsed()) {
      const auto d = pick_delta(g, c);
      WitnessOptions o{d.value, degree_override(c), std::nullopt};
      const WitnessFamily f = nested_witness_family(g, node_of(g, p, "p"), node_of(g, q, "q"), ratio_flag(mu, "mu"), o);
      out["delta"] = d.json();
      out["max_degree"] = report::degree(f.max_degree, f.degree_overridden, Json::array());
      out["family"] = report::witness_family(L, f);
      out["shortfall"] = f.shortfall;
      out["valid"] = check_witness_family(g, f).empty();
    } else if (ov_cmd->parsed()) {
      const auto d = pick_delta(g, c);
      OverlapOptions o{d.value, degree_override(c), force};
      const OverlapFamilySet set = overlap_families(g, node_of(g, p, "p"), node_of(g, q, "q"), tau, ratio_flag(mu, "mu"), o);
      out["delta"] = d.json();
      out["max_degree"] = report::degree(set.max_degree, set.degree_overridden, Json::array());
      out["distance"] = set.dist;
      out["tau"] = tau;
      out["tau_check"] = {{"statement", set.tau_check.statement_ok},
                          {"growth", set.tau_check.growth_ok},
                          {"quarter", set.tau_check.quarter_ok},
                          {"forced", set.forced}};
      out["floors"] = {{"segment_length", set.segment_length},
                       {"min_families", set.min_families()},
                       {"overlap_threshold", set.dist / (2 * tau)}};
      out["anchors"] = L.nodes(set.anchors);
      out["family_bound"] = report::bound(set.family_bound);
      out["group"] = {{"parity", set.group.parity ? "odd" : "even"},
                      {"handedness", to_string(set.group.hand)},
                      {"sizes", set.group_sizes}};
      Json fams = Json::array();
      for (std::size_t i = 0; i < set.families.size(); ++i) {
        Json f = report::witness_family(L, set.families[i]);
        f["segment"] = set.chosen[i];
        fams.push_back(f);
      }
      out["families"] = fams;
      Json matrix = Json::array();
      bool all_ok = true;
      for (const auto& m : overlap_matrix(set)) {
        matrix.push_back({m.family_a, m.subset_a, m.family_b, m.subset_b, m.ok});
        all_ok = all_ok && m.ok;
      }
      out["overlap_checks"] = matrix;
      out["overlap_ok"] = all_ok;
      out["shortfall"] = set.shortfall;
    } else if (cut_cmd->parsed()) {
      const auto d = pick_delta(g, c);
      CutFamilyOptions o{d.value, degree_override(c)};
      const CutFamily f = disjoint_cut_family(g, node_of(g, s, "s"), node_of(g, t, "t"), o);
      const CutFamilyReport rep = certify_cut_family(g, f);
      out["delta"] = d.json();
      out["max_degree"] = report::degree(f.d_excl, f.degree_overridden, L.set(f.degree_excluded));
      out["distance"] = f.st_distance;
      out["distance_threshold"] = f.distance_threshold;
      out["floors"] = {{"level_stride", f.level_stride},
                       {"ball_radius", f.ball_radius},
                       {"exclusion_radius", f.exclusion_radius},
                       {"guaranteed", f.guaranteed}};
      out["max_cut_edges"] = f.max_cut_edges;
      Json cuts = Json::array();
      for (std::size_t i = 0; i < f.cuts.size(); ++i) {
        const auto& cut = f.cuts[i];
        const auto& cert = rep.per_cut[i];
        cuts.push_back({{"center", L(cut.center)},
                        {"level", cut.level},
                        {"ball_size", cut.ball.size()},
                        {"cut_edges", L.edges(cut.cut_edges)},
                        {"certificate",
                         {{"separates", cert.separates},
                          {"excludes_terminals", cert.excludes_terminals},
                          {"disjoint", cert.disjoint},
                          {"within_size", cert.within_size}}}});
      }
      out["cuts"] = cuts;
      out["count"] = f.cuts.size();
      out["certified"] = rep.all_pass();
    } else if (eh_cmd->parsed() || (uu_cmd->parsed() && !greedy)) {
      const auto d = pick_delta(g, c);
      EhsscOptions o{d.value, degree_override(c), threshold};
      const NodeId sn = node_of(g, s, "s"), tn = node_of(g, t, "t");
      out["delta"] = d.json();
      if (eh_cmd->parsed()) {
        const EhsscSolution sol = ehssc_approx(g, sn, tn, k, o);
        out["max_degree"] = report::degree(sol.d_excl, sol.degree_overridden, L.set(sol.degree_excluded));
        out["result"] = report::ehssc(L, sol);
        out["valid"] = ehssc_valid(g, sn, tn, k, sol.hit_edges);
      } else {
        const UumvSolution sol = uumv_approx(g, sn, tn, r, kappa, o);
        out["max_degree"] = report::degree(sol.ehssc->d_excl, sol.ehssc->degree_overridden,
                                           L.set(sol.ehssc->degree_excluded));
        out["result"] = report::uumv(L, sol);
      }
    } else if (uu_cmd->parsed()) {
      const UumvSolution sol = greedy_uumv(g, node_of(g, s, "s"), node_of(g, t, "t"), r, kappa);
      out["result"] = report::uumv(L, sol);
    } else if (sse_cmd->parsed()) {
      const auto d = pick_delta(g, c);
      SseOptions o{d.value, degree_override(c)};
      const SseSolution sol = sse_solve(g, ratio_flag(epsilon, "epsilon"), ratio_flag(zeta, "zeta"), o);
      out["delta"] = d.json();
      out["max_degree"] = report::degree(sol.d, false, Json::array());
      out["branch"] = sol.branch;
      out["shortfall"] = sol.shortfall;
      out["set"] = L.set(sol.set);
      out["size"] = sol.set.size();
      out["phi"] = report::ratio(sol.phi);
      out["h"] = report::ratio(sol.h);
      out["params"] = {{"epsilon", sol.epsilon.str()},
                       {"zeta", sol.zeta.str()},
                       {"alpha", sol.alpha},
                       {"block_length", sol.block_length}};
      out["floors"] = {{"size_cap", sol.size_cap},
                       {"target_distance", sol.target_dist},
                       {"cylinder_radius", sol.cylinder_radius},
                       {"ball_limit", sol.ball_limit}};
      out["pair"] = {{"p", L(sol.p)}, {"q", L(sol.q)}, {"distance", sol.dist}, {"fallback", sol.pair_fallback}};
      out["cylinder"] = {{"used", sol.cylinder_used}, {"disconnects", sol.cylinder_disconnects}};
      out["window"] = {{"degree_ok", sol.degree_window_ok}};
    } else if (or_cmd->parsed()) {
      out["op"] = op;
      if (op == "min-expansion") {
        const auto [set, h] = oracle::brute_min_node_expansion(g);
        out["set"] = L.set(set);
        out["expansion"] = report::ratio(h);
      } else if (op == "delta") {
        out["delta"] = oracle::brute_delta(g).str();
      } else {
        const NodeId sn = node_of(g, s, "s"), tn = node_of(g, t, "t");
        if (op == "cuts") {
          Json cuts = Json::array();
          for (const auto& cut : oracle::enumerate_size_constrained_cuts(g, sn, tn, k)) cuts.push_back(L.edge_ids(cut));
          out["cuts"] = cuts;
          out["count"] = cuts.size();
        } else if (op == "ehssc") {
          const auto hs = oracle::brute_ehssc(g, sn, tn, k);
          out["opt"] = hs.opt;
          out["edges"] = L.edge_ids(hs.edges);
        } else if (op == "uumv") {
          out["opt"] = oracle::brute_uumv(g, sn, tn, r, kappa);
        } else {
          out["opt"] = oracle::direct_uumv(g, sn, tn, r, kappa);
        }
      }
    }
    std::cout << report::render(out, c.format);
    return 0;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
