#pragma once

// JSON views of library results for the command-line tool. Node ids are
// translated back to input labels.

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hyperex/hyperex.hpp"

namespace hyperex::report {

using Json = nlohmann::json;

inline Json ratio(const Ratio& r) { return Json{{"exact", r.str()}, {"approx", r.to_double()}}; }

inline Json bound(const BoundValue& b) { return Json{{"exact", b.value.str()}, {"approx", b.approx}}; }

class Labels {
 public:
  explicit Labels(const Graph& g) : g_(&g) {}

  std::int64_t operator()(NodeId u) const { return g_->labels()[u]; }

  Json nodes(const std::vector<NodeId>& ids) const {
    Json a = Json::array();
    for (NodeId u : ids) a.push_back((*this)(u));
    return a;
  }
  Json set(const NodeSet& s) const {
    std::vector<std::int64_t> out;
    for (NodeId u : s) out.push_back((*this)(u));
    std::sort(out.begin(), out.end());
    return Json(out);
  }
  Json edge(const Edge& e) const {
    const auto a = (*this)(e.u), b = (*this)(e.v);
    return Json::array({std::min(a, b), std::max(a, b)});
  }
  // Edge sets come out sorted by label pair.
  Json edges(const EdgeList& es) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const Edge& e : es) {
      const auto a = (*this)(e.u), b = (*this)(e.v);
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    Json j = Json::array();
    for (const auto& [a, b] : out) j.push_back(Json::array({a, b}));
    return j;
  }
  Json edge_ids(const std::vector<EdgeId>& ids) const {
    EdgeList es;
    for (EdgeId e : ids) es.push_back(g_->edge(e));
    return edges(es);
  }

 private:
  const Graph* g_;
};

/// Source of the delta a construction ran with.
struct DeltaEcho {
  HalfInteger value;
  bool exact = true;
  std::string source;  // "override", "tree", "exact", "two-approx-doubled"

  Json json() const { return Json{{"value", value.str()}, {"exact", exact}, {"source", source}}; }
};

inline Json degree(std::int32_t d, bool overridden, const Json& excluded) {
  return Json{{"value", d}, {"overridden", overridden}, {"excluded", excluded}};
}

inline Json witness_family(const Labels& L, const WitnessFamily& f) {
  Json subsets = Json::array();
  for (std::size_t i = 0; i < f.subsets.size(); ++i) {
    Json origin = f.origins[i].cylinder_radius < 0
                      ? Json{{"kind", "ball"}, {"radius", f.origins[i].ball_radius}}
                      : Json{{"kind", "cylinder-ball"},
                             {"cylinder_radius", f.origins[i].cylinder_radius},
                             {"radius", f.origins[i].ball_radius}};
    subsets.push_back(Json{{"members", L.set(f.subsets[i])},
                           {"size", f.subsets[i].size()},
                           {"expansion", ratio(f.expansions[i])},
                           {"origin", origin}});
  }
  return Json{
      {"p", L(f.p)},
      {"q", L(f.q)},
      {"anchor", L(f.anchor)},
      {"distance", f.dist},
      {"mu", f.mu.str()},
      {"n", f.n},
      {"bound", bound(f.bound)},
      {"ball_term", bound(f.ball_term)},
      {"cylinder_term", bound(f.cylinder_term)},
      {"required", f.required},
      {"found", f.subsets.size()},
      {"shortfall", f.shortfall},
      {"subsets", subsets},
      {"diagnostics",
       {{"ball_term_hits", f.ball_term_hits},
        {"cylinder_radius_range", Json::array({f.cylinder_radius_lo, f.cylinder_radius_hi})},
        {"cylinder_radii_swept", f.cylinder_radii},
        {"cylinder_disconnects", f.cylinder_disconnects}}},
  };
}

inline Json ehssc(const Labels& L, const EhsscSolution& s) {
  Json iters = Json::array();
  for (const auto& f : s.iterations) iters.push_back(L.edge_ids(f));
  return Json{
      {"s", L(s.s)},
      {"t", L(s.t)},
      {"k", s.k},
      {"branch", to_string(s.branch)},
      {"hit_edges", L.edge_ids(s.hit_edges)},
      {"hit_count", s.hit_edges.size()},
      {"iterations", iters},
      {"threshold", {{"value", s.threshold}, {"overridden", s.threshold_overridden}}},
      {"floors", {{"exclusion_radius", s.exclusion_radius}, {"degree_exponent", s.delta.floor_times(12) + 1}}},
  };
}

inline Json uumv(const Labels& L, const UumvSolution& u) {
  Json paths = Json::array();
  for (const Path& p : u.paths) paths.push_back(L.nodes(p));
  Json out{
      {"method", u.method},
      {"s", L(u.s)},
      {"t", L(u.t)},
      {"r", u.r},
      {"kappa", u.kappa},
      {"paths", paths},
      {"shared", u.shared.count},
      {"shared_edges", L.edge_ids(u.shared.edges)},
  };
  if (u.ehssc) {
    out["hitting_set_size"] = u.hitting_set_size();
    out["ehssc"] = ehssc(L, *u.ehssc);
    out["floors"] = {{"cut_size", (u.kappa + u.r - 1) / u.r - 1}};
  }
  return out;
}

/// Flattens a JSON document to "path  value" rows.
inline void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "  " << j.dump() << "\n";
  }
}

inline std::string render(const Json& j, const std::string& format) {
  if (format == "table") {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
  }
  return j.dump(2) + "\n";
}

}  // namespace hyperex::report
