#include "hhs/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hhs/errors.hpp"
#include "hhs/quasi_median.hpp"

namespace hhs {

Pipeline pipeline_from_name(const std::string& name) {
  if (name == "generic") return Pipeline::generic;
  if (name == "qm") return Pipeline::qm;
  throw PreconditionError("unknown pipeline '" + name + "'");
}

std::string to_string(Pipeline p) { return p == Pipeline::qm ? "qm" : "generic"; }

std::vector<WfEntry> parse_wf_family(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("W^F family: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("W^F family must be a JSON list");
  std::vector<WfEntry> out;
  for (const auto& row : doc) {
    if (!row.is_object() || !row.contains("domain") || !row.contains("adjacency"))
      throw ParseError("W^F entry needs \"domain\" and \"adjacency\"");
    WfEntry e;
    for (const auto& v : row["domain"]) e.domain.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& p : row["adjacency"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw ParseError("W^F adjacency entries must be integer pairs");
      e.adjacency.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string join_labels(const Graph& g, const std::vector<int>& ids) {
  std::string s;
  for (int v : ids) s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

ProtoHierarchy make_proto(const Graph& g, const RunConfig& cfg, std::optional<QmSystem>* qm) {
  if (cfg.pipeline == Pipeline::qm) {
    auto rep = is_quasi_median(g);
    if (!rep.is_quasi_median)
      throw PreconditionError("input is not quasi-median (" + to_string(rep.failure) +
                              "), witness: " + join_labels(g, rep.witness));
    *qm = build_qm_system(g, cfg.cap_closure);
    return ProtoHierarchy(qm_augmented(**qm));
  }
  FactorSystem fs = minimal_factor_system(g, cfg.cap_closure);
  XGraph xg = cfg.w_adjacency ? make_x_graph(g, *cfg.w_adjacency) : x_graph_sharing_vertex(g);
  return ProtoHierarchy(AugmentedGraph(std::move(fs), std::move(xg)));
}

WFamily family_for(const Bundle& b, const RunConfig& cfg) {
  if (b.qm) {
    const QmSystem* q = &*b.qm;
    return [q](int f) { return qm_w_family(*q, f); };
  }
  const AugmentedGraph* aug = &b.ph.augmented();
  const std::vector<WfEntry>* entries = &cfg.wf_family;
  return [aug, entries](int f) {
    const FactorSystem& fs = aug->system();
    for (const auto& e : *entries) {
      VertexSet s(fs.host().order());
      for (const auto& l : e.domain) {
        int v = fs.host().find_label(l);
        if (v < 0) throw PreconditionError("W^F family names unknown vertex '" + l + "'");
        s.insert(v);
      }
      if (s == fs.domain(f)) return make_x_graph(induced(fs.host(), s).graph, e.adjacency);
    }
    return restriction_w_family(*aug, f);
  };
}

bool replayable(const std::string& name) {
  return name != "uniqueness" && name != "hierarchy_condition" && name != "bottleneck" && name != "containers";
}

}  // namespace

Bundle build_bundle(const Graph& g, const RunConfig& cfg) {
  std::optional<QmSystem> qm;
  ProtoHierarchy ph = make_proto(g, cfg, &qm);
  return Bundle{std::move(qm), std::move(ph)};
}

FullReport full_report(const Graph& g, const RunConfig& cfg) {
  Bundle b = build_bundle(g, cfg);
  return full_report(b, g, cfg);
}

FullReport full_report(const Bundle& b, const Graph& g, const RunConfig& cfg) {
  const ProtoHierarchy& ph = b.ph;
  const FactorSystem& fs = ph.system();
  FullReport r;
  r.input = cfg.input_name;
  r.pipeline = to_string(cfg.pipeline);
  r.seed = cfg.check.seed;
  r.vertices = g.order();
  r.edges = g.size();
  r.domains = fs.size();
  r.w_vertices = ph.w_count();
  r.cx_vertices = ph.augmented().graph().order();

  r.axioms.push_back(check_projection_diameter(ph));
  r.axioms.push_back(check_projection_lipschitz(ph));
  r.axioms.push_back(check_projection_coverage(ph));
  r.axioms.push_back(check_rho_diameter(ph));
  r.axioms.push_back(check_hyperbolicity(ph));
  r.axioms.push_back(check_complexity(ph));
  r.axioms.push_back(check_containers(ph));
  r.axioms.push_back(check_bgi(ph, cfg.check));
  r.axioms.push_back(check_combinatorial_bgi(ph));
  r.axioms.push_back(check_consistency(ph));
  r.axioms.push_back(check_large_links(ph));
  r.axioms.push_back(check_partial_realization(ph, cfg.check));

  r.uniqueness = check_uniqueness(ph);
  {
    AxiomReport u;
    u.name = "uniqueness";
    bool inf = false;
    for (int t : r.uniqueness.theta) inf = inf || t >= kInfinite;
    if (inf) {
      u.infinite = true;
      u.status = Status::degenerate;
      u.detail = "W is disconnected";
    } else {
      u.constant = Ratio(r.uniqueness.theta.empty() ? 0 : r.uniqueness.theta.back());
      u.detail = "theta at the largest projection distance";
    }
    r.axioms.push_back(u);
  }

  r.axioms.push_back(check_qi_multiplicative(ph));
  r.axioms.push_back(check_qi_additive(ph));

  {
    AxiomReport h;
    h.name = "hierarchy_condition";
    try {
      r.hierarchy = check_hierarchy_condition(ph.augmented(), family_for(b, cfg), b.qm.has_value());
      h.status = r.hierarchy.ok() ? Status::pass : Status::fail;
      h.detail = std::to_string(r.hierarchy.maps_checked) + " induced maps checked";
      if (!r.hierarchy.failures.empty()) h.detail += "; first failure: " + r.hierarchy.failures.front();
    } catch (const Error& e) {
      h.status = Status::fail;
      h.detail = e.what();
      r.hierarchy.maps = false;
      r.hierarchy.failures.push_back(e.what());
    }
    r.axioms.push_back(h);
  }

  {
    AxiomReport bn;
    bn.name = "bottleneck";
    const Graph& cx = ph.augmented().graph();
    if (cx.order() > 0 && is_connected(cx)) {
      r.bottleneck = bottleneck_delta(cx);
      r.bottleneck_defined = true;
      bn.constant = Ratio(r.bottleneck.delta);
      if (r.bottleneck.x >= 0) bn.witness = {{}, {r.bottleneck.x, r.bottleneck.y, r.bottleneck.midpoint}, {}, "midpoint"};
    } else {
      bn.status = Status::degenerate;
      bn.detail = "augmented graph disconnected";
    }
    r.axioms.push_back(bn);
  }

  for (auto& a : r.axioms) {
    bool ok = true;
    if (replayable(a.name) && !a.infinite) ok = replay_witness(ph, a) == a.constant;
    r.replayed.push_back(ok);
    if (!ok) {
      a.status = Status::fail;
      a.detail += (a.detail.empty() ? "" : "; ") + std::string("witness replay disagrees");
    }
    if (a.status == Status::degenerate || a.status == Status::skipped) continue;
    if (a.infinite) a.status = Status::fail;
    auto it = cfg.bounds.find(a.name);
    if (it != cfg.bounds.end() && !a.infinite && a.constant > it->second) {
      a.status = Status::fail;
      a.detail += (a.detail.empty() ? "" : "; ") + std::string("exceeds bound ") + it->second.str();
    }
    if (a.status == Status::fail) r.ok = false;
  }

  for (int f = 0; f < fs.size(); ++f)
    if (fs.co_level(f) != fs.co_level_min(f))
      r.notes.push_back("co-level of domain " + std::to_string(f) + " depends on the superdomain chosen (" +
                        std::to_string(fs.co_level_min(f)) + " vs " + std::to_string(fs.co_level(f)) + ")");
  for (const auto& d : ph.degeneracies()) r.notes.push_back(d);
  return r;
}

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["domains"] = w.domains;
  j["points"] = w.points;
  j["path"] = w.path;
  j["clause"] = w.clause;
  return j;
}

std::string constant_string(const AxiomReport& a) { return a.infinite ? "inf" : a.constant.str(); }

}  // namespace

std::string report_json(const FullReport& r) {
  nlohmann::ordered_json doc;
  doc["input"] = r.input;
  doc["pipeline"] = r.pipeline;
  doc["seed"] = r.seed;
  doc["sizes"] = {{"vertices", r.vertices}, {"edges", r.edges},           {"domains", r.domains},
                  {"w_vertices", r.w_vertices}, {"cx_vertices", r.cx_vertices}};
  auto& ax = doc["axioms"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.axioms.size(); ++i) {
    const auto& a = r.axioms[i];
    nlohmann::ordered_json row;
    row["name"] = a.name;
    row["constant"] = constant_string(a);
    row["status"] = to_string(a.status);
    row["witness"] = witness_json(a.witness);
    row["replayed"] = static_cast<bool>(r.replayed[i]);
    row["skipped"] = a.skipped;
    row["detail"] = a.detail;
    ax.push_back(row);
  }
  auto& table = doc["constants_table"] = nlohmann::ordered_json::object();
  for (const auto& a : r.axioms) table[a.name] = constant_string(a);
  auto& theta = doc["uniqueness"]["theta"] = nlohmann::ordered_json::array();
  for (int t : r.uniqueness.theta) theta.push_back(distance_string(t));
  doc["uniqueness"]["cross_component_pairs"] = r.uniqueness.cross_component_pairs;
  doc["hierarchy_condition"] = {{"induced_systems", r.hierarchy.induced_systems},
                                {"augmented_graphs", r.hierarchy.augmented_graphs},
                                {"maps", r.hierarchy.maps},
                                {"separation", r.hierarchy.separation},
                                {"maps_checked", r.hierarchy.maps_checked},
                                {"failures", r.hierarchy.failures}};
  if (r.bottleneck_defined)
    doc["bottleneck"] = {{"delta", r.bottleneck.delta},
                         {"x", r.bottleneck.x},
                         {"y", r.bottleneck.y},
                         {"midpoint", r.bottleneck.midpoint}};
  doc["notes"] = r.notes;
  doc["verdict"] = r.ok ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string axioms_json(const FullReport& r) {
  auto full = nlohmann::ordered_json::parse(report_json(r));
  nlohmann::ordered_json doc;
  for (const char* key : {"input", "pipeline", "seed", "axioms", "verdict"}) doc[key] = full[key];
  return doc.dump(2) + "\n";
}

std::string factor_system_json(const FactorSystem& fs) {
  const Graph& h = fs.host();
  nlohmann::ordered_json doc;
  auto& ds = doc["domains"] = nlohmann::ordered_json::array();
  for (int i = 0; i < fs.size(); ++i) {
    nlohmann::ordered_json row;
    row["index"] = i;
    auto& vs = row["vertices"] = nlohmann::ordered_json::array();
    fs.domain(i).for_each([&](int v) { vs.push_back(h.label(v)); });
    row["co_level"] = fs.co_level(i);
    ds.push_back(row);
  }
  auto& rel = doc["relations"] = nlohmann::ordered_json::array();
  for (int i = 0; i < fs.size(); ++i)
    for (int j = 0; j < fs.size(); ++j)
      if (i != j) rel.push_back({i, j, to_string(fs.relation(i, j))});
  doc["complexity"] = fs.complexity();
  return doc.dump(2) + "\n";
}

std::string hyperplanes_json(const HyperplaneSystem& hs) {
  const Graph& g = hs.graph();
  nlohmann::ordered_json doc;
  auto& hp = doc["hyperplanes"] = nlohmann::ordered_json::array();
  for (int h = 0; h < hs.count(); ++h) {
    nlohmann::ordered_json row;
    row["id"] = h;
    auto& es = row["edges"] = nlohmann::ordered_json::array();
    for (int e : hs.dual_edges(h)) es.push_back({g.label(g.edges()[e].u), g.label(g.edges()[e].v)});
    hp.push_back(row);
  }
  return doc.dump(2) + "\n";
}

Ratio parse_ratio(const std::string& text) {
  try {
    std::size_t pos = 0;
    long long n = std::stoll(text, &pos);
    if (pos == text.size()) return Ratio(n);
    if (text[pos] != '/') throw ParseError("bad ratio '" + text + "'");
    std::size_t pos2 = 0;
    long long d = std::stoll(text.substr(pos + 1), &pos2);
    if (pos + 1 + pos2 != text.size() || d <= 0) throw ParseError("bad ratio '" + text + "'");
    return Ratio(n, d);
  } catch (const std::logic_error&) {
    throw ParseError("bad ratio '" + text + "'");
  }
}

std::string report_text(const FullReport& r) {
  std::ostringstream out;
  out << "input " << r.input << "  pipeline " << r.pipeline << "  seed " << r.seed << "\n";
  out << r.vertices << " vertices, " << r.edges << " edges, " << r.domains << " domains, " << r.w_vertices
      << " W-vertices, " << r.cx_vertices << " augmented vertices\n\n";
  out << std::left << std::setw(22) << "check" << std::setw(10) << "constant" << std::setw(12) << "status"
      << "detail\n";
  for (const auto& a : r.axioms)
    out << std::setw(22) << a.name << std::setw(10) << constant_string(a) << std::setw(12) << to_string(a.status)
        << a.detail << "\n";
  out << "\ntheta:";
  for (std::size_t k = 0; k < r.uniqueness.theta.size(); ++k)
    out << " " << k << "->" << distance_string(r.uniqueness.theta[k]);
  out << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "verdict: " << (r.ok ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace hhs
