#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhs/axioms.hpp"
#include "hhs/qm_pipeline.hpp"

namespace hhs {

enum class Pipeline { generic, qm };
Pipeline pipeline_from_name(const std::string& name);
std::string to_string(Pipeline p);

// Supplied W^F for one domain of a generic input, keyed by the domain's
// vertex labels; `adjacency` pairs index the maximal cliques of the induced
// graph on those vertices.
struct WfEntry {
  std::vector<std::string> domain;
  std::vector<std::pair<int, int>> adjacency;
};
// JSON list [{"domain":[labels], "adjacency":[[i,j],...]}, ...].
std::vector<WfEntry> parse_wf_family(const std::string& json_text);

struct RunConfig {
  std::string input_name;
  Pipeline pipeline = Pipeline::qm;
  // Generic pipeline: W-adjacency pairs; absent means cliques sharing a vertex.
  std::optional<std::vector<std::pair<int, int>>> w_adjacency;
  std::vector<WfEntry> wf_family;
  int cap_closure = FactorSystem::kDefaultCap;
  CheckOptions check;
  // Pass thresholds by check name; checks without a bound pass when finite.
  std::map<std::string, Ratio> bounds;
};

// Everything the verifier derives from one input.
struct Bundle {
  std::optional<QmSystem> qm;
  ProtoHierarchy ph;
};
// Builds the factor system, X-graph and proto-hierarchy for an input.
// PreconditionError (with the failure witness) when the quasi-median pipeline
// receives a graph that is not quasi-median.
Bundle build_bundle(const Graph& g, const RunConfig& cfg);

struct FullReport {
  std::string input;
  std::string pipeline;
  std::uint64_t seed = 0;
  int vertices = 0, edges = 0;
  int domains = 0, w_vertices = 0, cx_vertices = 0;
  std::vector<AxiomReport> axioms;
  std::vector<bool> replayed;  // parallel to axioms
  UniquenessTable uniqueness;
  HierarchyConditionReport hierarchy;
  BottleneckReport bottleneck;
  bool bottleneck_defined = false;
  std::vector<std::string> notes;
  bool ok = true;
};

FullReport full_report(const Graph& g, const RunConfig& cfg);
// Runs every check on an existing bundle.
FullReport full_report(const Bundle& b, const Graph& g, const RunConfig& cfg);
std::string report_json(const FullReport& r);
// Report of only the checks, for the check-axioms subcommand.
std::string axioms_json(const FullReport& r);
std::string report_text(const FullReport& r);

// {"domains":[{"index","vertices","co_level"}], "relations":[[i,j,rel]], "complexity"}
std::string factor_system_json(const FactorSystem& fs);
// {"hyperplanes":[{"id","edges":[[u,v],...]}]} with vertex labels.
std::string hyperplanes_json(const HyperplaneSystem& hs);
// Accepts "n" or "n/d".
Ratio parse_ratio(const std::string& text);

}  // namespace hhs
