// hhs: command-line front end for the hierarchy library.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hhs/errors.hpp"
#include "hhs/generators.hpp"
#include "hhs/graph_io.hpp"
#include "hhs/metrics.hpp"
#include "hhs/report.hpp"

namespace fs = std::filesystem;
using namespace hhs;

namespace {

const char* const kCheckNames[] = {
    "projection_diameter", "projection_lipschitz", "projection_coverage", "rho_diameter", "hyperbolicity",
    "complexity",          "containers",           "bgi",                 "combinatorial_bgi", "consistency",
    "large_links",         "partial_realization",  "uniqueness",          "qi_multiplicative", "qi_additive",
    "hierarchy_condition", "bottleneck"};

struct Options {
  std::string input;
  std::string format;
  std::string pipeline = "qm";
  std::string w_adjacency;
  std::string wf_family;
  int cap_closure = FactorSystem::kDefaultCap;
  int cap_dag = 100000;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> bounds;
  std::string out;
  bool dot = false;
  std::string target = "input";
  std::vector<std::string> gen_args;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load(const Options& o) {
  if (o.input.empty()) throw PreconditionError("--input is required");
  std::string fmt = o.format;
  if (fmt.empty()) fmt = fs::path(o.input).extension() == ".json" ? "json" : "edgelist";
  return read_graph(o.input, format_from_name(fmt));
}

RunConfig config(const Options& o) {
  RunConfig cfg;
  cfg.input_name = o.input;
  cfg.pipeline = pipeline_from_name(o.pipeline);
  if (!o.w_adjacency.empty()) cfg.w_adjacency = parse_w_adjacency(slurp(o.w_adjacency));
  if (!o.wf_family.empty()) cfg.wf_family = parse_wf_family(slurp(o.wf_family));
  cfg.cap_closure = o.cap_closure;
  cfg.check.cap_dag = o.cap_dag;
  cfg.check.seed = o.seed;
  for (const auto& [name, text] : o.bounds)
    if (!text.empty()) cfg.bounds[name] = parse_ratio(text);
  return cfg;
}

// Writes `name` into --out, or to stdout.  With --dot and no --out only the
// DOT text goes to stdout.
void emit(const Options& o, const std::string& stem, const std::string& json, const std::string& dot = {}) {
  if (!o.out.empty()) {
    fs::create_directories(o.out);
    std::ofstream(fs::path(o.out) / (stem + ".json")) << json;
    if (o.dot && !dot.empty()) std::ofstream(fs::path(o.out) / (stem + ".dot")) << dot;
    return;
  }
  std::cout << (o.dot && !dot.empty() ? dot : json);
}

Graph generate(const std::vector<std::string>& a, std::uint64_t seed) {
  if (a.empty()) throw PreconditionError("generate needs a kind");
  auto num = [&](std::size_t i) {
    if (i >= a.size()) throw PreconditionError("missing parameter for " + a[0]);
    try {
      int v = std::stoi(a[i]);
      if (v < 0) throw PreconditionError("negative parameter");
      return v;
    } catch (const std::logic_error&) {
      throw PreconditionError("bad parameter '" + a[i] + "'");
    }
  };
  const std::string& k = a[0];
  if (k == "hypercube") return gen::hypercube(num(1));
  if (k == "tree") return gen::random_tree(num(1), seed);
  if (k == "hamming") return gen::hamming(num(1), num(2));
  if (k == "path") return gen::path(num(1));
  if (k == "cycle") return gen::cycle(num(1));
  if (k == "complete") return gen::complete(num(1));
  if (k == "glued-squares") return gen::glued_squares(num(1));
  if (k == "product") {
    if (a.size() < 3) throw PreconditionError("product needs two graph files");
    auto fmt = [](const std::string& p) {
      return fs::path(p).extension() == ".json" ? GraphFormat::json : GraphFormat::edgelist;
    };
    return gen::cartesian_product(read_graph(a[1], fmt(a[1])), read_graph(a[2], fmt(a[2])));
  }
  throw PreconditionError("unknown generator '" + k + "'");
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "generate") {
    Graph g = generate(o.gen_args, o.seed);
    emit(o, "graph", to_json_graph(g), to_dot(g));
    return 0;
  }
  Graph g = load(o);
  if (cmd == "hyperplanes") {
    emit(o, "hyperplanes", hyperplanes_json(HyperplaneSystem(g)));
  } else if (cmd == "crossing" || cmd == "contact") {
    HyperplaneSystem hs(g);
    Graph h = cmd == "crossing" ? hs.crossing_graph() : hs.contact_graph();
    emit(o, cmd, to_json_graph(h), to_dot(h, cmd));
  } else if (cmd == "factor-system") {
    RunConfig cfg = config(o);
    if (cfg.pipeline == Pipeline::qm) {
      Bundle b = build_bundle(g, cfg);
      emit(o, "factor_system", factor_system_json(b.ph.system()));
    } else {
      emit(o, "factor_system", factor_system_json(minimal_factor_system(g, cfg.cap_closure)));
    }
  } else if (cmd == "augment") {
    Bundle b = build_bundle(g, config(o));
    emit(o, "augmented", b.ph.augmented().to_json(), b.ph.augmented().to_dot());
  } else if (cmd == "delta" || cmd == "bottleneck") {
    Graph target = g;
    if (o.target == "augmented") target = build_bundle(g, config(o)).ph.augmented().graph();
    else if (o.target != "input") throw PreconditionError("--target must be input or augmented");
    std::ostringstream js;
    if (cmd == "delta") {
      auto h = gromov_delta(target);
      js << "{\n  \"twice_delta\": " << h.twice_delta << ",\n  \"delta\": \"" << h.delta().str()
         << "\",\n  \"witness\": [";
      for (int i = 0; i < 4; ++i)
        js << (i ? ", " : "") << (h.witness[i] < 0 ? "null" : "\"" + target.label(h.witness[i]) + "\"");
      js << "]\n}\n";
    } else {
      auto b = bottleneck_delta(target);
      auto lab = [&](int v) { return v < 0 ? std::string("null") : "\"" + target.label(v) + "\""; };
      js << "{\n  \"delta\": " << b.delta << ",\n  \"x\": " << lab(b.x) << ",\n  \"y\": " << lab(b.y)
         << ",\n  \"midpoint\": " << lab(b.midpoint) << "\n}\n";
    }
    emit(o, cmd, js.str());
  } else if (cmd == "check-axioms" || cmd == "full-report") {
    FullReport r = full_report(g, config(o));
    if (cmd == "check-axioms") {
      emit(o, "axioms", axioms_json(r));
    } else if (!o.out.empty()) {
      emit(o, "report", report_json(r));
      std::ofstream(fs::path(o.out) / "report.txt") << report_text(r);
    } else {
      std::cout << report_json(r);
    }
    return r.ok ? 0 : 5;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchy structures on finite graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "graph file");
    sub->add_option("--format", o.format, "edgelist or json (default: by extension)")
        ->check(CLI::IsMember({"edgelist", "json"}));
    sub->add_option("--pipeline", o.pipeline, "generic or qm")->check(CLI::IsMember({"generic", "qm"}));
    sub->add_option("--w-adjacency", o.w_adjacency, "JSON list of clique-index pairs (generic pipeline)");
    sub->add_option("--wf-family", o.wf_family, "JSON list of per-domain W^F adjacencies (generic pipeline)");
    sub->add_option("--cap-closure", o.cap_closure, "largest factor system")->check(CLI::PositiveNumber);
    sub->add_option("--cap-dag", o.cap_dag, "largest geodesic interval examined")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--out", o.out, "output directory");
    sub->add_flag("--dot", o.dot, "also emit DOT");
  };

  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph");
  gen_cmd->add_option("args", o.gen_args, "kind and parameters")->required();
  gen_cmd->add_option("--seed", o.seed, "seed for random trees");
  gen_cmd->add_option("--out", o.out, "output directory");
  gen_cmd->add_flag("--dot", o.dot, "also emit DOT");

  for (const char* name : {"hyperplanes", "crossing", "contact", "factor-system", "augment", "delta", "bottleneck",
                           "check-axioms", "full-report"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "delta" || std::string(name) == "bottleneck")
      sub->add_option("--target", o.target, "input or augmented");
    if (std::string(name) == "check-axioms" || std::string(name) == "full-report")
      for (const char* check : kCheckNames) {
        std::string flag = std::string("--bound-") + check;
        std::replace(flag.begin(), flag.end(), '_', '-');
        sub->add_option(flag, o.bounds[check], std::string("pass threshold for ") + check);
      }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
