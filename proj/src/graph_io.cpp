#include "hhs/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

bool parse_int(const std::string& s, long long& out) {
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

Graph assemble(const std::vector<std::string>& order, const std::vector<std::pair<std::string, std::string>>& pairs,
               bool numeric_sort) {
  std::vector<std::string> labels = order;
  if (numeric_sort) {
    std::stable_sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      long long x = 0, y = 0;
      parse_int(a, x);
      parse_int(b, y);
      return x < y;
    });
  }
  std::map<std::string, int> id;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) id[labels[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) {
    if (a == b) throw ParseError("self-loop at vertex " + a);
    edges.push_back({id.at(a), id.at(b)});
  }
  const int n = static_cast<int>(labels.size());
  return Graph(n, edges, std::move(labels));
}

std::string json_label(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("vertex labels must be strings or integers");
}

nlohmann::ordered_json label_value(const std::string& label) {
  long long x = 0;
  if (parse_int(label, x) && std::to_string(x) == label) return x;
  return label;
}

}  // namespace

Graph parse_edgelist(std::istream& in) {
  std::vector<std::string> order;
  std::map<std::string, int> seen;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool all_int = true;
  auto note = [&](const std::string& s) {
    if (seen.emplace(s, static_cast<int>(order.size())).second) {
      order.push_back(s);
      long long x = 0;
      if (!parse_int(s, x)) all_int = false;
    }
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' or a single vertex");
    note(tok[0]);
    if (tok.size() == 2) {
      note(tok[1]);
      if (tok[0] == tok[1]) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
      pairs.emplace_back(tok[0], tok[1]);
    }
  }
  return assemble(order, pairs, all_int);
}

Graph parse_edgelist_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edgelist(in);
}

Graph parse_json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges")) throw ParseError("graph JSON needs an \"edges\" array");
  std::vector<std::string> order;
  std::map<std::string, int> seen;
  auto note = [&](const std::string& s) {
    if (seen.emplace(s, static_cast<int>(order.size())).second) order.push_back(s);
  };
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) {
      auto s = json_label(v);
      if (seen.count(s)) throw ParseError("duplicate vertex " + s);
      note(s);
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
    auto a = json_label(e[0]), b = json_label(e[1]);
    if (doc.contains("vertices") && (!seen.count(a) || !seen.count(b)))
      throw ParseError("edge endpoint not listed in \"vertices\": " + (seen.count(a) ? b : a));
    note(a);
    note(b);
    pairs.emplace_back(a, b);
  }
  return assemble(order, pairs, false);
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  throw ParseError("unknown graph format '" + name + "'");
}

Graph read_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  if (format == GraphFormat::edgelist) return parse_edgelist(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_graph(buf.str());
}

std::string to_json_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.order(); ++v) doc["vertices"].push_back(label_value(g.label(v)));
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({label_value(g.label(e.u)), label_value(g.label(e.v))});
  return doc.dump(2) + "\n";
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  std::vector<bool> touched(g.order(), false);
  for (const auto& e : g.edges()) touched[e.u] = touched[e.v] = true;
  for (int v = 0; v < g.order(); ++v)
    if (!touched[v]) out << g.label(v) << "\n";
  for (const auto& e : g.edges()) out << g.label(e.u) << " " << g.label(e.v) << "\n";
  return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name, const DotStyle* style) {
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << dot_quote(g.label(v));
    if (style && v < static_cast<int>(style->node_attrs.size()) && !style->node_attrs[v].empty())
      out << " [" << style->node_attrs[v] << "]";
    out << ";\n";
  }
  for (int id = 0; id < g.size(); ++id) {
    const auto& e = g.edges()[id];
    out << "  " << dot_quote(g.label(e.u)) << " -- " << dot_quote(g.label(e.v));
    if (style && id < static_cast<int>(style->edge_attrs.size()) && !style->edge_attrs[id].empty())
      out << " [" << style->edge_attrs[id] << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hhs
