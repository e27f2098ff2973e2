#pragma once

#include <string>
#include <vector>

#include "hhs/graph.hpp"

namespace hhs {

enum class Relation { equal, nested, contains, orthogonal, transverse };
std::string to_string(Relation r);

// A family of induced subgraphs of `host` containing the host and every
// nonempty vertex link, closed under nonempty intersection.  Domain identity
// is the vertex set.  Domains are ordered by decreasing size, ties broken
// lexicographically, so the host is domain 0 and every domain appears after
// all of its proper superdomains.
class FactorSystem {
 public:
  static constexpr int kDefaultCap = 10000;

  const Graph& host() const { return host_; }
  int size() const { return static_cast<int>(domains_.size()); }
  const VertexSet& domain(int i) const { return domains_[i]; }
  const std::vector<VertexSet>& domains() const { return domains_; }
  static constexpr int host_index() { return 0; }
  int find(const VertexSet& s) const;

  // Link of the domain in the host; may be empty.
  const VertexSet& link_of(int i) const { return links_[i]; }
  // Index of lk(F) as a domain, or -1 when the link is empty.
  int perp(int i) const { return perp_[i]; }

  // i ⊑ j.
  bool nested(int i, int j) const { return domains_[i].is_subset_of(domains_[j]); }
  bool proper_nested(int i, int j) const { return i != j && nested(i, j); }
  bool orthogonal(int i, int j) const { return domains_[j].is_subset_of(links_[i]); }
  bool transverse(int i, int j) const { return relation(i, j) == Relation::transverse; }
  // Relation of i to j: nested means i ⊊ j, contains means j ⊊ i.
  Relation relation(int i, int j) const;

  // Number of domains in the longest strict containment chain.
  int complexity() const { return complexity_; }
  // 0 for the host, otherwise 1 + the largest co-level among proper
  // superdomains.
  int co_level(int i) const { return co_level_[i]; }
  // Same recursion with the smallest co-level among proper superdomains.
  int co_level_min(int i) const { return co_level_min_[i]; }

  // How a domain entered the closure: a seed (both -1) or the intersection
  // of two earlier domains.
  struct Origin {
    int a = -1;
    int b = -1;
  };
  const Origin& origin(int i) const { return origins_[i]; }

  // Domains nested in `i` (including i), in system order.
  std::vector<int> nested_in(int i) const;

 private:
  friend FactorSystem close_factor_system(const Graph& host, const std::vector<VertexSet>& seeds, int cap);
  Graph host_;
  std::vector<VertexSet> domains_;
  std::vector<VertexSet> links_;
  std::vector<int> perp_;
  std::vector<int> co_level_;
  std::vector<int> co_level_min_;
  std::vector<Origin> origins_;
  int complexity_ = 0;
};

// Least family containing the seeds and closed under nonempty intersection.
// The seeds must include the host and every nonempty vertex link
// (PreconditionError otherwise); CapExceeded past `cap` domains.
FactorSystem close_factor_system(const Graph& host, const std::vector<VertexSet>& seeds,
                                 int cap = FactorSystem::kDefaultCap);

// Closure of the host together with all nonempty vertex links.
FactorSystem minimal_factor_system(const Graph& host, int cap = FactorSystem::kDefaultCap);

// Checks that the family is a factor system: host present, every nonempty
// vertex link present, closed under nonempty intersection.  Returns an empty
// string on success, otherwise a description of the first violation.
std::string factor_system_violation(const Graph& host, const std::vector<VertexSet>& family);

// The domains nested in `i`, re-expressed on the induced graph of domain i,
// ordered as in the ambient system.  The result must itself be a factor
// system of that graph.
struct InducedSystem {
  InducedGraph graph;
  std::vector<int> ambient_index;  // local domain -> ambient domain
  std::vector<VertexSet> family;   // in local vertex ids
};
InducedSystem induced_system(const FactorSystem& fs, int i);

}  // namespace hhs
