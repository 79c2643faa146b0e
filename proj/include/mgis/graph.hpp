// Copyright 2026 the mgis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Directed multigraphs, path arithmetic and graph inverse semigroups.
// Paths are stored range-to-source, matching the composition convention
// that alpha*beta needs s(alpha) = r(beta). Empty paths are first-class
// values, one per vertex. Symbolic element arithmetic works on any graph;
// whole-semigroup construction needs a finite acyclic one.

#ifndef MGIS_GRAPH_HPP_
#define MGIS_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace mgis {

struct DirectedGraph {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> edge_src, edge_rng;
  std::vector<std::string> vertex_names, edge_names;

  std::size_t num_edges() const { return edge_src.size(); }

  std::size_t add_vertex(std::string name = "") {
    vertex_names.push_back(name.empty() ? "v" + std::to_string(num_vertices)
                                        : std::move(name));
    return num_vertices++;
  }

  std::size_t add_edge(std::size_t src, std::size_t rng,
                       std::string name = "") {
    if (src >= num_vertices || rng >= num_vertices) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    edge_names.push_back(name.empty() ? "x" + std::to_string(num_edges())
                                      : std::move(name));
    edge_src.push_back(src);
    edge_rng.push_back(rng);
    return num_edges() - 1;
  }

  std::string vertex_name(std::size_t v) const {
    return v < vertex_names.size() && !vertex_names[v].empty()
               ? vertex_names[v]
               : "v" + std::to_string(v);
  }

  std::string edge_name(std::size_t e) const {
    return e < edge_names.size() && !edge_names[e].empty()
               ? edge_names[e]
               : "x" + std::to_string(e);
  }
};

inline bool is_acyclic(const DirectedGraph& g) {
  // Kahn's algorithm on out-degrees; a leftover vertex means a cycle.
  std::vector<std::size_t> out_deg(g.num_vertices, 0);
  std::vector<std::vector<std::size_t>> into(g.num_vertices);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ++out_deg[g.edge_src[e]];
    into[g.edge_rng[e]].push_back(g.edge_src[e]);
  }
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    if (out_deg[v] == 0) {
      queue.push_back(v);
    }
  }
  std::size_t removed = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.back();
    queue.pop_back();
    ++removed;
    for (std::size_t u : into[v]) {
      if (--out_deg[u] == 0) {
        queue.push_back(u);
      }
    }
  }
  return removed == g.num_vertices;
}

// A finite directed path. `edges` runs range-to-source: edges.front() is
// the final (range-side) edge, edges.back() the first (source-side) one.
// `source` is the path's source vertex; for the empty path it is the
// vertex the path sits at.
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> edges;

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }

  bool operator==(const Path& o) const {
    return source == o.source && edges == o.edges;
  }
  bool operator<(const Path& o) const {
    return std::tie(edges, source) < std::tie(o.edges, o.source);
  }
};

inline Path empty_path(std::size_t vertex) { return Path{vertex, {}}; }

inline Path edge_path(const DirectedGraph& g, std::size_t edge) {
  return Path{g.edge_src[edge], {edge}};
}

inline std::size_t path_source(const DirectedGraph&, const Path& p) {
  return p.source;
}

inline std::size_t path_range(const DirectedGraph& g, const Path& p) {
  return p.empty() ? p.source : g.edge_rng[p.edges.front()];
}

inline bool is_valid_path(const DirectedGraph& g, const Path& p) {
  if (p.empty()) {
    return p.source < g.num_vertices;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= g.num_edges()) {
      return false;
    }
    if (i + 1 < p.edges.size() &&
        g.edge_src[p.edges[i]] != g.edge_rng[p.edges[i + 1]]) {
      return false;
    }
  }
  return p.source == g.edge_src[p.edges.back()];
}

// alpha * beta for s(alpha) = r(beta); concatenation in range-to-source
// order.
inline Path concat(const DirectedGraph& g, const Path& a, const Path& b) {
  if (path_source(g, a) != path_range(g, b)) {
    throw Error(ErrorCode::InvalidArgument,
                "concat: paths are not composable");
  }
  if (a.empty()) {
    return b;
  }
  Path out = a;
  out.source = b.source;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

// If alpha = beta * gamma returns gamma, else nothing. The empty path at
// r(alpha) is a prefix of alpha.
inline std::optional<Path> strip_prefix(const DirectedGraph& g,
                                        const Path& alpha, const Path& beta) {
  if (beta.length() > alpha.length()) {
    return std::nullopt;
  }
  if (beta.empty()) {
    return beta.source == path_range(g, alpha) ? std::optional<Path>(alpha)
                                               : std::nullopt;
  }
  if (!std::equal(beta.edges.begin(), beta.edges.end(), alpha.edges.begin())) {
    return std::nullopt;
  }
  Path rest;
  rest.edges.assign(alpha.edges.begin() + beta.length(), alpha.edges.end());
  rest.source = rest.empty() ? beta.source : alpha.source;
  return rest;
}

inline bool is_prefix(const DirectedGraph& g, const Path& beta,
                      const Path& alpha) {
  return strip_prefix(g, alpha, beta).has_value();
}

inline std::string path_name(const DirectedGraph& g, const Path& p) {
  if (p.empty()) {
    return g.vertex_name(p.source);
  }
  std::string out;
  for (std::size_t e : p.edges) {
    out += g.edge_name(e);
  }
  return out;
}

// All paths of length <= max_len in deterministic order: by length, then
// lexicographically on the edge word (empty paths by vertex). Unbounded
// enumeration requires an acyclic graph.
inline std::vector<Path> enumerate_paths(
    const DirectedGraph& g,
    std::optional<std::size_t> max_len = std::nullopt) {
  if (!max_len && !is_acyclic(g)) {
    throw Error(ErrorCode::CyclicWithoutBound,
                "unbounded path enumeration on a cyclic graph");
  }
  std::vector<std::vector<std::size_t>> edges_into(g.num_vertices);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    edges_into[g.edge_rng[e]].push_back(e);
  }

  std::vector<Path> all;
  std::vector<Path> level;
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    level.push_back(empty_path(v));
  }
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (max_len && all.back().length() >= *max_len) {
      break;
    }
    std::vector<Path> next;
    for (const Path& p : level) {
      // extend at the source side: append an edge whose range is s(p)
      for (std::size_t e : edges_into[p.source]) {
        Path q = p;
        q.edges.push_back(e);
        q.source = g.edge_src[e];
        next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

// An element of the graph inverse semigroup: zero, or a pair of paths with
// a common source.
struct GisElement {
  bool zero = true;
  Path left, right;  // (alpha, beta)

  static GisElement make_zero() { return GisElement{}; }

  static GisElement make_pair(const DirectedGraph& g, Path alpha, Path beta) {
    if (path_source(g, alpha) != path_source(g, beta)) {
      throw Error(ErrorCode::InvalidArgument,
                  "gis element paths must share a source");
    }
    return GisElement{false, std::move(alpha), std::move(beta)};
  }

  bool operator==(const GisElement& o) const {
    if (zero != o.zero) {
      return false;
    }
    return zero || (left == o.left && right == o.right);
  }
  bool operator<(const GisElement& o) const {
    if (zero != o.zero) {
      return zero;  // zero sorts first
    }
    return !zero && std::tie(left, right) < std::tie(o.left, o.right);
  }
};

inline void check_same_graph(const DirectedGraph& g, const GisElement& a) {
  if (!a.zero && (!is_valid_path(g, a.left) || !is_valid_path(g, a.right))) {
    throw Error(ErrorCode::GraphMismatch,
                "gis element does not belong to this graph");
  }
}

// (alpha,beta)(gamma,nu) = (alpha gamma', nu) if gamma = beta gamma',
//                          (alpha, nu beta')  if beta = gamma beta',
//                          0 otherwise.
inline GisElement gis_multiply(const DirectedGraph& g, const GisElement& a,
                               const GisElement& b) {
  check_same_graph(g, a);
  check_same_graph(g, b);
  if (a.zero || b.zero) {
    return GisElement::make_zero();
  }
  if (auto rest = strip_prefix(g, b.left, a.right)) {
    return GisElement::make_pair(g, concat(g, a.left, *rest), b.right);
  }
  if (auto rest = strip_prefix(g, a.right, b.left)) {
    return GisElement::make_pair(g, a.left, concat(g, b.right, *rest));
  }
  return GisElement::make_zero();
}

inline GisElement gis_inverse(const GisElement& a) {
  if (a.zero) {
    return a;
  }
  return GisElement{false, a.right, a.left};
}

inline std::string gis_name(const DirectedGraph& g, const GisElement& a) {
  if (a.zero) {
    return "0";
  }
  return "(" + path_name(g, a.left) + "," + path_name(g, a.right) + ")";
}

// S(Gamma) as a validated multiplication table plus the bidirectional
// labelling. Element 0 is the zero; pairs follow in path-enumeration order.
struct GisSemigroup {
  DirectedGraph graph;
  ValidatedSemigroup semigroup;
  std::vector<GisElement> elements;
  std::map<GisElement, Elem> index;

  Elem index_of(const GisElement& a) const {
    auto it = index.find(a);
    if (it == index.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "element does not belong to this graph inverse semigroup");
    }
    return it->second;
  }
};

inline GisSemigroup build_gis(const DirectedGraph& g) {
  if (!is_acyclic(g)) {
    throw Error(ErrorCode::NotAcyclic,
                "build_gis requires a finite acyclic graph");
  }
  const std::vector<Path> paths = enumerate_paths(g);

  std::vector<GisElement> elements;
  elements.push_back(GisElement::make_zero());
  for (const Path& alpha : paths) {
    for (const Path& beta : paths) {
      if (path_source(g, alpha) == path_source(g, beta)) {
        elements.push_back(GisElement{false, alpha, beta});
      }
    }
  }

  std::map<GisElement, Elem> index;
  for (Elem i = 0; i < elements.size(); ++i) {
    index[elements[i]] = i;
  }

  MultiplicationTable t;
  t.n = elements.size();
  t.zero = 0;
  t.mul.resize(t.n * t.n);
  t.names.resize(t.n);
  for (Elem i = 0; i < t.n; ++i) {
    t.names[i] = gis_name(g, elements[i]);
    for (Elem j = 0; j < t.n; ++j) {
      t.mul[i * t.n + j] = index.at(gis_multiply(g, elements[i], elements[j]));
    }
  }

  ValidationResult r = validate(std::move(t));
  if (!r.ok()) {
    throw std::logic_error("build_gis: S(Gamma) failed validation");
  }
  return GisSemigroup{g, *std::move(r.semigroup), std::move(elements),
                      std::move(index)};
}

struct GraphIso {
  std::vector<std::size_t> vertex_map, edge_map;
};

// Bijections preserving src and rng, found by backtracking on the vertex
// map with in/out-degree pruning. Parallel edges pair up in index order.
inline std::optional<GraphIso> graph_isomorphism(const DirectedGraph& g,
                                                 const DirectedGraph& h,
                                                 std::size_t budget = 1000000) {
  if (g.num_vertices != h.num_vertices || g.num_edges() != h.num_edges()) {
    return std::nullopt;
  }
  const std::size_t n = g.num_vertices;

  auto degrees = [](const DirectedGraph& x) {
    std::vector<std::pair<std::size_t, std::size_t>> d(x.num_vertices, {0, 0});
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
      ++d[x.edge_src[e]].first;
      ++d[x.edge_rng[e]].second;
    }
    return d;
  };
  const auto deg_g = degrees(g), deg_h = degrees(h);

  auto pair_counts = [](const DirectedGraph& x) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> m;
    for (std::size_t e = 0; e < x.num_edges(); ++e) {
      m[{x.edge_src[e], x.edge_rng[e]}].push_back(e);
    }
    return m;
  };
  const auto pc_g = pair_counts(g), pc_h = pair_counts(h);

  std::vector<std::size_t> vmap(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;

  auto consistent = [&](std::size_t v, std::size_t w) {
    if (deg_g[v] != deg_h[w]) {
      return false;
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (vmap[u] == SIZE_MAX && u != v) {
        continue;
      }
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const std::size_t fa = (a == v) ? w : vmap[a];
        const std::size_t fb = (b == v) ? w : vmap[b];
        auto it_g = pc_g.find({a, b});
        auto it_h = pc_h.find({fa, fb});
        const std::size_t cnt_g = it_g == pc_g.end() ? 0 : it_g->second.size();
        const std::size_t cnt_h = it_h == pc_h.end() ? 0 : it_h->second.size();
        if (cnt_g != cnt_h) {
          return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) {
      return true;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w]) {
        continue;
      }
      if (++nodes > budget) {
        throw Error(ErrorCode::SearchExceedsLimit,
                    "graph_isomorphism: search budget exceeded");
      }
      if (!consistent(v, w)) {
        continue;
      }
      vmap[v] = w;
      used[w] = true;
      if (self(self, v + 1)) {
        return true;
      }
      vmap[v] = SIZE_MAX;
      used[w] = false;
    }
    return false;
  };

  if (!search(search, 0)) {
    return std::nullopt;
  }

  std::vector<std::size_t> emap(g.num_edges(), SIZE_MAX);
  for (const auto& [pair, edges] : pc_g) {
    const auto it = pc_h.find({vmap[pair.first], vmap[pair.second]});
    if (it == pc_h.end() || it->second.size() != edges.size()) {
      return std::nullopt;  // cannot happen after a consistent search
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      emap[edges[k]] = it->second[k];
    }
  }
  return GraphIso{std::move(vmap), std::move(emap)};
}

}  // namespace mgis

#endif  // MGIS_GRAPH_HPP_
