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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mgis/graph.hpp"

using namespace mgis;
using namespace mgis::fixtures;

namespace {

// Independent path count: #vertices plus the entry sums of the powers of
// the edge-multiplicity adjacency matrix.
std::size_t count_paths_by_matrix(const DirectedGraph& g,
                                  std::size_t max_len) {
  const std::size_t n = g.num_vertices;
  std::vector<std::vector<std::size_t>> a(n, std::vector<std::size_t>(n, 0));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ++a[g.edge_src[e]][g.edge_rng[e]];
  }
  std::size_t total = n;
  auto power = a;
  for (std::size_t k = 1; k <= max_len; ++k) {
    std::size_t level = 0;
    for (const auto& row : power) {
      level = std::accumulate(row.begin(), row.end(), level);
    }
    if (level == 0) {
      break;
    }
    total += level;
    std::vector<std::vector<std::size_t>> next(n,
                                               std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          next[i][j] += power[i][l] * a[l][j];
        }
      }
    }
    power = std::move(next);
  }
  return total;
}

// Exhaustive isomorphism search over all vertex and edge bijections; only
// for the tiny graphs in this file.
bool brute_force_isomorphic(const DirectedGraph& g, const DirectedGraph& h,
                            std::size_t* count = nullptr) {
  if (g.num_vertices != h.num_vertices || g.num_edges() != h.num_edges()) {
    return false;
  }
  std::vector<std::size_t> vperm(g.num_vertices);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::size_t found = 0;
  do {
    std::vector<std::size_t> eperm(g.num_edges());
    std::iota(eperm.begin(), eperm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t e = 0; e < g.num_edges() && ok; ++e) {
        ok = h.edge_src[eperm[e]] == vperm[g.edge_src[e]] &&
             h.edge_rng[eperm[e]] == vperm[g.edge_rng[e]];
      }
      found += ok;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(vperm.begin(), vperm.end()));
  if (count != nullptr) {
    *count = found;
  }
  return found > 0;
}

std::vector<std::string> path_names(const DirectedGraph& g,
                                    const std::vector<Path>& paths) {
  std::vector<std::string> out;
  for (const Path& p : paths) {
    out.push_back(path_name(g, p));
  }
  return out;
}

}  // namespace

TEST_CASE("is_acyclic", "[graph]") {
  REQUIRE(is_acyclic(g2()));
  REQUIRE(is_acyclic(g4()));
  REQUIRE_FALSE(is_acyclic(loop_graph()));
  DirectedGraph two_cycle;
  const auto a = two_cycle.add_vertex("a");
  const auto b = two_cycle.add_vertex("b");
  two_cycle.add_edge(a, b);
  two_cycle.add_edge(b, a);
  REQUIRE_FALSE(is_acyclic(two_cycle));
}

TEST_CASE("enumerate_paths", "[graph]") {
  SECTION("G2 has paths u, v, x") {
    const auto g = g2();
    REQUIRE(path_names(g, enumerate_paths(g)) ==
            std::vector<std::string>{"u", "v", "x"});
  }
  SECTION("G4 has six paths, the only composite being zx") {
    const auto g = g4();
    REQUIRE(path_names(g, enumerate_paths(g)) ==
            std::vector<std::string>{"u", "v", "w", "x", "z", "zx"});
  }
  SECTION("G1 has the empty path only") {
    const auto g = g1();
    REQUIRE(path_names(g, enumerate_paths(g)) ==
            std::vector<std::string>{"v"});
  }
  SECTION("bounded enumeration on a cyclic graph") {
    const auto g = loop_graph();
    REQUIRE(enumerate_paths(g, 3).size() == 4);  // v, l, ll, lll
    REQUIRE_THROWS_MATCHES(enumerate_paths(g), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::CyclicWithoutBound;
                           }));
  }
  SECTION("counts match the adjacency-matrix tally") {
    for (const auto& g : {g1(), g2(), g3(), g4()}) {
      REQUIRE(enumerate_paths(g).size() == count_paths_by_matrix(g, 10));
    }
    REQUIRE(enumerate_paths(loop_graph(), 5).size() ==
            count_paths_by_matrix(loop_graph(), 5));
  }
  SECTION("every enumerated path is valid and sources agree") {
    const auto g = g4();
    for (const Path& p : enumerate_paths(g)) {
      REQUIRE(is_valid_path(g, p));
    }
  }
}

TEST_CASE("path prefix arithmetic", "[graph]") {
  const auto g = g4();
  const auto paths = enumerate_paths(g);  // u, v, w, x, z, zx
  const Path& at_u = paths[0];
  const Path& at_w = paths[2];
  const Path& x = paths[3];
  const Path& z = paths[4];
  const Path& zx = paths[5];

  SECTION("empty path at the range is a prefix") {
    REQUIRE(is_prefix(g, at_w, zx));
    REQUIRE_FALSE(is_prefix(g, at_u, zx));  // wrong vertex
    auto rest = strip_prefix(g, zx, at_w);
    REQUIRE(rest.has_value());
    REQUIRE(*rest == zx);
  }
  SECTION("proper prefix splits off the tail") {
    auto rest = strip_prefix(g, zx, z);
    REQUIRE(rest.has_value());
    REQUIRE(*rest == x);
    REQUIRE(concat(g, z, *rest) == zx);
  }
  SECTION("a path is a prefix of itself with empty remainder") {
    auto rest = strip_prefix(g, zx, zx);
    REQUIRE(rest.has_value());
    REQUIRE(rest->empty());
    REQUIRE(rest->source == path_source(g, zx));
  }
  SECTION("non-prefixes are rejected") {
    REQUIRE_FALSE(strip_prefix(g, zx, x).has_value());
    REQUIRE_FALSE(strip_prefix(g, x, z).has_value());
  }
  SECTION("concat requires composability") {
    REQUIRE_THROWS_AS(concat(g, x, z), Error);  // s(x)=u, r(z)=w
    REQUIRE(path_name(g, concat(g, z, x)) == "zx");
  }
}

TEST_CASE("gis arithmetic", "[graph]") {
  SECTION("(u,x)(x,u) = (u,u) in S(G2)") {
    const auto g = g2();
    const auto paths = enumerate_paths(g);  // u, v, x
    const auto ux = GisElement::make_pair(g, paths[0], paths[2]);
    const auto xu = GisElement::make_pair(g, paths[2], paths[0]);
    REQUIRE(gis_name(g, gis_multiply(g, ux, xu)) == "(u,u)");
  }
  SECTION("(x,x)(y,y) = 0 in S(G3)") {
    const auto g = g3();
    const auto x = edge_path(g, 0);
    const auto y = edge_path(g, 1);
    const auto xx = GisElement::make_pair(g, x, x);
    const auto yy = GisElement::make_pair(g, y, y);
    REQUIRE(gis_multiply(g, xx, yy).zero);
  }
  SECTION("(a,b)(b,b) = (a,b)") {
    const auto g = g3();
    const auto paths = enumerate_paths(g);
    for (const Path& a : paths) {
      for (const Path& b : paths) {
        if (path_source(g, a) != path_source(g, b)) {
          continue;
        }
        const auto ab = GisElement::make_pair(g, a, b);
        const auto bb = GisElement::make_pair(g, b, b);
        REQUIRE(gis_multiply(g, ab, bb) == ab);
      }
    }
  }
  SECTION("zero is absorbing") {
    const auto g = g2();
    const auto vv =
        GisElement::make_pair(g, empty_path(1), empty_path(1));
    REQUIRE(gis_multiply(g, vv, GisElement::make_zero()).zero);
    REQUIRE(gis_multiply(g, GisElement::make_zero(), vv).zero);
  }
  SECTION("inverse swaps the legs and is an involution") {
    const auto g = g3();
    const auto paths = enumerate_paths(g);
    for (const Path& a : paths) {
      for (const Path& b : paths) {
        if (path_source(g, a) != path_source(g, b)) {
          continue;
        }
        const auto ab = GisElement::make_pair(g, a, b);
        const auto star = gis_inverse(ab);
        REQUIRE(star.left == b);
        REQUIRE(gis_inverse(star) == ab);
        REQUIRE(gis_multiply(g, gis_multiply(g, ab, star), ab) == ab);
      }
    }
  }
  SECTION("symbolic products on a cyclic graph associate") {
    // all pairs over paths of length <= 3 on the one-loop graph
    const auto g = loop_graph();
    const auto paths = enumerate_paths(g, 3);
    std::vector<GisElement> elems{GisElement::make_zero()};
    for (const Path& a : paths) {
      for (const Path& b : paths) {
        elems.push_back(GisElement::make_pair(g, a, b));
      }
    }
    REQUIRE(elems.size() == 17);
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        for (const auto& c : elems) {
          REQUIRE(gis_multiply(g, gis_multiply(g, a, b), c) ==
                  gis_multiply(g, a, gis_multiply(g, b, c)));
        }
      }
    }
  }
  SECTION("elements of another graph are rejected") {
    const auto g = g2();
    const auto h = g4();
    const auto foreign =
        GisElement::make_pair(h, edge_path(h, 1), edge_path(h, 1));
    const auto local =
        GisElement::make_pair(g, empty_path(0), empty_path(0));
    REQUIRE_THROWS_MATCHES(gis_multiply(g, local, foreign), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::GraphMismatch;
                           }));
  }
}

TEST_CASE("build_gis", "[graph]") {
  SECTION("fixture sizes: 2, 6, 11, 15") {
    REQUIRE(build_gis(g1()).semigroup.size() == 2);
    REQUIRE(build_gis(g2()).semigroup.size() == 6);
    REQUIRE(build_gis(g3()).semigroup.size() == 11);
    REQUIRE(build_gis(g4()).semigroup.size() == 15);
  }
  SECTION("S(G2) element order and names are canonical") {
    const auto gis = build_gis(g2());
    std::vector<std::string> names;
    for (Elem i = 0; i < gis.semigroup.size(); ++i) {
      names.push_back(gis.semigroup.name(i));
    }
    REQUIRE(names == std::vector<std::string>{"0", "(u,u)", "(u,x)", "(v,v)",
                                              "(x,u)", "(x,x)"});
  }
  SECTION("zero, combinatorial, idempotents are the (a,a) pairs") {
    for (const auto& g : {g1(), g2(), g3(), g4()}) {
      const auto gis = build_gis(g);
      REQUIRE(gis.semigroup.zero() == Elem{0});
      REQUIRE(green_data(gis.semigroup).combinatorial);
      for (Elem i = 0; i < gis.semigroup.size(); ++i) {
        const auto& el = gis.elements[i];
        const bool diagonal = el.zero || el.left == el.right;
        REQUIRE(gis.semigroup.is_idempotent(i) == diagonal);
      }
    }
  }
  SECTION("(a,a) <= (b,b) iff b is a prefix of a") {
    for (const auto& g : {g2(), g3(), g4()}) {
      const auto gis = build_gis(g);
      for (Elem i = 0; i < gis.semigroup.size(); ++i) {
        for (Elem j = 0; j < gis.semigroup.size(); ++j) {
          const auto& a = gis.elements[i];
          const auto& b = gis.elements[j];
          if (a.zero || b.zero || !gis.semigroup.is_idempotent(i) ||
              !gis.semigroup.is_idempotent(j)) {
            continue;
          }
          REQUIRE(natural_leq(gis.semigroup, i, j) ==
                  is_prefix(g, b.left, a.left));
        }
      }
    }
  }
  SECTION("labelling is bidirectional") {
    const auto gis = build_gis(g4());
    for (Elem i = 0; i < gis.semigroup.size(); ++i) {
      REQUIRE(gis.index_of(gis.elements[i]) == i);
    }
  }
  SECTION("cyclic input is rejected") {
    REQUIRE_THROWS_MATCHES(build_gis(loop_graph()), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NotAcyclic;
                           }));
  }
  SECTION("the empty graph yields the zero semigroup") {
    REQUIRE(build_gis(DirectedGraph{}).semigroup.size() == 1);
  }
}

TEST_CASE("graph_isomorphism", "[graph]") {
  SECTION("G2 against a renamed copy") {
    DirectedGraph h;
    const auto p = h.add_vertex("p");
    const auto q = h.add_vertex("q");
    h.add_edge(q, p, "w");  // q -> p mirrors u -> v after remapping
    const auto iso = graph_isomorphism(g2(), h);
    REQUIRE(iso.has_value());
    REQUIRE(iso->vertex_map == std::vector<std::size_t>{1, 0});
    REQUIRE(iso->edge_map == std::vector<std::size_t>{0});
  }
  SECTION("G2 vs G3 differ in edge count") {
    REQUIRE_FALSE(graph_isomorphism(g2(), g3()).has_value());
  }
  SECTION("G3 against itself with swapped edge names") {
    DirectedGraph h;
    const auto u = h.add_vertex("u");
    const auto v = h.add_vertex("v");
    h.add_edge(u, v, "y");
    h.add_edge(u, v, "x");
    REQUIRE(graph_isomorphism(g3(), h).has_value());
    std::size_t autos = 0;
    brute_force_isomorphic(g3(), g3(), &autos);
    REQUIRE(autos == 2);  // the parallel-edge swap
  }
  SECTION("agrees with brute force on small pairs") {
    DirectedGraph reversed_g4;
    {
      const auto u = reversed_g4.add_vertex("u");
      const auto v = reversed_g4.add_vertex("v");
      const auto w = reversed_g4.add_vertex("w");
      reversed_g4.add_edge(w, v);
      reversed_g4.add_edge(v, u);
    }
    DirectedGraph fan;
    {
      const auto u = fan.add_vertex("u");
      const auto v = fan.add_vertex("v");
      const auto w = fan.add_vertex("w");
      fan.add_edge(u, v);
      fan.add_edge(u, w);
    }
    const std::vector<DirectedGraph> graphs{
        g1(), g2(), g3(), g4(), loop_graph(), reversed_g4, fan};
    for (const auto& a : graphs) {
      for (const auto& b : graphs) {
        REQUIRE(graph_isomorphism(a, b).has_value() ==
                brute_force_isomorphic(a, b));
      }
    }
  }
  SECTION("a found isomorphism preserves sources and ranges") {
    DirectedGraph h;
    const auto v0 = h.add_vertex();
    const auto v1 = h.add_vertex();
    const auto v2 = h.add_vertex();
    h.add_edge(v2, v0);
    h.add_edge(v0, v1);
    const auto iso = graph_isomorphism(g4(), h);
    REQUIRE(iso.has_value());
    const auto g = g4();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      REQUIRE(h.edge_src[iso->edge_map[e]] == iso->vertex_map[g.edge_src[e]]);
      REQUIRE(h.edge_rng[iso->edge_map[e]] == iso->vertex_map[g.edge_rng[e]]);
    }
  }
}
