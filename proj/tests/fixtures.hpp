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
// Desk-scale fixtures shared by the unit and acceptance suites. The
// multiplication tables are frozen from hand computation so they stay
// independent of the code under test.

#ifndef MGIS_TESTS_FIXTURES_HPP_
#define MGIS_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "mgis/graph.hpp"
#include "mgis/partial_bijection.hpp"
#include "mgis/semigroup.hpp"

namespace mgis::fixtures {

inline MultiplicationTable table_of(std::size_t n, std::vector<Elem> mul,
                                    long long zero,
                                    std::vector<std::string> names) {
  MultiplicationTable t;
  t.n = n;
  t.mul = std::move(mul);
  if (zero >= 0) {
    t.zero = static_cast<Elem>(zero);
  }
  t.names = std::move(names);
  return t;
}

// Meet semilattice {e, 0}; zero at index 0.
inline MultiplicationTable s2_table() {
  return table_of(2,
                  {0, 0,   //
                   0, 1},
                  0, {"0", "e"});
}

// Meet semilattice {g, e, f, m, 0}: e, f incomparable below g, ef = m != 0.
inline MultiplicationTable sl5_table() {
  return table_of(5,
                  {0, 1, 2, 3, 4,   //
                   1, 1, 3, 3, 4,   //
                   2, 3, 2, 3, 4,   //
                   3, 3, 3, 3, 4,   //
                   4, 4, 4, 4, 4},
                  4, {"g", "e", "f", "m", "0"});
}

// Meet semilattice {e, f, m, 0} with maximal e, f and ef = m: fails (P3).
inline MultiplicationTable sl4_table() {
  return table_of(4,
                  {0, 2, 2, 3,   //
                   2, 1, 2, 3,   //
                   2, 2, 2, 3,   //
                   3, 3, 3, 3},
                  3, {"e", "f", "m", "0"});
}

// Two-element group {1, a} with a zero adjoined.
inline MultiplicationTable z2_0_table() {
  return table_of(3,
                  {0, 1, 2,   //
                   1, 0, 2,   //
                   2, 2, 2},
                  2, {"1", "a", "0"});
}

// The 5-element Brandt semigroup of rank <= 1 partial bijections on {1,2},
// closed by hand: 0 = empty, 1 = {1->1}, 2 = {1->2}, 3 = {2->1},
// 4 = {2->2}, with (ab)(x) = a(b(x)).
inline MultiplicationTable b2_table() {
  return table_of(5,
                  {0, 0, 0, 0, 0,   //
                   0, 1, 0, 3, 0,   //
                   0, 2, 0, 4, 0,   //
                   0, 0, 1, 0, 3,   //
                   0, 0, 2, 0, 4},
                  0, {"[-,-]", "[1,-]", "[2,-]", "[-,1]", "[-,2]"});
}

// Left-zero semigroup {a, b}: associative and regular, idempotents do not
// commute.
inline MultiplicationTable left_zero_table() {
  return table_of(2, {0, 0, 1, 1}, -1, {"a", "b"});
}

// Null semigroup {0, a}: every product is 0, so a has no inverse.
inline MultiplicationTable null2_table() {
  return table_of(2, {0, 0, 0, 0}, -1, {"0", "a"});
}

// (1*1)*1 = 1 but 1*(1*1) = 0.
inline MultiplicationTable nonassoc_table() {
  return table_of(2, {0, 1, 0, 0}, -1, {"0", "1"});
}

inline ValidatedSemigroup s2() { return validate_or_throw(s2_table()); }
inline ValidatedSemigroup sl5() { return validate_or_throw(sl5_table()); }
inline ValidatedSemigroup sl4() { return validate_or_throw(sl4_table()); }
inline ValidatedSemigroup z2_0() { return validate_or_throw(z2_0_table()); }
inline ValidatedSemigroup b2() { return validate_or_throw(b2_table()); }

// One vertex, no edges.
inline DirectedGraph g1() {
  DirectedGraph g;
  g.add_vertex("v");
  return g;
}

// u --x--> v.
inline DirectedGraph g2() {
  DirectedGraph g;
  const auto u = g.add_vertex("u");
  const auto v = g.add_vertex("v");
  g.add_edge(u, v, "x");
  return g;
}

// Parallel edges u --x--> v and u --y--> v.
inline DirectedGraph g3() {
  DirectedGraph g;
  const auto u = g.add_vertex("u");
  const auto v = g.add_vertex("v");
  g.add_edge(u, v, "x");
  g.add_edge(u, v, "y");
  return g;
}

// Chain u --x--> v --z--> w.
inline DirectedGraph g4() {
  DirectedGraph g;
  const auto u = g.add_vertex("u");
  const auto v = g.add_vertex("v");
  const auto w = g.add_vertex("w");
  g.add_edge(u, v, "x");
  g.add_edge(v, w, "z");
  return g;
}

// Single loop at v.
inline DirectedGraph loop_graph() {
  DirectedGraph g;
  const auto v = g.add_vertex("v");
  g.add_edge(v, v, "l");
  return g;
}

inline PartialBijection pb(std::vector<long long> one_based) {
  PartialBijection p{std::vector<std::size_t>(one_based.size(),
                                              PartialBijection::kUndefined)};
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    if (one_based[i] > 0) {
      p.img[i] = static_cast<std::size_t>(one_based[i] - 1);
    }
  }
  return p;
}

// The 2-element group generated by the full swap on {1,2}; has no zero.
inline ValidatedSemigroup swap_group() {
  return validate_or_throw(
      generate_from_partial_bijections(2, {pb({2, 1})}).table);
}

}  // namespace mgis::fixtures

#endif  // MGIS_TESTS_FIXTURES_HPP_
