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
// The graph Gamma_S attached to a finite inverse semigroup with zero: one
// vertex per nonzero D-class, one edge per nonzero cover of the class
// representative. On combinatorial input the canonical element family
// {s_alpha} indexed by paths of Gamma_S is defined; its multiplication law
// drives the decision whether S is Morita equivalent to a graph inverse
// semigroup and the explicit comparison morphism S(Gamma_S) -> S.

#ifndef MGIS_GAMMA_HPP_
#define MGIS_GAMMA_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "semigroup.hpp"
#include "semilattice.hpp"

namespace mgis {

enum class RepPolicy { MinIndex, MaxIndex };

struct GammaGraph {
  DirectedGraph graph;
  std::vector<std::size_t> vertex_class;  // vertex -> D-class id of S
  std::vector<Elem> representative;       // vertex -> chosen idempotent e_v
  // edge -> (v, f): range vertex and the cover idempotent 0 != f << e_v
  std::vector<std::pair<std::size_t, Elem>> edge_data;

  std::size_t vertex_of_class(std::size_t d_class_id) const {
    for (std::size_t v = 0; v < vertex_class.size(); ++v) {
      if (vertex_class[v] == d_class_id) {
        return v;
      }
    }
    throw Error(ErrorCode::InvalidArgument, "no vertex for this D-class");
  }
};

// Vertices are the nonzero D-classes in class-id order; the representative
// e_v is the least (or greatest) idempotent of the class, per policy. Edges
// x_{v,f} run from [f] to v, ordered by (v, f). The construction does not
// depend on the representative choice, which the policy parameter exists to
// exercise.
inline GammaGraph build_gamma(const ValidatedSemigroup& s,
                              RepPolicy policy = RepPolicy::MinIndex) {
  if (!s.has_zero()) {
    throw Error(ErrorCode::NoZero, "build_gamma requires a zero element");
  }
  const GreenData g = green_data(s);
  const IdempotentPoset poset = build_poset(s);
  const std::size_t zero_class = g.d_class[*s.zero()];

  GammaGraph out;
  std::vector<std::size_t> vertex_of_class(g.num_d, SIZE_MAX);
  for (std::size_t c = 0; c < g.num_d; ++c) {
    if (c == zero_class) {
      continue;
    }
    std::vector<Elem> idems;
    for (Elem e : s.idempotents()) {
      if (g.d_class[e] == c) {
        idems.push_back(e);
      }
    }
    const Elem rep =
        policy == RepPolicy::MinIndex ? idems.front() : idems.back();
    const std::size_t v =
        out.graph.add_vertex("[" + s.name(idems.front()) + "]");
    vertex_of_class[c] = v;
    out.vertex_class.push_back(c);
    out.representative.push_back(rep);
  }

  for (std::size_t v = 0; v < out.graph.num_vertices; ++v) {
    for (Elem f : nonzero_covers_of(poset, out.representative[v])) {
      const std::size_t src = vertex_of_class[g.d_class[f]];
      out.graph.add_edge(src, v,
                         "x(" + out.graph.vertex_name(v) + "," + s.name(f) +
                             ")");
      out.edge_data.emplace_back(v, f);
    }
  }

  // A directed cycle would force an infinite strictly descending idempotent
  // chain through the local isomorphisms, impossible in a finite semigroup.
  if (!is_acyclic(out.graph)) {
    throw std::logic_error("build_gamma: Gamma_S has a directed cycle");
  }
  return out;
}

// The family {s_alpha : alpha path of Gamma_S}: s_v = e_v on vertices, s_x
// the unique element with s_x* s_x = e_[f] and s_x s_x* = f on edges, and
// products of edge elements (range-to-source) on longer paths. Uniqueness
// needs combinatorial S.
struct CanonicalFamily {
  std::vector<Path> paths;      // enumeration order of Gamma_S
  std::vector<Elem> s;          // s[i] = s_{paths[i]}
  std::vector<Elem> e;          // e[i] = s_i s_i*
  std::vector<Elem> edge_elem;  // per Gamma_S edge: s_x
  std::map<Path, std::size_t> path_index;

  std::size_t index_of(const Path& p) const {
    auto it = path_index.find(p);
    if (it == path_index.end()) {
      throw Error(ErrorCode::InvalidArgument, "path not in Gamma_S");
    }
    return it->second;
  }
};

inline CanonicalFamily canonical_family(const ValidatedSemigroup& s,
                                        const GammaGraph& gamma) {
  {
    const GreenData g = green_data(s);
    if (!g.combinatorial) {
      for (Elem x = 0; x < s.size(); ++x) {
        for (Elem y = x + 1; y < s.size(); ++y) {
          if (g.h_class[x] == g.h_class[y]) {
            throw Error(ErrorCode::NotCombinatorial,
                        "canonical_family: H-class of " + s.name(x) +
                            " also contains " + s.name(y));
          }
        }
      }
    }
  }

  CanonicalFamily fam;
  fam.edge_elem.resize(gamma.graph.num_edges());
  for (std::size_t x = 0; x < gamma.graph.num_edges(); ++x) {
    const Elem f = gamma.edge_data[x].second;
    const Elem e_src = gamma.representative[gamma.graph.edge_src[x]];
    std::optional<Elem> found;
    for (Elem t = 0; t < s.size(); ++t) {
      if (s.dom(t) == e_src && s.ran(t) == f) {
        if (found) {
          throw Error(ErrorCode::MultipleWitnesses,
                      "two elements share domain " + s.name(e_src) +
                          " and range " + s.name(f));
        }
        found = t;
      }
    }
    if (!found) {
      throw std::logic_error(
          "canonical_family: no element links the cover to its class "
          "representative");
    }
    fam.edge_elem[x] = *found;
  }

  fam.paths = enumerate_paths(gamma.graph);
  fam.s.resize(fam.paths.size());
  fam.e.resize(fam.paths.size());
  for (std::size_t i = 0; i < fam.paths.size(); ++i) {
    const Path& p = fam.paths[i];
    Elem value;
    if (p.empty()) {
      value = gamma.representative[p.source];
    } else {
      value = fam.edge_elem[p.edges.front()];
      for (std::size_t k = 1; k < p.edges.size(); ++k) {
        value = s.mul(value, fam.edge_elem[p.edges[k]]);
      }
    }
    fam.s[i] = value;
    fam.e[i] = s.ran(value);
    fam.path_index[p] = i;
  }
  return fam;
}

struct LemmaViolation {
  std::size_t mu, nu, delta, eps;  // path indices into the family
  Elem got;
  std::optional<Elem> expected;  // nothing for the zero branch
  std::string branch;
};

struct LemmaReport {
  std::size_t tuples_checked = 0;
  std::size_t zero_branch_checked = 0;
  bool p1_local = false;  // whether the zero branch applied at all
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Exhaustive check of the product law for s_mu s_nu* s_delta s_eps* over
// all path 4-tuples with s(mu) = s(nu) and s(delta) = s(eps):
//   = s_{mu delta'} s_eps*  when delta = nu delta',
//   = s_mu s_{eps nu'}*     when nu = delta nu',
//   = 0                     when nu, delta are incomparable with a common
//                           range and S satisfies (P1) locally.
// Also checks s_alpha* s_alpha = e_{s(alpha)} for every path.
inline LemmaReport lemma_products_check(const ValidatedSemigroup& s,
                                        const GammaGraph& gamma,
                                        const CanonicalFamily& fam) {
  LemmaReport rep;
  rep.p1_local = perrot_report(s).p1_local;
  const DirectedGraph& g = gamma.graph;

  for (std::size_t i = 0; i < fam.paths.size(); ++i) {
    const Elem dom = s.mul(s.inv(fam.s[i]), fam.s[i]);
    const Elem expected =
        gamma.representative[path_source(g, fam.paths[i])];
    if (dom != expected) {
      rep.violations.push_back(
          {i, i, i, i, dom, expected, "s_alpha* s_alpha = e_{s(alpha)}"});
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> legs;
  for (std::size_t a = 0; a < fam.paths.size(); ++a) {
    for (std::size_t b = 0; b < fam.paths.size(); ++b) {
      if (path_source(g, fam.paths[a]) == path_source(g, fam.paths[b])) {
        legs.emplace_back(a, b);
      }
    }
  }

  for (auto [mu, nu] : legs) {
    for (auto [delta, eps] : legs) {
      ++rep.tuples_checked;
      const Elem got = s.mul(s.mul(fam.s[mu], s.inv(fam.s[nu])),
                             s.mul(fam.s[delta], s.inv(fam.s[eps])));
      if (auto delta_rest =
              strip_prefix(g, fam.paths[delta], fam.paths[nu])) {
        const Path mu_ext = concat(g, fam.paths[mu], *delta_rest);
        const Elem expected =
            s.mul(fam.s[fam.index_of(mu_ext)], s.inv(fam.s[eps]));
        if (got != expected) {
          rep.violations.push_back(
              {mu, nu, delta, eps, got, expected, "delta = nu delta'"});
        }
      } else if (auto nu_rest =
                     strip_prefix(g, fam.paths[nu], fam.paths[delta])) {
        const Path eps_ext = concat(g, fam.paths[eps], *nu_rest);
        const Elem expected =
            s.mul(fam.s[mu], s.inv(fam.s[fam.index_of(eps_ext)]));
        if (got != expected) {
          rep.violations.push_back(
              {mu, nu, delta, eps, got, expected, "nu = delta nu'"});
        }
      } else if (rep.p1_local && path_range(g, fam.paths[nu]) ==
                                     path_range(g, fam.paths[delta])) {
        ++rep.zero_branch_checked;
        if (!s.is_zero(got)) {
          rep.violations.push_back({mu, nu, delta, eps, got, s.zero(),
                                    "incomparable nu, delta"});
        }
      }
    }
  }
  return rep;
}

enum class MoritaReason { NoZero, NotCombinatorial, P1LocalFail, P2LocalFail };

inline const char* morita_reason_code(MoritaReason r) {
  switch (r) {
    case MoritaReason::NoZero:
      return "NO_ZERO";
    case MoritaReason::NotCombinatorial:
      return "NOT_COMBINATORIAL";
    case MoritaReason::P1LocalFail:
      return "P1_LOCAL_FAIL";
    case MoritaReason::P2LocalFail:
      return "P2_LOCAL_FAIL";
  }
  return "?";
}

struct MoritaVerdict {
  bool yes = false;
  std::vector<MoritaReason> reasons;
  std::optional<std::array<Elem, 2>> combinatorial_witness;  // H-related pair
  std::optional<std::array<Elem, 3>> p1_local_witness;       // (e, f, g)
  std::optional<GammaGraph> gamma;                           // on YES
};

// Decision procedure for Morita equivalence to a graph inverse semigroup:
// zero present, combinatorial, (P1) locally and (P2) locally. The last is
// automatic on finite input but evaluated anyway so the verdict logic would
// survive a lazily represented backend.
inline MoritaVerdict check_morita_to_graph(
    const ValidatedSemigroup& s, RepPolicy policy = RepPolicy::MinIndex) {
  MoritaVerdict v;
  const GreenData g = green_data(s);
  if (!g.combinatorial) {
    v.reasons.push_back(MoritaReason::NotCombinatorial);
    for (Elem x = 0; x < s.size() && !v.combinatorial_witness; ++x) {
      for (Elem y = x + 1; y < s.size(); ++y) {
        if (g.h_class[x] == g.h_class[y]) {
          v.combinatorial_witness = {x, y};
          break;
        }
      }
    }
  }
  if (!s.has_zero()) {
    v.reasons.push_back(MoritaReason::NoZero);
    return v;  // the (P1)/(P2) conditions are stated for semigroups with 0
  }
  const PerrotReport rep = perrot_report(s);
  if (!rep.p1_local) {
    v.reasons.push_back(MoritaReason::P1LocalFail);
    v.p1_local_witness = rep.p1_local_witness;
  }
  if (!rep.p2_local) {
    v.reasons.push_back(MoritaReason::P2LocalFail);
  }
  v.yes = v.reasons.empty();
  if (v.yes) {
    v.gamma = build_gamma(s, policy);
  }
  return v;
}

struct CanonicalMorphism {
  GisSemigroup t;          // S(Gamma_S)
  std::vector<Elem> map;   // phi: T index -> S element
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  std::optional<std::array<Elem, 2>> hom_witness;        // a, b in T
  std::optional<std::array<Elem, 2>> injective_witness;  // a != b, same image
  std::optional<Elem> surjective_witness;                 // S element missed
  std::size_t image_size = 0;

  bool bijective_homomorphism() const {
    return homomorphism && injective && surjective;
  }
};

// phi(alpha, beta) = s_alpha s_beta*, phi(0) = 0. All three flags hold
// exactly when S is itself a graph inverse semigroup (combinatorial proper
// Perrot).
inline CanonicalMorphism canonical_morphism(const ValidatedSemigroup& s,
                                            const GammaGraph& gamma,
                                            const CanonicalFamily& fam) {
  if (!is_acyclic(gamma.graph)) {
    throw Error(ErrorCode::NotAcyclic, "Gamma_S must be acyclic");
  }
  if (!s.has_zero()) {
    throw Error(ErrorCode::NoZero, "canonical_morphism requires a zero");
  }
  CanonicalMorphism out{build_gis(gamma.graph), {}, false, false, false,
                        std::nullopt, std::nullopt, std::nullopt, 0};
  const GisSemigroup& t = out.t;

  out.map.resize(t.semigroup.size());
  for (Elem i = 0; i < t.semigroup.size(); ++i) {
    const GisElement& el = t.elements[i];
    if (el.zero) {
      out.map[i] = *s.zero();
    } else {
      const Elem sa = fam.s[fam.index_of(el.left)];
      const Elem sb = fam.s[fam.index_of(el.right)];
      out.map[i] = s.mul(sa, s.inv(sb));
    }
  }

  out.homomorphism = true;
  for (Elem a = 0; a < t.semigroup.size() && out.homomorphism; ++a) {
    for (Elem b = 0; b < t.semigroup.size(); ++b) {
      if (out.map[t.semigroup.mul(a, b)] !=
          s.mul(out.map[a], out.map[b])) {
        out.homomorphism = false;
        out.hom_witness = {a, b};
        break;
      }
    }
  }

  std::vector<bool> hit(s.size(), false);
  out.injective = true;
  for (Elem a = 0; a < t.semigroup.size(); ++a) {
    if (hit[out.map[a]] && out.injective) {
      out.injective = false;
      for (Elem b = 0; b < a; ++b) {
        if (out.map[b] == out.map[a]) {
          out.injective_witness = {b, a};
          break;
        }
      }
    }
    hit[out.map[a]] = true;
  }
  out.image_size = std::count(hit.begin(), hit.end(), true);
  out.surjective = out.image_size == s.size();
  if (!out.surjective) {
    for (Elem x = 0; x < s.size(); ++x) {
      if (!hit[x]) {
        out.surjective_witness = x;
        break;
      }
    }
  }
  return out;
}

}  // namespace mgis

#endif  // MGIS_GAMMA_HPP_
