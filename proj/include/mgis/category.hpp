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
// Finite categories and functors. The idempotent splitting C(S) has
// objects E(S) and morphisms (e,s,f) with ss* <= e and s*s <= f, composed
// as (e,s,f)(f,t,g) = (e,st,g); under this convention a triple's domain is
// its third component and its codomain the first. L(S) keeps the morphisms
// (f,s,s*s); the path category P(S) lives on maximal idempotents. Functors
// are checked for the four equivalence conditions by exhaustion.

#ifndef MGIS_CATEGORY_HPP_
#define MGIS_CATEGORY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gamma.hpp"
#include "graph.hpp"
#include "semigroup.hpp"
#include "semilattice.hpp"

namespace mgis {

struct FiniteCategory {
  std::size_t num_objects = 0;
  std::vector<std::string> object_names;
  std::vector<std::size_t> mor_dom, mor_cod;
  std::vector<std::size_t> identity;  // object -> identity morphism
  std::vector<std::string> morphism_names;
  std::unordered_map<std::uint64_t, std::size_t> compose_map;

  static std::uint64_t pair_key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  std::size_t num_morphisms() const { return mor_dom.size(); }

  std::size_t add_object(std::string name) {
    object_names.push_back(std::move(name));
    identity.push_back(SIZE_MAX);
    return num_objects++;
  }

  std::size_t add_morphism(std::size_t dom, std::size_t cod,
                           std::string name) {
    mor_dom.push_back(dom);
    mor_cod.push_back(cod);
    morphism_names.push_back(std::move(name));
    return num_morphisms() - 1;
  }

  // a after b: defined when dom(a) = cod(b).
  void set_compose(std::size_t a, std::size_t b, std::size_t c) {
    compose_map[pair_key(a, b)] = c;
  }

  std::optional<std::size_t> compose(std::size_t a, std::size_t b) const {
    auto it = compose_map.find(pair_key(a, b));
    if (it == compose_map.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  // Hom-sets indexed by (dom, cod).
  std::vector<std::vector<std::vector<std::size_t>>> hom_table() const {
    std::vector<std::vector<std::vector<std::size_t>>> hom(
        num_objects, std::vector<std::vector<std::size_t>>(num_objects));
    for (std::size_t m = 0; m < num_morphisms(); ++m) {
      hom[mor_dom[m]][mor_cod[m]].push_back(m);
    }
    return hom;
  }

  // Exhaustive identity/associativity audit; returns human-readable
  // violations, empty when the category laws hold.
  std::vector<std::string> law_violations(std::size_t limit = 10) const {
    std::vector<std::string> out;
    auto emit = [&](std::string msg) {
      if (out.size() < limit) {
        out.push_back(std::move(msg));
      }
    };
    for (std::size_t o = 0; o < num_objects; ++o) {
      const std::size_t id = identity[o];
      if (id == SIZE_MAX || mor_dom[id] != o || mor_cod[id] != o) {
        emit("object " + object_names[o] + " lacks a proper identity");
      }
    }
    for (std::size_t m = 0; m < num_morphisms(); ++m) {
      auto left = compose(identity[mor_cod[m]], m);
      auto right = compose(m, identity[mor_dom[m]]);
      if (left != m || right != m) {
        emit("identity law fails at " + morphism_names[m]);
      }
    }
    for (std::size_t a = 0; a < num_morphisms(); ++a) {
      for (std::size_t b = 0; b < num_morphisms(); ++b) {
        if (mor_dom[a] != mor_cod[b]) {
          if (compose(a, b)) {
            emit("composite defined on non-composable pair (" +
                 morphism_names[a] + ", " + morphism_names[b] + ")");
          }
          continue;
        }
        auto ab = compose(a, b);
        if (!ab) {
          emit("missing composite (" + morphism_names[a] + ", " +
               morphism_names[b] + ")");
          continue;
        }
        if (mor_dom[*ab] != mor_dom[b] || mor_cod[*ab] != mor_cod[a]) {
          emit("composite (" + morphism_names[a] + ", " + morphism_names[b] +
               ") has wrong endpoints");
        }
        for (std::size_t c = 0; c < num_morphisms(); ++c) {
          if (mor_dom[b] != mor_cod[c]) {
            continue;
          }
          auto bc = compose(b, c);
          if (!bc || compose(*ab, c) != compose(a, *bc)) {
            emit("associativity fails at (" + morphism_names[a] + ", " +
                 morphism_names[b] + ", " + morphism_names[c] + ")");
          }
        }
      }
    }
    return out;
  }

  // iso[p][q]: some morphism p -> q has a two-sided inverse.
  std::vector<std::vector<bool>> object_isomorphism() const {
    auto hom = hom_table();
    std::vector<std::vector<bool>> iso(num_objects,
                                       std::vector<bool>(num_objects, false));
    for (std::size_t p = 0; p < num_objects; ++p) {
      for (std::size_t q = 0; q < num_objects; ++q) {
        for (std::size_t m : hom[p][q]) {
          for (std::size_t w : hom[q][p]) {
            if (compose(w, m) == identity[p] && compose(m, w) == identity[q]) {
              iso[p][q] = true;
              break;
            }
          }
          if (iso[p][q]) {
            break;
          }
        }
      }
    }
    return iso;
  }
};

// C(S) or L(S) together with the idempotent/triple labelling.
struct SemigroupCategory {
  FiniteCategory cat;
  std::vector<Elem> object_elem;             // object -> idempotent of S
  std::vector<std::array<Elem, 3>> triples;  // morphism -> (e, s, f)
  std::map<Elem, std::size_t> object_of;
  std::map<std::array<Elem, 3>, std::size_t> morphism_of;

  std::size_t object_of_idempotent(Elem e) const {
    auto it = object_of.find(e);
    if (it == object_of.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "idempotent is not an object of this category");
    }
    return it->second;
  }

  std::size_t morphism_of_triple(const std::array<Elem, 3>& t) const {
    auto it = morphism_of.find(t);
    if (it == morphism_of.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "triple is not a morphism of this category");
    }
    return it->second;
  }
};

namespace detail {

inline SemigroupCategory build_triple_category(const ValidatedSemigroup& s,
                                               bool include_zero_object,
                                               bool left_only) {
  SemigroupCategory out;
  for (Elem e : s.idempotents()) {
    if (!include_zero_object && s.is_zero(e)) {
      continue;
    }
    out.object_elem.push_back(e);
    out.object_of[e] = out.cat.add_object(s.name(e));
  }

  for (Elem e : out.object_elem) {
    for (Elem x = 0; x < s.size(); ++x) {
      if (!natural_leq(s, s.ran(x), e)) {
        continue;
      }
      // (e, x, f) with xx* <= e, x*x <= f; L(S) pins f = x*x.
      for (Elem f : out.object_elem) {
        if (left_only ? f != s.dom(x) : !natural_leq(s, s.dom(x), f)) {
          continue;
        }
        const std::array<Elem, 3> t{e, x, f};
        const std::size_t dom = out.object_of_idempotent(f);
        const std::size_t cod = out.object_of_idempotent(e);
        const std::size_t m = out.cat.add_morphism(
            dom, cod,
            "(" + s.name(e) + "," + s.name(x) + "," + s.name(f) + ")");
        out.triples.push_back(t);
        out.morphism_of[t] = m;
      }
    }
  }

  for (Elem e : out.object_elem) {
    out.cat.identity[out.object_of_idempotent(e)] =
        out.morphism_of_triple({e, e, e});
  }

  for (std::size_t a = 0; a < out.cat.num_morphisms(); ++a) {
    for (std::size_t b = 0; b < out.cat.num_morphisms(); ++b) {
      if (out.cat.mor_dom[a] != out.cat.mor_cod[b]) {
        continue;
      }
      const auto& ta = out.triples[a];
      const auto& tb = out.triples[b];
      const std::array<Elem, 3> tc{ta[0], s.mul(ta[1], tb[1]), tb[2]};
      out.cat.set_compose(a, b, out.morphism_of_triple(tc));
    }
  }
  return out;
}

}  // namespace detail

// The idempotent splitting (Karoubi envelope) of S.
inline SemigroupCategory karoubi(const ValidatedSemigroup& s,
                                 bool include_zero_object = true) {
  return detail::build_triple_category(s, include_zero_object, false);
}

// The subcategory on morphisms (f, s, s*s) with ss* <= f.
inline SemigroupCategory left_category(const ValidatedSemigroup& s,
                                       bool include_zero_object = true) {
  return detail::build_triple_category(s, include_zero_object, true);
}

// Isomorphisms of C(S) are exactly the triples (s*s, s, ss*), read here
// against the (cod, s, dom) layout.
inline bool is_triple_isomorphism(const ValidatedSemigroup& s,
                                  const SemigroupCategory& c,
                                  std::size_t morphism) {
  const auto& t = c.triples[morphism];
  return t[0] == s.ran(t[1]) && t[2] == s.dom(t[1]);
}

// P(S): objects the maximal idempotents, arrows (e, s) with s*s maximal
// and (ss*)-degree = e; composition (e,s)(f,t) = (e,st) when s*s = f.
struct PathCategory {
  FiniteCategory cat;
  std::vector<Elem> object_elem;           // object -> maximal idempotent
  std::vector<std::pair<Elem, Elem>> arrows;  // morphism -> (e, s)
  std::map<Elem, std::size_t> object_of;
  std::map<std::pair<Elem, Elem>, std::size_t> morphism_of;
};

inline PathCategory path_category(const ValidatedSemigroup& s) {
  const IdempotentPoset poset = build_poset(s);
  const std::vector<Elem> maximal = maximal_idempotents(poset);
  std::vector<bool> is_maximal(s.size(), false);
  for (Elem m : maximal) {
    is_maximal[m] = true;
  }

  // (P3): each nonzero idempotent must sit below a unique maximal one.
  std::vector<Elem> degree(s.size(), SIZE_MAX);
  for (Elem e : s.idempotents()) {
    if (s.is_zero(e)) {
      continue;
    }
    auto ms = maximal_idempotents_above(poset, e);
    if (ms.size() != 1) {
      throw Error(ErrorCode::P3Fails,
                  "idempotent " + s.name(e) + " lies below " +
                      std::to_string(ms.size()) + " maximal idempotents");
    }
    degree[e] = ms.front();
  }

  PathCategory out;
  for (Elem m : maximal) {
    out.object_elem.push_back(m);
    out.object_of[m] = out.cat.add_object(s.name(m));
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (!is_maximal[s.dom(x)]) {
      continue;  // in particular the zero never yields an arrow
    }
    const Elem e = degree[s.ran(x)];
    const std::pair<Elem, Elem> arrow{e, x};
    const std::size_t m = out.cat.add_morphism(
        out.object_of.at(s.dom(x)), out.object_of.at(e),
        "(" + s.name(e) + "," + s.name(x) + ")");
    out.arrows.push_back(arrow);
    out.morphism_of[arrow] = m;
  }
  for (Elem m : maximal) {
    out.cat.identity[out.object_of.at(m)] = out.morphism_of.at({m, m});
  }
  for (std::size_t a = 0; a < out.cat.num_morphisms(); ++a) {
    for (std::size_t b = 0; b < out.cat.num_morphisms(); ++b) {
      if (out.cat.mor_dom[a] != out.cat.mor_cod[b]) {
        continue;
      }
      const Elem st = s.mul(out.arrows[a].second, out.arrows[b].second);
      out.cat.set_compose(a, b,
                          out.morphism_of.at({out.arrows[a].first, st}));
    }
  }
  return out;
}

// Bounded brute-force equivalence test, off the main verification path:
// the paper-level results are verified through explicitly constructed
// functors, this exists for ad-hoc experiments. Two finite categories are
// equivalent iff their skeletons are isomorphic, so the search restricts
// both sides to one object per isomorphism class and backtracks over
// object and morphism bijections.
inline bool categories_equivalent(const FiniteCategory& c,
                                  const FiniteCategory& d,
                                  std::size_t budget = 1000000) {
  auto skeleton_objects = [](const FiniteCategory& x) {
    const auto iso = x.object_isomorphism();
    std::vector<std::size_t> reps;
    std::vector<bool> seen(x.num_objects, false);
    for (std::size_t o = 0; o < x.num_objects; ++o) {
      if (seen[o]) {
        continue;
      }
      reps.push_back(o);
      for (std::size_t p = o; p < x.num_objects; ++p) {
        if (iso[o][p]) {
          seen[p] = true;
        }
      }
    }
    return reps;
  };
  const auto reps_c = skeleton_objects(c);
  const auto reps_d = skeleton_objects(d);
  if (reps_c.size() != reps_d.size()) {
    return false;
  }
  const std::size_t k = reps_c.size();

  auto hom_c = c.hom_table();
  auto hom_d = d.hom_table();
  std::size_t nodes = 0;
  auto tick = [&]() {
    if (++nodes > budget) {
      throw Error(ErrorCode::SearchExceedsLimit,
                  "categories_equivalent: search budget exceeded");
    }
  };

  // skeleton morphisms of c in a fixed order, with their (dom, cod) in
  // skeleton coordinates
  std::vector<std::size_t> obj_pos_c(c.num_objects, SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) {
    obj_pos_c[reps_c[i]] = i;
  }
  std::vector<std::size_t> mors_c;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& hom = hom_c[reps_c[i]][reps_c[j]];
      mors_c.insert(mors_c.end(), hom.begin(), hom.end());
    }
  }

  std::vector<std::size_t> obj_map(k, SIZE_MAX);
  std::vector<bool> obj_used(k, false);
  std::vector<std::size_t> mor_map(c.num_morphisms(), SIZE_MAX);

  auto map_morphisms = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == mors_c.size()) {
      for (std::size_t a : mors_c) {
        for (std::size_t b : mors_c) {
          if (c.mor_dom[a] != c.mor_cod[b]) {
            continue;
          }
          const auto ab = c.compose(a, b);
          const auto fab = d.compose(mor_map[a], mor_map[b]);
          if (!ab || !fab || mor_map[*ab] != *fab) {
            return false;
          }
        }
      }
      return true;
    }
    const std::size_t m = mors_c[idx];
    const std::size_t di = obj_map[obj_pos_c[c.mor_dom[m]]];
    const std::size_t ci = obj_map[obj_pos_c[c.mor_cod[m]]];
    for (std::size_t n : hom_d[reps_d[di]][reps_d[ci]]) {
      bool taken = false;
      for (std::size_t prev = 0; prev < idx && !taken; ++prev) {
        taken = mor_map[mors_c[prev]] == n;
      }
      if (taken) {
        continue;
      }
      const bool m_is_identity = c.identity[c.mor_dom[m]] == m;
      const bool n_is_identity = d.identity[d.mor_dom[n]] == n;
      if (m_is_identity != n_is_identity) {
        continue;
      }
      tick();
      mor_map[m] = n;
      if (self(self, idx + 1)) {
        return true;
      }
      mor_map[m] = SIZE_MAX;
    }
    return false;
  };

  auto map_objects = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      return map_morphisms(map_morphisms, 0);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (obj_used[j]) {
        continue;
      }
      tick();
      bool sizes_ok = true;
      for (std::size_t p = 0; p <= i && sizes_ok; ++p) {
        const std::size_t q = (p == i) ? j : obj_map[p];
        sizes_ok =
            hom_c[reps_c[p]][reps_c[i]].size() ==
                hom_d[reps_d[q]][reps_d[j]].size() &&
            hom_c[reps_c[i]][reps_c[p]].size() ==
                hom_d[reps_d[j]][reps_d[q]].size();
      }
      if (!sizes_ok) {
        continue;
      }
      obj_map[i] = j;
      obj_used[j] = true;
      if (self(self, i + 1)) {
        return true;
      }
      obj_map[i] = SIZE_MAX;
      obj_used[j] = false;
    }
    return false;
  };

  return map_objects(map_objects, 0);
}

struct FunctorData {
  std::vector<std::size_t> obj_map;
  std::vector<std::size_t> mor_map;
};

struct FunctorCheck {
  bool functorial = true;
  bool faithful = true;
  bool full = true;
  bool essentially_surjective = true;
  std::string functorial_witness, faithful_witness, full_witness,
      ess_surj_witness;

  bool all() const {
    return functorial && faithful && full && essentially_surjective;
  }
};

// Checks the four equivalence conditions for F : C -> D by exhaustion.
// Essential surjectivity searches every object of D for an isomorphism to
// an F-image; hom-sets are desk scale throughout.
inline FunctorCheck check_functor(const FunctorData& f,
                                  const FiniteCategory& c,
                                  const FiniteCategory& d) {
  if (f.obj_map.size() != c.num_objects ||
      f.mor_map.size() != c.num_morphisms()) {
    throw Error(ErrorCode::NotTotal, "functor maps must be total on C");
  }
  for (std::size_t o : f.obj_map) {
    if (o >= d.num_objects) {
      throw Error(ErrorCode::NotTotal, "object image out of range");
    }
  }
  for (std::size_t m : f.mor_map) {
    if (m >= d.num_morphisms()) {
      throw Error(ErrorCode::NotTotal, "morphism image out of range");
    }
  }

  FunctorCheck out;
  auto fail_functorial = [&](std::string msg) {
    if (out.functorial) {
      out.functorial = false;
      out.functorial_witness = std::move(msg);
    }
  };

  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const std::size_t fm = f.mor_map[m];
    if (d.mor_dom[fm] != f.obj_map[c.mor_dom[m]] ||
        d.mor_cod[fm] != f.obj_map[c.mor_cod[m]]) {
      fail_functorial("endpoints of " + c.morphism_names[m] +
                      " are not preserved");
    }
  }
  for (std::size_t o = 0; o < c.num_objects; ++o) {
    if (f.mor_map[c.identity[o]] != d.identity[f.obj_map[o]]) {
      fail_functorial("identity at " + c.object_names[o] +
                      " is not preserved");
    }
  }
  for (std::size_t a = 0; a < c.num_morphisms(); ++a) {
    for (std::size_t b = 0; b < c.num_morphisms(); ++b) {
      if (c.mor_dom[a] != c.mor_cod[b]) {
        continue;
      }
      const auto ab = c.compose(a, b);
      const auto fab = d.compose(f.mor_map[a], f.mor_map[b]);
      if (!ab || !fab || f.mor_map[*ab] != *fab) {
        fail_functorial("composite of (" + c.morphism_names[a] + ", " +
                        c.morphism_names[b] + ") is not preserved");
      }
    }
  }

  auto hom_c = c.hom_table();
  for (std::size_t x = 0; x < c.num_objects && out.faithful; ++x) {
    for (std::size_t y = 0; y < c.num_objects && out.faithful; ++y) {
      const auto& hom = hom_c[x][y];
      for (std::size_t i = 0; i < hom.size() && out.faithful; ++i) {
        for (std::size_t j = i + 1; j < hom.size(); ++j) {
          if (f.mor_map[hom[i]] == f.mor_map[hom[j]]) {
            out.faithful = false;
            out.faithful_witness = c.morphism_names[hom[i]] + " and " +
                                   c.morphism_names[hom[j]] +
                                   " share an image";
            break;
          }
        }
      }
    }
  }

  auto hom_d = d.hom_table();
  for (std::size_t x = 0; x < c.num_objects && out.full; ++x) {
    for (std::size_t y = 0; y < c.num_objects && out.full; ++y) {
      const auto& targets = hom_d[f.obj_map[x]][f.obj_map[y]];
      for (std::size_t n : targets) {
        bool covered = false;
        for (std::size_t m : hom_c[x][y]) {
          if (f.mor_map[m] == n) {
            covered = true;
            break;
          }
        }
        if (!covered) {
          out.full = false;
          out.full_witness = d.morphism_names[n] + " has no preimage in Hom(" +
                             c.object_names[x] + ", " + c.object_names[y] +
                             ")";
          break;
        }
      }
    }
  }

  const auto iso = d.object_isomorphism();
  for (std::size_t w = 0; w < d.num_objects; ++w) {
    bool reachable = false;
    for (std::size_t x = 0; x < c.num_objects; ++x) {
      if (iso[f.obj_map[x]][w]) {
        reachable = true;
        break;
      }
    }
    if (!reachable) {
      out.essentially_surjective = false;
      out.ess_surj_witness =
          "object " + d.object_names[w] + " misses every image";
      break;
    }
  }
  return out;
}

// Theorem-style equivalence data: T = S(Gamma_S) and the functor
// F : C(T) -> C(S) with F((alpha,alpha)) = e_alpha, F(0) = 0 on objects and
// F(((a,a),(mu,nu),(b,b))) = (e_a, s_mu s_nu*, e_b) on morphisms (zero
// middles map to zero middles). Both categories carry their zero objects.
struct EquivalenceFunctor {
  GammaGraph gamma;
  GisSemigroup t;
  CanonicalFamily family;
  SemigroupCategory c_t, c_s;
  FunctorData functor;
};

inline EquivalenceFunctor build_equivalence_functor(
    const ValidatedSemigroup& s, RepPolicy policy = RepPolicy::MinIndex) {
  MoritaVerdict verdict = check_morita_to_graph(s, policy);
  if (!verdict.yes) {
    std::string reasons;
    for (MoritaReason r : verdict.reasons) {
      reasons += std::string(reasons.empty() ? "" : ",") +
                 morita_reason_code(r);
    }
    throw Error(ErrorCode::NotMoritaGraphType,
                "not Morita equivalent to a graph inverse semigroup: " +
                    reasons);
  }

  GammaGraph gamma = *std::move(verdict.gamma);
  GisSemigroup t = build_gis(gamma.graph);
  CanonicalFamily family = canonical_family(s, gamma);
  SemigroupCategory c_t = karoubi(t.semigroup, true);
  SemigroupCategory c_s = karoubi(s, true);

  // phi on elements of T, reused for objects (idempotents) and middles.
  std::vector<Elem> phi(t.semigroup.size());
  for (Elem i = 0; i < t.semigroup.size(); ++i) {
    const GisElement& el = t.elements[i];
    if (el.zero) {
      phi[i] = *s.zero();
    } else {
      const Elem sa = family.s[family.index_of(el.left)];
      const Elem sb = family.s[family.index_of(el.right)];
      phi[i] = s.mul(sa, s.inv(sb));
    }
  }

  FunctorData functor;
  functor.obj_map.resize(c_t.cat.num_objects);
  for (std::size_t o = 0; o < c_t.cat.num_objects; ++o) {
    functor.obj_map[o] = c_s.object_of_idempotent(phi[c_t.object_elem[o]]);
  }
  functor.mor_map.resize(c_t.cat.num_morphisms());
  for (std::size_t m = 0; m < c_t.cat.num_morphisms(); ++m) {
    const auto& triple = c_t.triples[m];
    functor.mor_map[m] = c_s.morphism_of_triple(
        {phi[triple[0]], phi[triple[1]], phi[triple[2]]});
  }
  return EquivalenceFunctor{std::move(gamma),   std::move(t),
                            std::move(family),  std::move(c_t),
                            std::move(c_s),     std::move(functor)};
}

// The inclusion P(S) -> L(S) (zero object excluded) sending (e,s) to
// (e,s,s*s); an equivalence whenever S satisfies (P3) and (P4).
struct PLEquivalence {
  PathCategory p;
  SemigroupCategory l;
  FunctorData inclusion;
  FunctorCheck check;
  bool equivalent = false;
};

inline PLEquivalence p_equivalent_to_l(const ValidatedSemigroup& s) {
  PLEquivalence out{path_category(s), SemigroupCategory{}, FunctorData{},
                    FunctorCheck{}, false};
  const PerrotReport rep = perrot_report(s);
  if (!rep.p4) {
    throw Error(ErrorCode::P4Fails,
                "D-class of " +
                    (rep.p4_witness ? s.name(*rep.p4_witness)
                                    : std::string("?")) +
                    " contains no maximal idempotent");
  }
  out.l = left_category(s, false);

  out.inclusion.obj_map.resize(out.p.cat.num_objects);
  for (std::size_t o = 0; o < out.p.cat.num_objects; ++o) {
    out.inclusion.obj_map[o] =
        out.l.object_of_idempotent(out.p.object_elem[o]);
  }
  out.inclusion.mor_map.resize(out.p.cat.num_morphisms());
  for (std::size_t m = 0; m < out.p.cat.num_morphisms(); ++m) {
    const auto [e, x] = out.p.arrows[m];
    out.inclusion.mor_map[m] = out.l.morphism_of_triple({e, x, s.dom(x)});
  }
  out.check = check_functor(out.inclusion, out.p.cat, out.l.cat);
  out.equivalent = out.check.all();
  return out;
}

}  // namespace mgis

#endif  // MGIS_CATEGORY_HPP_
