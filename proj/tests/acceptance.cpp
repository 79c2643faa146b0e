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
// Acceptance suite: ten property checks at desk scale, one line each. The
// graph corpus is every labelled acyclic graph with at most 3 vertices and
// 3 edges, plus the named fixtures. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "mgis/mgis.hpp"

using namespace mgis;
using namespace mgis::fixtures;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every labelled graph with <= 3 vertices and <= 3 edges, acyclicity
// filtered; isomorphic duplicates are enumerated and tested on purpose.
std::vector<DirectedGraph> small_acyclic_graphs() {
  std::vector<DirectedGraph> out;
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::size_t pairs = k * k;
    for (std::size_t m = 0; m <= (k == 0 ? 0 : std::size_t{3}); ++m) {
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        DirectedGraph g;
        for (std::size_t v = 0; v < k; ++v) {
          g.add_vertex();
        }
        for (std::size_t e = 0; e < m; ++e) {
          g.add_edge(pick[e] / k, pick[e] % k);
        }
        if (is_acyclic(g)) {
          out.push_back(std::move(g));
        }
        std::size_t i = 0;
        for (; i < m; ++i) {
          if (++pick[i] < pairs) {
            break;
          }
          pick[i] = 0;
        }
        if (i == m) {
          break;
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, DirectedGraph>> named_graph_fixtures() {
  return {{"G1", g1()}, {"G2", g2()}, {"G3", g3()}, {"G4", g4()}};
}

bool bijective_canonical_morphism(const ValidatedSemigroup& s) {
  const auto gamma = build_gamma(s);
  const auto fam = canonical_family(s, gamma);
  return canonical_morphism(s, gamma, fam).bijective_homomorphism();
}

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int num, const std::string& label,
                       const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool pass = false;
    try {
      pass = fn(detail);
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << num << ": "
              << label << (detail.empty() ? "" : " [" + detail + "]") << "\n";
    if (!pass) {
      ++failures;
    }
  };

  criterion(
      1, "Jones-Lawson direction: S(Gamma) is combinatorial proper Perrot",
      [](std::string& detail) {
        const auto start = Clock::now();
        auto corpus = small_acyclic_graphs();
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.push_back(g);
        }
        std::size_t checked = 0;
        for (const auto& g : corpus) {
          const auto gis = build_gis(g);
          if (!validate(gis.semigroup.table()).ok()) {
            detail = "validation failed";
            return false;
          }
          if (!green_data(gis.semigroup).combinatorial) {
            detail = "not combinatorial";
            return false;
          }
          if (!perrot_report(gis.semigroup).proper) {
            detail = "not proper";
            return false;
          }
          ++checked;
        }
        const double elapsed = seconds_since(start);
        std::ostringstream os;
        os << checked << " graphs in " << elapsed << " s";
        detail = os.str();
        return elapsed < 60.0;
      });

  criterion(
      2, "Corollary 3.5 round-trip: Gamma_{S(Gamma)} is isomorphic to Gamma",
      [](std::string& detail) {
        auto corpus = small_acyclic_graphs();
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.push_back(g);
        }
        std::size_t checked = 0;
        for (const auto& g : corpus) {
          const auto gis = build_gis(g);
          const auto gamma = build_gamma(gis.semigroup);
          if (!graph_isomorphism(g, gamma.graph).has_value()) {
            detail = "round-trip failed on a corpus graph";
            return false;
          }
          ++checked;
        }
        detail = std::to_string(checked) + " graphs, exact isomorphism";
        return true;
      });

  criterion(
      3, "Theorem 3.3: the functor F is an equivalence on every YES fixture",
      [](std::string& detail) {
        const auto start = Clock::now();
        std::vector<std::pair<std::string, ValidatedSemigroup>> corpus;
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.emplace_back("S(" + name + ")", build_gis(g).semigroup);
        }
        corpus.emplace_back("B2", b2());
        corpus.emplace_back("S2", s2());
        for (const auto& [name, s] : corpus) {
          const auto eq = build_equivalence_functor(s);
          const auto check = check_functor(eq.functor, eq.c_t.cat, eq.c_s.cat);
          if (!check.all()) {
            detail = name + " failed a flag";
            return false;
          }
        }
        const double elapsed = seconds_since(start);
        std::ostringstream os;
        os << corpus.size() << " fixtures in " << elapsed << " s";
        detail = os.str();
        return elapsed < 10.0;
      });

  criterion(
      4, "Corollary 3.4 decision with reasons and witnesses",
      [](std::string& detail) {
        auto corpus = small_acyclic_graphs();
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.push_back(g);
        }
        for (const auto& g : corpus) {
          if (!check_morita_to_graph(build_gis(g).semigroup).yes) {
            detail = "graph semigroup not recognized";
            return false;
          }
        }
        if (!check_morita_to_graph(b2()).yes) {
          detail = "B2 not recognized";
          return false;
        }
        {
          const auto v = check_morita_to_graph(z2_0());
          if (v.yes ||
              v.reasons != std::vector<MoritaReason>{
                               MoritaReason::NotCombinatorial}) {
            detail = "Z2_0 verdict wrong";
            return false;
          }
        }
        {
          const auto s = sl5();
          const auto v = check_morita_to_graph(s);
          const bool witness_ok =
              v.p1_local_witness &&
              s.name((*v.p1_local_witness)[0]) == "e" &&
              s.name((*v.p1_local_witness)[1]) == "f" &&
              s.name((*v.p1_local_witness)[2]) == "g";
          if (v.yes ||
              v.reasons !=
                  std::vector<MoritaReason>{MoritaReason::P1LocalFail} ||
              !witness_ok) {
            detail = "SL5 verdict wrong";
            return false;
          }
        }
        {
          const auto v = check_morita_to_graph(swap_group());
          const bool has_no_zero =
              std::find(v.reasons.begin(), v.reasons.end(),
                        MoritaReason::NoZero) != v.reasons.end();
          if (v.yes || !has_no_zero) {
            detail = "swap-group verdict wrong";
            return false;
          }
        }
        return true;
      });

  criterion(
      5, "Lemma 3.2 product law over all path 4-tuples",
      [](std::string& detail) {
        std::vector<std::pair<std::string, ValidatedSemigroup>> corpus;
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.emplace_back("S(" + name + ")", build_gis(g).semigroup);
        }
        corpus.emplace_back("B2", b2());
        corpus.emplace_back("S2", s2());
        corpus.emplace_back("SL5", sl5());
        std::size_t tuples = 0;
        std::size_t zero_branch_on_g3 = 0;
        for (const auto& [name, s] : corpus) {
          const auto gamma = build_gamma(s);
          const auto fam = canonical_family(s, gamma);
          const auto rep = lemma_products_check(s, gamma, fam);
          if (!rep.ok()) {
            detail = name + " has violations";
            return false;
          }
          tuples += rep.tuples_checked;
          if (name == "S(G3)") {
            zero_branch_on_g3 = rep.zero_branch_checked;
          }
        }
        if (zero_branch_on_g3 == 0) {
          detail = "zero branch never exercised on S(G3)";
          return false;
        }
        std::ostringstream os;
        os << tuples << " tuples, " << zero_branch_on_g3
           << " zero-branch tuples on S(G3)";
        detail = os.str();
        return true;
      });

  criterion(
      6, "canonical morphism bijective exactly on graph inverse semigroups",
      [](std::string& detail) {
        for (auto& [name, g] : named_graph_fixtures()) {
          if (!bijective_canonical_morphism(build_gis(g).semigroup)) {
            detail = "S(" + name + ") not bijective";
            return false;
          }
        }
        if (!bijective_canonical_morphism(s2())) {
          detail = "S2 not bijective";
          return false;
        }
        {
          const auto s = b2();
          const auto gamma = build_gamma(s);
          const auto phi =
              canonical_morphism(s, gamma, canonical_family(s, gamma));
          if (!(phi.homomorphism && phi.injective && !phi.surjective &&
                phi.image_size == 2 && phi.t.semigroup.size() == 2 &&
                s.size() == 5)) {
            detail = "B2 morphism shape wrong";
            return false;
          }
        }
        {
          const auto s = sl5();
          const auto gamma = build_gamma(s);
          const auto phi =
              canonical_morphism(s, gamma, canonical_family(s, gamma));
          if (phi.bijective_homomorphism()) {
            detail = "SL5 must not verify";
            return false;
          }
        }
        return true;
      });

  criterion(
      7, "representative independence of Gamma_S",
      [](std::string& detail) {
        std::vector<std::pair<std::string, ValidatedSemigroup>> corpus;
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.emplace_back("S(" + name + ")", build_gis(g).semigroup);
        }
        corpus.emplace_back("B2", b2());
        corpus.emplace_back("S2", s2());
        corpus.emplace_back("SL5", sl5());
        corpus.emplace_back("Z2_0", z2_0());
        for (const auto& [name, s] : corpus) {
          const auto lo = build_gamma(s, RepPolicy::MinIndex);
          const auto hi = build_gamma(s, RepPolicy::MaxIndex);
          if (!graph_isomorphism(lo.graph, hi.graph).has_value()) {
            detail = name + " depends on the representative";
            return false;
          }
        }
        return true;
      });

  criterion(
      8, "P(S) is equivalent to L(S) under (P3)+(P4), zero object excluded",
      [](std::string& detail) {
        std::vector<std::pair<std::string, ValidatedSemigroup>> corpus;
        corpus.emplace_back("S2", s2());
        corpus.emplace_back("B2", b2());
        corpus.emplace_back("S(G2)", build_gis(g2()).semigroup);
        corpus.emplace_back("S(G4)", build_gis(g4()).semigroup);
        corpus.emplace_back("S(G1)", build_gis(g1()).semigroup);
        corpus.emplace_back("S(G3)", build_gis(g3()).semigroup);
        corpus.emplace_back("Z2_0", z2_0());
        for (const auto& [name, s] : corpus) {
          if (!p_equivalent_to_l(s).equivalent) {
            detail = name + " inclusion is not an equivalence";
            return false;
          }
        }
        detail = std::to_string(corpus.size()) + " fixtures";
        return true;
      });

  criterion(
      9, "local submonoids transfer to the witnessing graph inverse semigroup",
      [](std::string& detail) {
        for (const auto& [name, s] :
             {std::pair<std::string, ValidatedSemigroup>{"B2", b2()},
              {"S(G2)", build_gis(g2()).semigroup}}) {
          const auto verdict = check_morita_to_graph(s);
          if (!verdict.yes) {
            detail = name + " should be YES";
            return false;
          }
          const auto t = build_gis(verdict.gamma->graph);
          for (Elem e : s.idempotents()) {
            const auto sub_s = local_submonoid(s, e);
            bool matched = false;
            for (Elem f : t.semigroup.idempotents()) {
              if (semigroup_isomorphic(
                      sub_s.semigroup,
                      local_submonoid(t.semigroup, f).semigroup)) {
                matched = true;
                break;
              }
            }
            if (!matched) {
              detail = name + ": eSe with e = " + s.name(e) + " unmatched";
              return false;
            }
          }
        }
        return true;
      });

  criterion(
      10, "Proposition 2.3: pi(s) = xsx* is a D-preserving local isomorphism",
      [](std::string& detail) {
        std::vector<std::pair<std::string, ValidatedSemigroup>> corpus;
        for (auto& [name, g] : named_graph_fixtures()) {
          corpus.emplace_back("S(" + name + ")", build_gis(g).semigroup);
        }
        corpus.emplace_back("B2", b2());
        corpus.emplace_back("S2", s2());
        corpus.emplace_back("SL5", sl5());
        corpus.emplace_back("Z2_0", z2_0());
        std::size_t pairs = 0;
        for (const auto& [name, s] : corpus) {
          const auto g = green_data(s);
          for (Elem e : s.idempotents()) {
            for (Elem f : s.idempotents()) {
              const auto w = d_witness(s, e, f);
              if (w.has_value() != (g.d_class[e] == g.d_class[f])) {
                detail = name + ": witness/D mismatch";
                return false;
              }
              if (!w) {
                continue;
              }
              ++pairs;
              const Elem x = *w;
              const auto sub_e = local_submonoid(s, e);
              const auto sub_f = local_submonoid(s, f);
              auto pi = [&](Elem a) { return s.mul(s.mul(x, a), s.inv(x)); };
              std::vector<Elem> image;
              for (Elem a : sub_e.embedding) {
                const Elem pa = pi(a);
                if (!std::binary_search(sub_f.embedding.begin(),
                                        sub_f.embedding.end(), pa)) {
                  detail = name + ": pi leaves fSf";
                  return false;
                }
                if (g.d_class[pa] != g.d_class[a]) {
                  detail = name + ": pi moved a D-class";
                  return false;
                }
                for (Elem b : sub_e.embedding) {
                  if (pi(s.mul(a, b)) != s.mul(pi(a), pi(b))) {
                    detail = name + ": pi not a homomorphism";
                    return false;
                  }
                }
                image.push_back(pa);
              }
              std::sort(image.begin(), image.end());
              image.erase(std::unique(image.begin(), image.end()),
                          image.end());
              if (image.size() != sub_f.embedding.size()) {
                detail = name + ": pi not bijective";
                return false;
              }
            }
          }
        }
        detail = std::to_string(pairs) + " D-related idempotent pairs";
        return true;
      });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) +
                                    " criteria failed")
            << "\n";
  return failures;
}
