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
// The idempotent poset of a finite inverse semigroup with zero: cover
// relations, intervals, maximal idempotents, and the Perrot property report
// (P1)-(P4) with local variants and properness.

#ifndef MGIS_SEMILATTICE_HPP_
#define MGIS_SEMILATTICE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace mgis {

struct IdempotentPoset {
  std::vector<Elem> elems;  // idempotents of S, ascending element index
  std::size_t zero_pos = 0;
  // leq[i][j]: elems[i] <= elems[j]; covers[i][j]: elems[i] is covered by
  // elems[j], i.e. elems[i] < elems[j] with empty open interval.
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<bool>> covers;

  std::size_t pos_of(Elem e) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), e);
    if (it == elems.end() || *it != e) {
      throw Error(ErrorCode::NotIdempotent,
                  "element " + std::to_string(e) + " is not idempotent");
    }
    return static_cast<std::size_t>(it - elems.begin());
  }
};

inline IdempotentPoset build_poset(const ValidatedSemigroup& s) {
  if (!s.has_zero()) {
    throw Error(ErrorCode::NoZero, "build_poset requires a zero element");
  }
  IdempotentPoset p;
  p.elems = s.idempotents();
  const std::size_t m = p.elems.size();
  p.leq.assign(m, std::vector<bool>(m, false));
  p.covers.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    if (p.elems[i] == *s.zero()) {
      p.zero_pos = i;
    }
    for (std::size_t j = 0; j < m; ++j) {
      p.leq[i][j] = natural_leq(s, p.elems[i], p.elems[j]);
    }
  }
  // f << e iff f < e and the open interval (f, e) is empty.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !p.leq[i][j]) {
        continue;
      }
      bool strictly_between = false;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) {
          strictly_between = true;
          break;
        }
      }
      p.covers[i][j] = !strictly_between;
    }
  }
  return p;
}

// {g : e <= g <= f}, inclusive and ascending. Requires e <= f.
inline std::vector<Elem> interval(const IdempotentPoset& p, Elem e, Elem f) {
  const std::size_t i = p.pos_of(e), j = p.pos_of(f);
  if (!p.leq[i][j]) {
    throw Error(ErrorCode::NotComparable,
                "interval: " + std::to_string(e) + " is not below " +
                    std::to_string(f));
  }
  std::vector<Elem> out;
  for (std::size_t k = 0; k < p.elems.size(); ++k) {
    if (p.leq[i][k] && p.leq[k][j]) {
      out.push_back(p.elems[k]);
    }
  }
  return out;
}

// Nonzero idempotents with no strictly larger idempotent.
inline std::vector<Elem> maximal_idempotents(const IdempotentPoset& p) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    if (i == p.zero_pos) {
      continue;
    }
    bool maximal = true;
    for (std::size_t j = 0; j < p.elems.size(); ++j) {
      if (j != i && p.leq[i][j]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(p.elems[i]);
    }
  }
  return out;
}

inline std::vector<Elem> maximal_idempotents_above(const IdempotentPoset& p,
                                                   Elem e) {
  const std::size_t i = p.pos_of(e);
  std::vector<Elem> out;
  for (Elem m : maximal_idempotents(p)) {
    if (p.leq[i][p.pos_of(m)]) {
      out.push_back(m);
    }
  }
  return out;
}

// e-degree: the unique maximal idempotent above a nonzero e. Defined only
// under (P3); raises NotUnique where uniqueness fails.
inline Elem unique_maximal_above(const IdempotentPoset& p, Elem e) {
  if (p.pos_of(e) == p.zero_pos) {
    throw Error(ErrorCode::InvalidArgument,
                "no maximal idempotent is assigned above zero");
  }
  auto ms = maximal_idempotents_above(p, e);
  if (ms.size() != 1) {
    throw Error(ErrorCode::NotUnique,
                "idempotent " + std::to_string(e) + " lies below " +
                    std::to_string(ms.size()) + " maximal idempotents");
  }
  return ms.front();
}

// Nonzero covers of e: the set A of idempotents f with 0 != f << e.
inline std::vector<Elem> nonzero_covers_of(const IdempotentPoset& p, Elem e) {
  const std::size_t j = p.pos_of(e);
  std::vector<Elem> out;
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    if (i != p.zero_pos && p.covers[i][j]) {
      out.push_back(p.elems[i]);
    }
  }
  return out;
}

struct PerrotReport {
  bool p1 = false;        // unambiguous: ef != 0 forces comparability
  bool p1_local = false;  // incomparable e,f under a common g have ef = 0
  bool p2 = false;        // finitely many idempotents above each nonzero e
  bool p2_local = false;  // finite intervals
  bool p3 = false;        // unique maximal idempotent above each nonzero e
  bool p4 = false;        // every nonzero D-class contains a maximal idempotent
  bool proper = false;    // (P1)-(P4) and one maximal idempotent per class

  std::optional<std::array<Elem, 2>> p1_witness;        // (e, f)
  std::optional<std::array<Elem, 3>> p1_local_witness;  // (e, f, g)
  std::optional<std::array<Elem, 3>> p3_witness;        // (e, m1, m2)
  std::optional<Elem> p4_witness;          // least idempotent of a bad class
  std::optional<std::array<Elem, 2>> proper_witness;  // two maximals, one class

  // Interval statistics; (P2) and its local variant are computed from the
  // same intervals that later feed the fullness argument, so finite inputs
  // report them as trivially true with sizes attached.
  std::size_t max_above_nonzero = 0;
  std::size_t max_interval_size = 0;
};

inline PerrotReport perrot_report(const ValidatedSemigroup& s) {
  if (!s.has_zero()) {
    throw Error(ErrorCode::NoZero, "perrot_report requires a zero element");
  }
  const IdempotentPoset p = build_poset(s);
  const std::size_t m = p.elems.size();
  PerrotReport rep;

  rep.p1 = true;
  rep.p1_local = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (p.leq[i][j] || p.leq[j][i]) {
        continue;  // comparable pairs cannot violate (P1)
      }
      const Elem e = p.elems[i], f = p.elems[j];
      if (s.mul(e, f) == *s.zero()) {
        continue;
      }
      if (rep.p1 && !rep.p1_witness) {
        rep.p1_witness = {e, f};
      }
      rep.p1 = false;
      if (rep.p1_local) {
        for (std::size_t k = 0; k < m; ++k) {
          if (p.leq[i][k] && p.leq[j][k]) {
            rep.p1_local = false;
            rep.p1_local_witness = {e, f, p.elems[k]};
            break;
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (i == p.zero_pos) {
      continue;
    }
    std::size_t above = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (p.leq[i][j]) {
        ++above;
        const std::size_t len = interval(p, p.elems[i], p.elems[j]).size();
        rep.max_interval_size = std::max(rep.max_interval_size, len);
      }
    }
    rep.max_above_nonzero = std::max(rep.max_above_nonzero, above);
  }
  rep.p2 = true;        // the scans above terminated
  rep.p2_local = true;  // identically true on finite input

  rep.p3 = true;
  for (std::size_t i = 0; i < m && rep.p3; ++i) {
    if (i == p.zero_pos) {
      continue;
    }
    auto ms = maximal_idempotents_above(p, p.elems[i]);
    if (ms.size() != 1) {
      rep.p3 = false;
      if (ms.size() >= 2) {
        rep.p3_witness = {p.elems[i], ms[0], ms[1]};
      }
    }
  }

  const GreenData g = green_data(s);
  const std::size_t zero_class = g.d_class[*s.zero()];
  std::vector<std::vector<Elem>> class_maximals(g.num_d);
  for (Elem e : maximal_idempotents(p)) {
    class_maximals[g.d_class[e]].push_back(e);
  }
  rep.p4 = true;
  bool unique_max_per_class = true;
  auto members = partition_members(g.d_class, g.num_d);
  for (std::size_t c = 0; c < g.num_d; ++c) {
    if (c == zero_class) {
      continue;
    }
    if (class_maximals[c].empty()) {
      if (rep.p4) {
        for (Elem x : members[c]) {
          if (s.is_idempotent(x)) {
            rep.p4_witness = x;
            break;
          }
        }
      }
      rep.p4 = false;
    } else if (class_maximals[c].size() > 1) {
      if (unique_max_per_class && !rep.proper_witness) {
        rep.proper_witness = {class_maximals[c][0], class_maximals[c][1]};
      }
      unique_max_per_class = false;
    }
  }

  rep.proper = rep.p1 && rep.p2 && rep.p3 && rep.p4 && unique_max_per_class;
  return rep;
}

}  // namespace mgis

#endif  // MGIS_SEMILATTICE_HPP_
