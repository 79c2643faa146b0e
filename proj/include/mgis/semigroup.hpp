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
// Finite inverse semigroups given by multiplication tables: validation of
// the inverse-semigroup axioms, the natural partial order, Green's
// relations, local submonoids and isomorphism search. Elements are dense
// indices into the table; names are display-only.

#ifndef MGIS_SEMIGROUP_HPP_
#define MGIS_SEMIGROUP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mgis {

using Elem = std::size_t;

// Raw finite semigroup: an n x n table of element indices.
struct MultiplicationTable {
  std::size_t n = 0;
  std::vector<Elem> mul;           // row-major, mul[a * n + b] = ab
  std::optional<Elem> zero;        // declared zero, if any
  std::vector<std::string> names;  // display names, empty or of size n

  Elem at(Elem a, Elem b) const { return mul[a * n + b]; }

  std::string name(Elem s) const {
    if (s < names.size() && !names[s].empty()) {
      return names[s];
    }
    return std::to_string(s);
  }
};

struct Violation {
  enum class Kind {
    BadEntry,                // args: row, col, value
    BadZero,                 // args: declared zero, offending element
    NonAssociative,          // args: a, b, c with (ab)c != a(bc)
    NotRegular,              // args: s with no t such that sts = s, tst = t
    IdempotentsDontCommute,  // args: e, f with ef != fe
  };

  Kind kind;
  std::array<Elem, 3> args{};

  std::string describe(const MultiplicationTable& t) const {
    switch (kind) {
      case Kind::BadEntry:
        return "entry [" + std::to_string(args[0]) + "][" +
               std::to_string(args[1]) + "] = " + std::to_string(args[2]) +
               " out of range";
      case Kind::BadZero:
        return "declared zero " + t.name(args[0]) +
               " is not absorbing at " + t.name(args[1]);
      case Kind::NonAssociative:
        return "non-associative triple (" + t.name(args[0]) + ", " +
               t.name(args[1]) + ", " + t.name(args[2]) + ")";
      case Kind::NotRegular:
        return "element " + t.name(args[0]) + " has no inverse";
      case Kind::IdempotentsDontCommute:
        return "idempotents " + t.name(args[0]) + " and " + t.name(args[1]) +
               " do not commute";
    }
    return "unknown violation";
  }
};

struct ValidationResult;

// A multiplication table whose inverse-semigroup axioms have been checked:
// associativity, a (necessarily unique) inverse for every element, and
// commuting idempotents. Instances are only produced by validate().
class ValidatedSemigroup {
 public:
  std::size_t size() const { return table_.n; }

  Elem mul(Elem a, Elem b) const { return table_.at(a, b); }
  Elem mul(Elem a, Elem b, Elem c) const { return mul(mul(a, b), c); }

  Elem inv(Elem s) const { return inverse_[s]; }

  // s*s and ss*: the domain and range idempotents of s.
  Elem dom(Elem s) const { return dom_[s]; }
  Elem ran(Elem s) const { return ran_[s]; }

  bool is_idempotent(Elem s) const { return mul(s, s) == s; }
  const std::vector<Elem>& idempotents() const { return idempotents_; }

  std::optional<Elem> zero() const { return zero_; }
  bool has_zero() const { return zero_.has_value(); }
  bool is_zero(Elem s) const { return zero_ && *zero_ == s; }

  const MultiplicationTable& table() const { return table_; }
  std::string name(Elem s) const { return table_.name(s); }

 private:
  ValidatedSemigroup(MultiplicationTable table, std::vector<Elem> inverse,
                     std::vector<Elem> idempotents, std::optional<Elem> zero)
      : table_(std::move(table)),
        inverse_(std::move(inverse)),
        idempotents_(std::move(idempotents)),
        zero_(zero) {
    dom_.resize(table_.n);
    ran_.resize(table_.n);
    for (Elem s = 0; s < table_.n; ++s) {
      dom_[s] = table_.at(inverse_[s], s);
      ran_[s] = table_.at(s, inverse_[s]);
    }
  }

  MultiplicationTable table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> idempotents_;
  std::optional<Elem> zero_;
  std::vector<Elem> dom_, ran_;

  friend ValidationResult validate(MultiplicationTable table);
};

struct ValidationResult {
  std::optional<ValidatedSemigroup> semigroup;
  std::vector<Violation> violations;
  bool truncated = false;  // violation list hit the reporting cap

  bool ok() const { return semigroup.has_value(); }
};

// Decision procedure: associativity, some inverse per element, commuting
// idempotents. Together these certify inverse-semigroup structure and the
// uniqueness of inverses. The O(n^3) associativity scan runs
// unconditionally; inputs are desk scale.
inline ValidationResult validate(MultiplicationTable table) {
  constexpr std::size_t kViolationCap = 100;
  ValidationResult result;
  auto report = [&](Violation v) {
    if (result.violations.size() < kViolationCap) {
      result.violations.push_back(v);
    } else {
      result.truncated = true;
    }
  };

  const std::size_t n = table.n;
  if (table.mul.size() != n * n) {
    report({Violation::Kind::BadEntry, {0, 0, table.mul.size()}});
    return result;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (table.at(a, b) >= n) {
        report({Violation::Kind::BadEntry, {a, b, table.at(a, b)}});
      }
    }
  }
  if (!result.violations.empty()) {
    return result;  // cannot index safely past this point
  }

  if (table.zero && *table.zero >= n) {
    report({Violation::Kind::BadEntry, {*table.zero, 0, *table.zero}});
    return result;
  }

  for (Elem a = 0; a < n && !result.truncated; ++a) {
    for (Elem b = 0; b < n && !result.truncated; ++b) {
      const Elem ab = table.at(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (table.at(ab, c) != table.at(a, table.at(b, c))) {
          report({Violation::Kind::NonAssociative, {a, b, c}});
          if (result.truncated) {
            break;
          }
        }
      }
    }
  }

  std::vector<std::vector<Elem>> inverses(n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (table.at(table.at(s, t), s) == s &&
          table.at(table.at(t, s), t) == t) {
        inverses[s].push_back(t);
      }
    }
    if (inverses[s].empty()) {
      report({Violation::Kind::NotRegular, {s, 0, 0}});
    }
  }

  std::vector<Elem> idempotents;
  for (Elem e = 0; e < n; ++e) {
    if (table.at(e, e) == e) {
      idempotents.push_back(e);
    }
  }
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    for (std::size_t j = i + 1; j < idempotents.size(); ++j) {
      const Elem e = idempotents[i], f = idempotents[j];
      if (table.at(e, f) != table.at(f, e)) {
        report({Violation::Kind::IdempotentsDontCommute, {e, f, 0}});
      }
    }
  }

  // Zero detection: scan for the absorbing element. A declared zero must be
  // the detected one.
  std::optional<Elem> detected;
  for (Elem z = 0; z < n; ++z) {
    bool absorbing = true;
    for (Elem s = 0; s < n; ++s) {
      if (table.at(z, s) != z || table.at(s, z) != z) {
        absorbing = false;
        break;
      }
    }
    if (absorbing) {
      detected = z;
      break;  // at most one absorbing element exists
    }
  }
  if (table.zero && table.zero != detected) {
    Elem offender = 0;
    for (Elem s = 0; s < n; ++s) {
      if (table.at(*table.zero, s) != *table.zero ||
          table.at(s, *table.zero) != *table.zero) {
        offender = s;
        break;
      }
    }
    report({Violation::Kind::BadZero, {*table.zero, offender, 0}});
  }

  if (!result.violations.empty()) {
    return result;
  }

  // Commuting idempotents plus regularity force the inverse to be unique.
  std::vector<Elem> inverse(n);
  for (Elem s = 0; s < n; ++s) {
    inverse[s] = inverses[s].front();
  }

  result.semigroup = ValidatedSemigroup(std::move(table), std::move(inverse),
                                        std::move(idempotents), detected);
  return result;
}

inline ValidatedSemigroup validate_or_throw(MultiplicationTable table) {
  ValidationResult r = validate(std::move(table));
  if (!r.ok()) {
    std::string msg = "not an inverse semigroup";
    if (!r.violations.empty()) {
      msg += ": " + r.violations.front().describe(MultiplicationTable{});
    }
    throw Error(ErrorCode::InvalidArgument, msg);
  }
  return *std::move(r.semigroup);
}

// Natural partial order: s <= t iff s = t(s*s), equivalent to the
// existential form "s = te for some idempotent e".
inline bool natural_leq(const ValidatedSemigroup& s, Elem a, Elem b) {
  return a == s.mul(b, s.dom(a));
}

inline bool natural_lt(const ValidatedSemigroup& s, Elem a, Elem b) {
  return a != b && natural_leq(s, a, b);
}

struct GreenData {
  // Element -> class id; ids are assigned by least member, so class ids are
  // stable under the element order.
  std::vector<std::size_t> l_class, r_class, h_class, d_class;
  std::size_t num_l = 0, num_r = 0, num_h = 0, num_d = 0;
  bool combinatorial = false;  // every H-class a singleton
};

namespace detail {

// Normalizes an arbitrary labelling into class ids ordered by first
// occurrence.
inline std::size_t normalize_partition(std::vector<std::size_t>& cls) {
  std::size_t max_label = 0;
  for (std::size_t c : cls) {
    max_label = std::max(max_label, c);
  }
  std::vector<std::size_t> remap(max_label + 1, SIZE_MAX);
  std::size_t next = 0;
  for (auto& c : cls) {
    if (remap[c] == SIZE_MAX) {
      remap[c] = next++;
    }
    c = remap[c];
  }
  return next;
}

}  // namespace detail

inline std::vector<std::vector<Elem>> partition_members(
    const std::vector<std::size_t>& cls, std::size_t count) {
  std::vector<std::vector<Elem>> members(count);
  for (Elem s = 0; s < cls.size(); ++s) {
    members[cls[s]].push_back(s);
  }
  return members;
}

// Green's relations via the inverse-semigroup characterizations:
// s L t iff s*s = t*t, s R t iff ss* = tt*, H = L meet R, and for
// idempotents e D f iff some x has x*x = e and xx* = f (extended to all
// elements through s -> s*s).
inline GreenData green_data(const ValidatedSemigroup& s) {
  const std::size_t n = s.size();
  GreenData g;
  g.l_class.resize(n);
  g.r_class.resize(n);
  g.h_class.resize(n);
  g.d_class.resize(n);

  for (Elem x = 0; x < n; ++x) {
    g.l_class[x] = s.dom(x);
    g.r_class[x] = s.ran(x);
  }
  g.num_l = detail::normalize_partition(g.l_class);
  g.num_r = detail::normalize_partition(g.r_class);

  {
    std::vector<std::size_t> key(n);
    for (Elem x = 0; x < n; ++x) {
      key[x] = g.l_class[x] * g.num_r + g.r_class[x];
    }
    g.h_class = key;
    g.num_h = detail::normalize_partition(g.h_class);
  }
  g.combinatorial = (g.num_h == n);

  // Every x marks its pair (x*x, xx*) as D-related; D being an equivalence
  // relation, the marks already cover all related idempotent pairs.
  std::vector<std::vector<bool>> idem_d(n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x) {
    idem_d[s.dom(x)][s.ran(x)] = true;
    idem_d[s.ran(x)][s.dom(x)] = true;
  }

  std::vector<std::size_t> dcls(n, SIZE_MAX);
  std::size_t next = 0;
  for (Elem x = 0; x < n; ++x) {
    if (dcls[x] != SIZE_MAX) {
      continue;
    }
    dcls[x] = next;
    for (Elem y = x + 1; y < n; ++y) {
      if (dcls[y] == SIZE_MAX && idem_d[s.dom(x)][s.dom(y)]) {
        dcls[y] = next;
      }
    }
    ++next;
  }
  g.d_class = std::move(dcls);
  g.num_d = next;
  return g;
}

// Lowest-index x with x*x = e and xx* = f, or nothing when e and f are not
// D-related. The induced map pi(s) = xsx* is an isomorphism eSe -> fSf.
inline std::optional<Elem> d_witness(const ValidatedSemigroup& s, Elem e,
                                     Elem f) {
  if (!s.is_idempotent(e)) {
    throw Error(ErrorCode::NotIdempotent,
                "d_witness: " + s.name(e) + " is not idempotent");
  }
  if (!s.is_idempotent(f)) {
    throw Error(ErrorCode::NotIdempotent,
                "d_witness: " + s.name(f) + " is not idempotent");
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (s.dom(x) == e && s.ran(x) == f) {
      return x;
    }
  }
  return std::nullopt;
}

struct LocalSubmonoid {
  ValidatedSemigroup semigroup;
  std::vector<Elem> embedding;  // local index -> parent element
  Elem identity;                // local index of e
};

// The sub-table on eSe = {ese : s in S}, a monoid with identity e.
inline LocalSubmonoid local_submonoid(const ValidatedSemigroup& s, Elem e) {
  if (!s.is_idempotent(e)) {
    throw Error(ErrorCode::NotIdempotent,
                "local_submonoid: " + s.name(e) + " is not idempotent");
  }
  std::vector<Elem> elems;
  for (Elem x = 0; x < s.size(); ++x) {
    elems.push_back(s.mul(e, x, e));
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::vector<std::size_t> local_of(s.size(), SIZE_MAX);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    local_of[elems[i]] = i;
  }

  MultiplicationTable t;
  t.n = elems.size();
  t.mul.resize(t.n * t.n);
  t.names.resize(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    t.names[i] = s.name(elems[i]);
    for (std::size_t j = 0; j < t.n; ++j) {
      t.mul[i * t.n + j] = local_of[s.mul(elems[i], elems[j])];
    }
  }

  ValidationResult r = validate(std::move(t));
  if (!r.ok()) {
    throw std::logic_error("local_submonoid: eSe failed validation");
  }
  return LocalSubmonoid{*std::move(r.semigroup), std::move(elems),
                        local_of[e]};
}

namespace detail {

struct IsoSignature {
  bool idempotent;
  bool zero;
  std::size_t l_size, r_size, h_size, d_size;

  auto key() const {
    return std::make_tuple(idempotent, zero, l_size, r_size, h_size, d_size);
  }
  bool operator==(const IsoSignature& o) const { return key() == o.key(); }
  bool operator<(const IsoSignature& o) const { return key() < o.key(); }
};

inline std::vector<IsoSignature> iso_signatures(const ValidatedSemigroup& s) {
  GreenData g = green_data(s);
  auto l = partition_members(g.l_class, g.num_l);
  auto r = partition_members(g.r_class, g.num_r);
  auto h = partition_members(g.h_class, g.num_h);
  auto d = partition_members(g.d_class, g.num_d);
  std::vector<IsoSignature> sig(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    sig[x] = IsoSignature{s.is_idempotent(x), s.is_zero(x),
                          l[g.l_class[x]].size(), r[g.r_class[x]].size(),
                          h[g.h_class[x]].size(), d[g.d_class[x]].size()};
  }
  return sig;
}

}  // namespace detail

// Multiplication-preserving bijection A -> B, or nothing. Backtracking
// search pruned by Green's-class signatures; zero maps to zero through the
// signatures. Throws SearchExceedsLimit when the node budget runs out.
inline std::optional<std::vector<Elem>> semigroup_isomorphic(
    const ValidatedSemigroup& a, const ValidatedSemigroup& b,
    std::size_t budget = 1000000) {
  const std::size_t n = a.size();
  if (n != b.size()) {
    return std::nullopt;
  }
  if (n == 0) {
    return std::vector<Elem>{};
  }

  auto sig_a = detail::iso_signatures(a);
  auto sig_b = detail::iso_signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) {
      return std::nullopt;
    }
  }

  std::vector<Elem> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;

  auto consistent = [&](Elem i, Elem j) {
    for (Elem k = 0; k <= i; ++k) {
      const Elem jk = (k == i) ? j : map[k];
      const Elem ik_prod = a.mul(i, k);
      if (ik_prod <= i && b.mul(j, jk) != ((ik_prod == i) ? j : map[ik_prod])) {
        return false;
      }
      const Elem ki_prod = a.mul(k, i);
      if (ki_prod <= i && b.mul(jk, j) != ((ki_prod == i) ? j : map[ki_prod])) {
        return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Elem i) -> bool {
    if (i == n) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
            return false;
          }
        }
      }
      return true;
    }
    for (Elem j = 0; j < n; ++j) {
      if (used[j] || !(sig_a[i] == sig_b[j])) {
        continue;
      }
      if (++nodes > budget) {
        throw Error(ErrorCode::SearchExceedsLimit,
                    "semigroup_isomorphic: search budget exceeded");
      }
      if (!consistent(i, j)) {
        continue;
      }
      map[i] = j;
      used[j] = true;
      if (self(self, i + 1)) {
        return true;
      }
      map[i] = SIZE_MAX;
      used[j] = false;
    }
    return false;
  };

  if (search(search, 0)) {
    return map;
  }
  return std::nullopt;
}

}  // namespace mgis

#endif  // MGIS_SEMIGROUP_HPP_
