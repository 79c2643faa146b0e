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
// Inverse semigroups of partial injective maps on {1..m}: the standard
// concrete model. Closing a generator set under composition and inversion
// yields a multiplication table for the rest of the library.

#ifndef MGIS_PARTIAL_BIJECTION_HPP_
#define MGIS_PARTIAL_BIJECTION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace mgis {

// Partial injective map on {0..m-1}; kUndefined marks points outside the
// domain. File formats and display names are 1-based.
struct PartialBijection {
  static constexpr std::size_t kUndefined = SIZE_MAX;

  std::vector<std::size_t> img;

  std::size_t degree() const { return img.size(); }

  bool defined_at(std::size_t x) const { return img[x] != kUndefined; }

  bool is_injective() const {
    std::vector<bool> seen(img.size(), false);
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (!defined_at(x)) {
        continue;
      }
      if (img[x] >= img.size() || seen[img[x]]) {
        return false;
      }
      seen[img[x]] = true;
    }
    return true;
  }

  bool is_empty_map() const {
    return std::all_of(img.begin(), img.end(),
                       [](std::size_t y) { return y == kUndefined; });
  }

  // (a * b)(x) = a(b(x)): apply b first.
  friend PartialBijection operator*(const PartialBijection& a,
                                    const PartialBijection& b) {
    PartialBijection c{std::vector<std::size_t>(a.img.size(), kUndefined)};
    for (std::size_t x = 0; x < b.img.size(); ++x) {
      if (b.defined_at(x) && a.defined_at(b.img[x])) {
        c.img[x] = a.img[b.img[x]];
      }
    }
    return c;
  }

  PartialBijection inverse() const {
    PartialBijection c{std::vector<std::size_t>(img.size(), kUndefined)};
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (defined_at(x)) {
        c.img[img[x]] = x;
      }
    }
    return c;
  }

  bool operator==(const PartialBijection& o) const { return img == o.img; }
  bool operator<(const PartialBijection& o) const { return img < o.img; }

  // Sorted (x, f(x)) pairs; the canonical element order is empty map first,
  // then lexicographic on this graph.
  std::vector<std::pair<std::size_t, std::size_t>> graph() const {
    std::vector<std::pair<std::size_t, std::size_t>> g;
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (defined_at(x)) {
        g.emplace_back(x, img[x]);
      }
    }
    return g;
  }

  std::string display() const {
    std::string out = "[";
    for (std::size_t x = 0; x < img.size(); ++x) {
      if (x > 0) {
        out += ",";
      }
      out += defined_at(x) ? std::to_string(img[x] + 1) : "-";
    }
    return out + "]";
  }
};

struct PartialBijectionClosure {
  MultiplicationTable table;
  std::vector<PartialBijection> elements;  // index -> map, canonical order
};

// Closes the generators under composition and inversion. The empty map, if
// it arises (or is requested), becomes the zero and sorts first; the rest
// follow in graph-of-map lexicographic order.
inline PartialBijectionClosure generate_from_partial_bijections(
    std::size_t domain_size, const std::vector<PartialBijection>& generators,
    bool adjoin_zero = false, std::size_t max_elements = 100000) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != domain_size || !generators[i].is_injective()) {
      throw Error(ErrorCode::NotInjective,
                  "generator " + std::to_string(i) +
                      " is not a partial injective map on the domain");
    }
  }

  std::vector<PartialBijection> pool;
  std::map<PartialBijection, std::size_t> seen;
  auto push = [&](const PartialBijection& p) {
    if (seen.emplace(p, pool.size()).second) {
      pool.push_back(p);
      if (pool.size() > max_elements) {
        throw Error(ErrorCode::ClosureExceedsLimit,
                    "closure exceeds " + std::to_string(max_elements) +
                        " elements");
      }
    }
  };

  if (adjoin_zero) {
    push(PartialBijection{
        std::vector<std::size_t>(domain_size, PartialBijection::kUndefined)});
  }
  for (const auto& g : generators) {
    push(g);
    push(g.inverse());
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      push(pool[i] * pool[j]);
      if (j < i) {
        push(pool[j] * pool[i]);
      }
    }
    push(pool[i].inverse());
  }

  auto key = [](const PartialBijection& p) {
    return std::make_pair(!p.is_empty_map(), p.graph());
  };
  std::sort(pool.begin(), pool.end(),
            [&](const PartialBijection& a, const PartialBijection& b) {
              return key(a) < key(b);
            });

  std::map<PartialBijection, Elem> index;
  for (Elem i = 0; i < pool.size(); ++i) {
    index[pool[i]] = i;
  }

  MultiplicationTable t;
  t.n = pool.size();
  t.mul.resize(t.n * t.n);
  t.names.resize(t.n);
  for (Elem i = 0; i < t.n; ++i) {
    t.names[i] = pool[i].display();
    if (pool[i].is_empty_map()) {
      t.zero = i;
    }
    for (Elem j = 0; j < t.n; ++j) {
      t.mul[i * t.n + j] = index.at(pool[i] * pool[j]);
    }
  }
  return PartialBijectionClosure{std::move(t), std::move(pool)};
}

}  // namespace mgis

#endif  // MGIS_PARTIAL_BIJECTION_HPP_
