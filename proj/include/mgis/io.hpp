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
// Readers and writers for the three input formats and DOT.
//
//   table:      line 1 "n z" (z = zero index or -1), then n rows of n
//               space-separated element indices; optional names file with
//               one display name per line.
//   generators: line 1 "m k" (domain size, generator count), then k lines
//               of m tokens, each a 1-based target or "-" for undefined.
//   graph:      "vertex <name>" and "edge <name> <src> <rng>" lines, or
//               the DOT subset that graph_to_dot emits (auto-detected).
//
// "#" starts a comment; blank lines are skipped.

#ifndef MGIS_IO_HPP_
#define MGIS_IO_HPP_

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "partial_bijection.hpp"
#include "semigroup.hpp"
#include "semilattice.hpp"

namespace mgis {
namespace io_detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) {
      tokens.push_back(tok);
    }
    if (!tokens.empty()) {
      out.push_back({number, std::move(tokens)});
    }
  }
  return out;
}

inline long long parse_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument(tok);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace io_detail

inline MultiplicationTable read_table(std::istream& in) {
  using io_detail::parse_int;
  const auto lines = io_detail::tokenize_lines(in);
  if (lines.empty()) {
    throw ParseError(0, "empty table file");
  }
  const auto& head = lines.front();
  if (head.tokens.size() != 2) {
    throw ParseError(head.number, "expected header 'n z'");
  }
  const long long n = parse_int(head.tokens[0], head.number);
  const long long z = parse_int(head.tokens[1], head.number);
  if (n < 0) {
    throw ParseError(head.number, "element count must be nonnegative");
  }
  if (z < -1 || z >= n) {
    throw ParseError(head.number, "zero index out of range");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1));
  }

  MultiplicationTable t;
  t.n = static_cast<std::size_t>(n);
  if (z >= 0) {
    t.zero = static_cast<Elem>(z);
  }
  t.mul.resize(t.n * t.n);
  for (std::size_t r = 0; r < t.n; ++r) {
    const auto& row = lines[r + 1];
    if (row.tokens.size() != t.n) {
      throw ParseError(row.number, "expected " + std::to_string(t.n) +
                                       " entries in table row");
    }
    for (std::size_t c = 0; c < t.n; ++c) {
      const long long v = parse_int(row.tokens[c], row.number);
      if (v < 0 || v >= n) {
        throw ParseError(row.number,
                         "table entry " + std::to_string(v) + " out of range");
      }
      t.mul[r * t.n + c] = static_cast<Elem>(v);
    }
  }
  return t;
}

// One display name per line, in element order.
inline void read_names(std::istream& in, MultiplicationTable& t) {
  std::vector<std::string> names;
  std::string raw;
  while (std::getline(in, raw)) {
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    names.push_back(raw);
  }
  while (!names.empty() && names.back().empty()) {
    names.pop_back();
  }
  if (names.size() != t.n) {
    throw ParseError(names.size(),
                     "expected " + std::to_string(t.n) + " names, found " +
                         std::to_string(names.size()));
  }
  t.names = std::move(names);
}

struct GeneratorInput {
  std::size_t domain_size = 0;
  std::vector<PartialBijection> generators;
};

inline GeneratorInput read_generators(std::istream& in) {
  using io_detail::parse_int;
  const auto lines = io_detail::tokenize_lines(in);
  if (lines.empty()) {
    throw ParseError(0, "empty generator file");
  }
  const auto& head = lines.front();
  if (head.tokens.size() != 2) {
    throw ParseError(head.number, "expected header 'm k'");
  }
  const long long m = parse_int(head.tokens[0], head.number);
  const long long k = parse_int(head.tokens[1], head.number);
  if (m < 0 || k < 0) {
    throw ParseError(head.number, "header values must be nonnegative");
  }
  if (lines.size() != static_cast<std::size_t>(k) + 1) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(k) + " generator rows");
  }

  GeneratorInput out;
  out.domain_size = static_cast<std::size_t>(m);
  for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) {
    const auto& row = lines[r + 1];
    if (row.tokens.size() != out.domain_size) {
      throw ParseError(row.number, "expected " + std::to_string(m) +
                                       " tokens in generator row");
    }
    PartialBijection p{std::vector<std::size_t>(out.domain_size,
                                                PartialBijection::kUndefined)};
    for (std::size_t c = 0; c < out.domain_size; ++c) {
      if (row.tokens[c] == "-") {
        continue;
      }
      const long long v = parse_int(row.tokens[c], row.number);
      if (v < 1 || v > m) {
        throw ParseError(row.number, "target " + std::to_string(v) +
                                         " outside the 1-based domain");
      }
      p.img[c] = static_cast<std::size_t>(v - 1);
    }
    if (!p.is_injective()) {
      throw ParseError(row.number, "generator row is not injective");
    }
    out.generators.push_back(std::move(p));
  }
  return out;
}

namespace io_detail {

// Tokens for the DOT subset: quoted strings, bare words, "->" and the
// punctuation of node/edge statements.
struct DotToken {
  std::string text;
  bool quoted;
  std::size_t line;
};

inline std::vector<DotToken> dot_tokens(const std::string& src) {
  std::vector<DotToken> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      while (i < src.size() && src[i] != '"') {
        if (src[i] == '\\' && i + 1 < src.size()) {
          ++i;
        }
        if (src[i] == '\n') {
          ++line;
        }
        text += src[i++];
      }
      if (i == src.size()) {
        throw ParseError(line, "unterminated string");
      }
      ++i;
      out.push_back({text, true, line});
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({"->", false, line});
      i += 2;
    } else if (c == '{' || c == '}' || c == ';' || c == '[' || c == ']' ||
               c == '=' || c == ',') {
      out.push_back({std::string(1, c), false, line});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '.') {
      std::string text;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_' || src[i] == '.')) {
        text += src[i++];
      }
      out.push_back({text, false, line});
    } else {
      throw ParseError(line, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

inline DirectedGraph read_graph_dot(const std::string& src) {
  const auto toks = dot_tokens(src);
  std::size_t i = 0;
  auto need = [&](const std::string& what) -> const DotToken& {
    if (i >= toks.size()) {
      throw ParseError(toks.empty() ? 0 : toks.back().line,
                       "unexpected end of input, expected " + what);
    }
    return toks[i];
  };
  auto expect = [&](const std::string& text) {
    const auto& t = need("'" + text + "'");
    if (t.quoted || t.text != text) {
      throw ParseError(t.line, "expected '" + text + "', got '" + t.text + "'");
    }
    ++i;
  };

  expect("digraph");
  if (need("'{'").text != "{") {
    ++i;  // optional graph name
  }
  expect("{");

  DirectedGraph g;
  std::map<std::string, std::size_t> vertex_of;
  auto vertex = [&](const std::string& name) {
    auto it = vertex_of.find(name);
    if (it != vertex_of.end()) {
      return it->second;
    }
    const std::size_t v = g.add_vertex(name);
    vertex_of[name] = v;
    return v;
  };

  while (true) {
    const auto& t = need("'}'");
    if (!t.quoted && t.text == "}") {
      ++i;
      break;
    }
    const std::string first = t.text;
    const std::size_t first_line = t.line;
    ++i;
    const auto& nxt = need("';' or '->'");
    if (!nxt.quoted && nxt.text == ";") {
      vertex(first);
      ++i;
      continue;
    }
    if (nxt.quoted || nxt.text != "->") {
      throw ParseError(first_line, "expected ';' or '->' after node");
    }
    ++i;
    const auto& target = need("target node");
    const std::string second = target.text;
    ++i;
    std::string label;
    if (i < toks.size() && !toks[i].quoted && toks[i].text == "[") {
      ++i;
      while (true) {
        const auto& key = need("attribute or ']'");
        if (!key.quoted && key.text == "]") {
          ++i;
          break;
        }
        const std::string attr = key.text;
        ++i;
        expect("=");
        const auto& val = need("attribute value");
        if (attr == "label") {
          label = val.text;
        }
        ++i;
        if (i < toks.size() && !toks[i].quoted && toks[i].text == ",") {
          ++i;
        }
      }
    }
    expect(";");
    g.add_edge(vertex(first), vertex(second), label);
  }
  return g;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace io_detail

inline DirectedGraph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string src = buf.str();

  // DOT input starts with the digraph keyword; otherwise use the native
  // vertex/edge line format.
  {
    std::istringstream probe(src);
    std::string first;
    if (probe >> first && first == "digraph") {
      return io_detail::read_graph_dot(src);
    }
  }

  std::istringstream native(src);
  const auto lines = io_detail::tokenize_lines(native);
  DirectedGraph g;
  std::map<std::string, std::size_t> vertex_of;
  for (const auto& line : lines) {
    const auto& tok = line.tokens;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) {
        throw ParseError(line.number, "expected 'vertex <name>'");
      }
      if (vertex_of.count(tok[1])) {
        throw ParseError(line.number, "duplicate vertex '" + tok[1] + "'");
      }
      vertex_of[tok[1]] = g.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) {
        throw ParseError(line.number, "expected 'edge <name> <src> <rng>'");
      }
      const auto src_it = vertex_of.find(tok[2]);
      const auto rng_it = vertex_of.find(tok[3]);
      if (src_it == vertex_of.end() || rng_it == vertex_of.end()) {
        throw ParseError(line.number, "edge endpoint not declared");
      }
      g.add_edge(src_it->second, rng_it->second, tok[1]);
    } else {
      throw ParseError(line.number, "unknown directive '" + tok[0] + "'");
    }
  }
  return g;
}

inline void write_table(std::ostream& out, const MultiplicationTable& t) {
  out << t.n << " " << (t.zero ? static_cast<long long>(*t.zero) : -1) << "\n";
  for (std::size_t r = 0; r < t.n; ++r) {
    for (std::size_t c = 0; c < t.n; ++c) {
      out << (c ? " " : "") << t.at(r, c);
    }
    out << "\n";
  }
}

inline void write_names(std::ostream& out, const MultiplicationTable& t) {
  for (std::size_t i = 0; i < t.n; ++i) {
    out << t.name(i) << "\n";
  }
}

inline void write_graph(std::ostream& out, const DirectedGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    out << "vertex " << g.vertex_name(v) << "\n";
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out << "edge " << g.edge_name(e) << " " << g.vertex_name(g.edge_src[e])
        << " " << g.vertex_name(g.edge_rng[e]) << "\n";
  }
}

inline std::string graph_to_dot(const DirectedGraph& g,
                                const std::string& title = "G") {
  using io_detail::dot_quote;
  std::string out = "digraph " + dot_quote(title) + " {\n";
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    out += "  " + dot_quote(g.vertex_name(v)) + ";\n";
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    out += "  " + dot_quote(g.vertex_name(g.edge_src[e])) + " -> " +
           dot_quote(g.vertex_name(g.edge_rng[e])) + " [label=" +
           dot_quote(g.edge_name(e)) + "];\n";
  }
  return out + "}\n";
}

// Cover digraph of the idempotent poset, arrows from covered to covering
// idempotent; feed to graph_to_dot for a Hasse diagram.
inline DirectedGraph hasse_graph(const ValidatedSemigroup& s,
                                 const IdempotentPoset& p) {
  DirectedGraph g;
  for (Elem e : p.elems) {
    g.add_vertex(s.name(e));
  }
  for (std::size_t i = 0; i < p.elems.size(); ++i) {
    for (std::size_t j = 0; j < p.elems.size(); ++j) {
      if (p.covers[i][j]) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

inline std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "'");
  }
  return in;
}

inline MultiplicationTable read_table_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_table(in);
}

inline GeneratorInput read_generators_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_generators(in);
}

inline DirectedGraph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_graph(in);
}

}  // namespace mgis

#endif  // MGIS_IO_HPP_
