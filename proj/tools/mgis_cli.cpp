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
// Command-line front end. Subcommands: validate, check-morita, roundtrip,
// verify-functor, analyze. Exit codes: 0 success/YES, 1 principled NO,
// 2 verification failure, 3 input error. All output orderings are fixed so
// golden-file tests stay byte-stable; --format json mirrors the text report
// one-to-one.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgis/mgis.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kVerificationFailure = 2;
constexpr int kInputError = 3;

enum class Format { Text, Json, Dot };
enum class InputKind { Auto, Table, Generators, Graph };

struct Options {
  std::string input;
  std::string names_file;
  Format format = Format::Text;
  bool dot = false;
  mgis::RepPolicy rep = mgis::RepPolicy::MinIndex;
  bool include_zero_object = true;
  std::size_t bound = 1000000;
  InputKind kind = InputKind::Auto;
};

// One report rendered three ways; text lines and json fields are appended
// in lockstep so the two formats carry identical information.
struct Report {
  std::vector<std::string> lines;
  ordered_json json;
  std::string dot;

  void field(const std::string& key, const std::string& value) {
    lines.push_back(key + ": " + value);
    json[key] = value;
  }
  void field(const std::string& key, std::size_t value) {
    lines.push_back(key + ": " + std::to_string(value));
    json[key] = value;
  }
  void field(const std::string& key, bool value) {
    lines.push_back(key + ": " + (value ? "true" : "false"));
    json[key] = value;
  }
  void list(const std::string& key, const std::vector<std::string>& values) {
    for (const auto& v : values) {
      lines.push_back(key + ": " + v);
    }
    json[key] = values;
  }
};

int emit(const Report& report, const Options& opt) {
  switch (opt.format) {
    case Format::Text:
      for (const auto& line : report.lines) {
        std::cout << line << "\n";
      }
      if (opt.dot && !report.dot.empty()) {
        std::cout << report.dot;
      }
      break;
    case Format::Json:
      std::cout << report.json.dump(2) << "\n";
      break;
    case Format::Dot:
      if (report.dot.empty()) {
        std::cerr << "error: this command has no DOT output\n";
        return kInputError;
      }
      std::cout << report.dot;
      break;
  }
  return kOk;
}

InputKind kind_of(const Options& opt) {
  if (opt.kind != InputKind::Auto) {
    return opt.kind;
  }
  auto ends_with = [&](const std::string& suffix) {
    return opt.input.size() >= suffix.size() &&
           opt.input.compare(opt.input.size() - suffix.size(), suffix.size(),
                             suffix) == 0;
  };
  if (ends_with(".table") || ends_with(".tbl")) {
    return InputKind::Table;
  }
  if (ends_with(".gens")) {
    return InputKind::Generators;
  }
  if (ends_with(".graph") || ends_with(".dot")) {
    return InputKind::Graph;
  }
  throw mgis::Error(mgis::ErrorCode::InvalidArgument,
                    "cannot infer input kind of '" + opt.input +
                        "'; use --kind table|gens|graph");
}

mgis::MultiplicationTable load_table(const Options& opt) {
  switch (kind_of(opt)) {
    case InputKind::Table: {
      auto t = mgis::read_table_file(opt.input);
      if (!opt.names_file.empty()) {
        auto in = mgis::open_or_throw(opt.names_file);
        mgis::read_names(in, t);
      }
      return t;
    }
    case InputKind::Generators: {
      const auto gens = mgis::read_generators_file(opt.input);
      return mgis::generate_from_partial_bijections(gens.domain_size,
                                                    gens.generators)
          .table;
    }
    case InputKind::Graph: {
      const auto g = mgis::read_graph_file(opt.input);
      return mgis::build_gis(g).semigroup.table();
    }
    case InputKind::Auto:
      break;
  }
  throw mgis::Error(mgis::ErrorCode::InvalidArgument, "unreachable");
}

std::string witness_names(const mgis::ValidatedSemigroup& s,
                          const std::vector<mgis::Elem>& elems) {
  std::string out = "(";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    out += (i ? ", " : "") + s.name(elems[i]);
  }
  return out + ")";
}

int cmd_validate(const Options& opt) {
  Report report;
  report.field("command", std::string("validate"));
  report.field("input", opt.input);

  const mgis::MultiplicationTable table = load_table(opt);
  mgis::ValidationResult r = mgis::validate(table);
  if (!r.ok()) {
    report.field("verdict", std::string("invalid"));
    std::vector<std::string> msgs;
    for (const auto& v : r.violations) {
      msgs.push_back(v.describe(table));
    }
    report.list("violation", msgs);
    if (r.truncated) {
      report.field("violations-truncated", true);
    }
    const int rc = emit(report, opt);
    return rc == kOk ? kVerificationFailure : rc;
  }

  const mgis::ValidatedSemigroup& s = *r.semigroup;
  report.field("verdict", std::string("valid"));
  report.field("size", s.size());
  report.field("idempotents", s.idempotents().size());
  report.field("zero",
               s.zero() ? std::to_string(*s.zero()) : std::string("none"));
  report.field("combinatorial", mgis::green_data(s).combinatorial);
  return emit(report, opt);
}

int cmd_check_morita(const Options& opt) {
  Report report;
  report.field("command", std::string("check-morita"));
  report.field("input", opt.input);

  const auto s = mgis::validate_or_throw(load_table(opt));
  const mgis::MoritaVerdict verdict = mgis::check_morita_to_graph(s, opt.rep);
  report.field("verdict", verdict.yes ? std::string("YES") : std::string("NO"));

  if (!verdict.yes) {
    std::vector<std::string> reasons;
    for (mgis::MoritaReason r : verdict.reasons) {
      std::string line = mgis::morita_reason_code(r);
      if (r == mgis::MoritaReason::NotCombinatorial &&
          verdict.combinatorial_witness) {
        line += " witness " +
                witness_names(s, {(*verdict.combinatorial_witness)[0],
                                  (*verdict.combinatorial_witness)[1]});
      }
      if (r == mgis::MoritaReason::P1LocalFail && verdict.p1_local_witness) {
        line += " witness " +
                witness_names(s, {(*verdict.p1_local_witness)[0],
                                  (*verdict.p1_local_witness)[1],
                                  (*verdict.p1_local_witness)[2]});
      }
      reasons.push_back(line);
    }
    report.list("reason", reasons);
    const int rc = emit(report, opt);
    return rc == kOk ? kNo : rc;
  }

  const mgis::GammaGraph& gamma = *verdict.gamma;
  report.field("gamma-vertices", gamma.graph.num_vertices);
  report.field("gamma-edges", gamma.graph.num_edges());
  std::vector<std::string> vertices, edges;
  for (std::size_t v = 0; v < gamma.graph.num_vertices; ++v) {
    vertices.push_back(gamma.graph.vertex_name(v));
  }
  for (std::size_t e = 0; e < gamma.graph.num_edges(); ++e) {
    edges.push_back(gamma.graph.edge_name(e) + " " +
                    gamma.graph.vertex_name(gamma.graph.edge_src[e]) +
                    " -> " +
                    gamma.graph.vertex_name(gamma.graph.edge_rng[e]));
  }
  report.list("vertex", vertices);
  report.list("edge", edges);
  report.dot = mgis::graph_to_dot(gamma.graph, "Gamma_S");
  return emit(report, opt);
}

int cmd_roundtrip(const Options& opt) {
  Report report;
  report.field("command", std::string("roundtrip"));
  report.field("input", opt.input);

  const mgis::DirectedGraph g = mgis::read_graph_file(opt.input);
  if (!mgis::is_acyclic(g)) {
    throw mgis::Error(mgis::ErrorCode::NotAcyclic,
                      "roundtrip requires an acyclic graph");
  }
  const mgis::GisSemigroup s = mgis::build_gis(g);
  const mgis::GammaGraph gamma = mgis::build_gamma(s.semigroup, opt.rep);
  report.field("semigroup-size", s.semigroup.size());
  report.field("gamma-vertices", gamma.graph.num_vertices);
  report.field("gamma-edges", gamma.graph.num_edges());

  const auto iso = mgis::graph_isomorphism(g, gamma.graph, opt.bound);
  report.field("isomorphic", iso.has_value());
  report.dot = mgis::graph_to_dot(gamma.graph, "Gamma_S");
  if (!iso) {
    const int rc = emit(report, opt);
    return rc == kOk ? kVerificationFailure : rc;
  }
  std::vector<std::string> vmap, emap;
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    vmap.push_back(g.vertex_name(v) + " -> " +
                   gamma.graph.vertex_name(iso->vertex_map[v]));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    emap.push_back(g.edge_name(e) + " -> " +
                   gamma.graph.edge_name(iso->edge_map[e]));
  }
  report.list("vertex-map", vmap);
  report.list("edge-map", emap);
  return emit(report, opt);
}

int cmd_verify_functor(const Options& opt) {
  Report report;
  report.field("command", std::string("verify-functor"));
  report.field("input", opt.input);

  const auto s = mgis::validate_or_throw(load_table(opt));
  std::optional<mgis::EquivalenceFunctor> built;
  try {
    built.emplace(mgis::build_equivalence_functor(s, opt.rep));
  } catch (const mgis::Error& e) {
    if (e.code() == mgis::ErrorCode::NotMoritaGraphType) {
      report.field("verdict", std::string("NOT_MORITA_GRAPH_TYPE"));
      report.field("detail", std::string(e.what()));
      const int rc = emit(report, opt);
      return rc == kOk ? kNo : rc;
    }
    throw;
  }
  const mgis::EquivalenceFunctor& eq = *built;

  const mgis::FunctorCheck check =
      mgis::check_functor(eq.functor, eq.c_t.cat, eq.c_s.cat);
  report.field("gis-size", eq.t.semigroup.size());
  report.field("ct-objects", eq.c_t.cat.num_objects);
  report.field("ct-morphisms", eq.c_t.cat.num_morphisms());
  report.field("cs-objects", eq.c_s.cat.num_objects);
  report.field("cs-morphisms", eq.c_s.cat.num_morphisms());
  report.field("functorial", check.functorial);
  if (!check.functorial) {
    report.field("functorial-witness", check.functorial_witness);
  }
  report.field("faithful", check.faithful);
  if (!check.faithful) {
    report.field("faithful-witness", check.faithful_witness);
  }
  report.field("full", check.full);
  if (!check.full) {
    report.field("full-witness", check.full_witness);
  }
  report.field("essentially-surjective", check.essentially_surjective);
  if (!check.essentially_surjective) {
    report.field("essentially-surjective-witness", check.ess_surj_witness);
  }
  const int rc = emit(report, opt);
  if (rc != kOk) {
    return rc;
  }
  return check.all() ? kOk : kVerificationFailure;
}

int cmd_analyze(const Options& opt) {
  Report report;
  report.field("command", std::string("analyze"));
  report.field("input", opt.input);

  const auto s = mgis::validate_or_throw(load_table(opt));
  report.field("size", s.size());
  report.field("idempotents", s.idempotents().size());
  report.field("zero",
               s.zero() ? std::to_string(*s.zero()) : std::string("none"));

  const mgis::GreenData g = mgis::green_data(s);
  report.field("combinatorial", g.combinatorial);
  report.field("l-classes", g.num_l);
  report.field("r-classes", g.num_r);
  report.field("h-classes", g.num_h);
  report.field("d-classes", g.num_d);
  {
    std::vector<std::string> classes;
    const auto members = mgis::partition_members(g.d_class, g.num_d);
    for (const auto& cls : members) {
      std::string line;
      for (mgis::Elem x : cls) {
        line += (line.empty() ? "" : " ") + s.name(x);
      }
      classes.push_back(line);
    }
    report.list("d-class", classes);
  }

  if (!s.has_zero()) {
    report.field("perrot", std::string("skipped (no zero element)"));
    return emit(report, opt);
  }

  const mgis::IdempotentPoset poset = mgis::build_poset(s);
  {
    std::vector<std::string> maximal;
    for (mgis::Elem m : mgis::maximal_idempotents(poset)) {
      maximal.push_back(s.name(m));
    }
    report.list("maximal-idempotent", maximal);
  }

  const mgis::PerrotReport rep = mgis::perrot_report(s);
  report.field("p1", rep.p1);
  if (rep.p1_witness) {
    report.field("p1-witness",
                 witness_names(s, {(*rep.p1_witness)[0], (*rep.p1_witness)[1]}));
  }
  report.field("p1-local", rep.p1_local);
  if (rep.p1_local_witness) {
    report.field("p1-local-witness",
                 witness_names(s, {(*rep.p1_local_witness)[0],
                                   (*rep.p1_local_witness)[1],
                                   (*rep.p1_local_witness)[2]}));
  }
  report.field("p2", rep.p2);
  report.field("p2-local", rep.p2_local);
  report.field("max-idempotents-above", rep.max_above_nonzero);
  report.field("max-interval-size", rep.max_interval_size);
  report.field("p3", rep.p3);
  if (rep.p3_witness) {
    report.field("p3-witness",
                 witness_names(s, {(*rep.p3_witness)[0], (*rep.p3_witness)[1],
                                   (*rep.p3_witness)[2]}));
  }
  report.field("p4", rep.p4);
  if (rep.p4_witness) {
    report.field("p4-witness", s.name(*rep.p4_witness));
  }
  report.field("proper", rep.proper);
  if (rep.proper_witness) {
    report.field("proper-witness",
                 witness_names(s, {(*rep.proper_witness)[0],
                                   (*rep.proper_witness)[1]}));
  }

  const auto c = mgis::karoubi(s, opt.include_zero_object);
  const auto l = mgis::left_category(s, opt.include_zero_object);
  report.field("c-objects", c.cat.num_objects);
  report.field("c-morphisms", c.cat.num_morphisms());
  report.field("l-objects", l.cat.num_objects);
  report.field("l-morphisms", l.cat.num_morphisms());

  if (rep.p3) {
    const auto p = mgis::path_category(s);
    report.field("p-objects", p.cat.num_objects);
    report.field("p-arrows", p.cat.num_morphisms());
  } else {
    report.field("p-objects", std::string("n/a (P3 fails)"));
  }
  if (rep.p3 && rep.p4) {
    const auto pl = mgis::p_equivalent_to_l(s);
    report.field("p-equivalent-to-l", pl.equivalent);
  } else {
    report.field("p-equivalent-to-l",
                 std::string("n/a (requires P3 and P4)"));
  }

  report.dot = mgis::graph_to_dot(mgis::hasse_graph(s, poset), "Hasse");
  return emit(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morita equivalence to graph inverse semigroups"};
  app.require_subcommand(1);

  Options opt;
  std::string rep = "min", format = "text", kind = "auto";

  auto add_common = [&](CLI::App* cmd, bool takes_names) {
    cmd->add_option("input", opt.input, "input file")->required();
    cmd->add_option("--format", format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_flag("--dot", opt.dot, "append DOT output to the text report");
    cmd->add_option("--rep", rep, "D-class representative policy")
        ->check(CLI::IsMember({"min", "max"}));
    cmd->add_option("--bound", opt.bound, "search budget for backtracking")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kind", kind, "input kind: table, gens or graph")
        ->check(CLI::IsMember({"auto", "table", "gens", "graph"}));
    if (takes_names) {
      cmd->add_option("--names", opt.names_file,
                      "display-name file for table input");
    }
  };

  CLI::App* validate = app.add_subcommand("validate",
                                          "check the inverse-semigroup axioms");
  add_common(validate, true);
  CLI::App* check = app.add_subcommand(
      "check-morita",
      "decide Morita equivalence to a graph inverse semigroup");
  add_common(check, true);
  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "build S(Gamma) and recover Gamma up to isomorphism");
  add_common(roundtrip, false);
  CLI::App* verify = app.add_subcommand(
      "verify-functor",
      "build the equivalence functor C(S(Gamma_S)) -> C(S) and check it");
  add_common(verify, true);
  CLI::App* analyze =
      app.add_subcommand("analyze", "full structure report");
  add_common(analyze, true);
  analyze->add_option("--include-zero-object", opt.include_zero_object,
                      "include the zero object in C(S)/L(S) sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  opt.rep = rep == "max" ? mgis::RepPolicy::MaxIndex
                         : mgis::RepPolicy::MinIndex;
  opt.format = format == "json"  ? Format::Json
               : format == "dot" ? Format::Dot
                                 : Format::Text;
  opt.kind = kind == "table"   ? InputKind::Table
             : kind == "gens"  ? InputKind::Generators
             : kind == "graph" ? InputKind::Graph
                               : InputKind::Auto;

  try {
    if (validate->parsed()) {
      return cmd_validate(opt);
    }
    if (check->parsed()) {
      return cmd_check_morita(opt);
    }
    if (roundtrip->parsed()) {
      return cmd_roundtrip(opt);
    }
    if (verify->parsed()) {
      return cmd_verify_functor(opt);
    }
    if (analyze->parsed()) {
      return cmd_analyze(opt);
    }
  } catch (const mgis::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const mgis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case mgis::ErrorCode::InvalidArgument:
      case mgis::ErrorCode::NotAcyclic:
      case mgis::ErrorCode::CyclicWithoutBound:
      case mgis::ErrorCode::NotInjective:
        return kInputError;
      case mgis::ErrorCode::NotMoritaGraphType:
        return kNo;
      default:
        return kVerificationFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kInputError;
}
