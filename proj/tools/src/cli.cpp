// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "matroidkit/axioms.hpp"
#include "matroidkit/cli/corpus.hpp"
#include "matroidkit/cli/report.hpp"
#include "matroidkit/cli/verify.hpp"
#include "matroidkit/errors.hpp"
#include "matroidkit/graphic.hpp"
#include "matroidkit/representation.hpp"
#include "matroidkit/space.hpp"
#include "matroidkit/structure.hpp"
#include "matroidkit/text_format.hpp"

namespace matroidkit::cli {

namespace {

struct Source {
  std::string id;
  std::string text;
  SourceKind kind;
};

Source read_source(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto text = buffer.str();
  const auto kind = detect_source_kind(text);
  return {std::filesystem::path(path).stem().string(), std::move(text), kind};
}

Matroid load_matroid(const Source& s) {
  switch (s.kind) {
    case SourceKind::kMatrix:
      return vector_matroid(VectorFamily(parse_matrix(s.text)));
    case SourceKind::kSetSystem: {
      const auto system = parse_set_system(s.text);
      return Matroid::from_family(system.ground, system.family);
    }
    case SourceKind::kGraph:
      return cycle_matroid(parse_graph(s.text));
    case SourceKind::kOperatorTable:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "an operator table does not define a matroid");
}

VectorFamily load_family(const Source& s) {
  if (s.kind != SourceKind::kMatrix) throw Error(ErrorCode::kInvalidArgument, "expected a matrix file");
  return VectorFamily(parse_matrix(s.text));
}

MultiGraph load_graph(const Source& s) {
  if (s.kind != SourceKind::kGraph) throw Error(ErrorCode::kInvalidArgument, "expected a graph file");
  return parse_graph(s.text);
}

void print_sets(std::ostream& out, const char* tag, const std::vector<ElementSet>& sets) {
  for (auto s : sets) out << tag << ' ' << s.to_string() << '\n';
}

// Renames the elements of `s` inside `survivors` to their rank in ascending
// order.
ElementSet relabel(ElementSet s, ElementSet survivors) {
  ElementSet result;
  std::size_t index = 0;
  for_each_element(survivors, [&](std::size_t e) {
    if (s.contains(e)) result = result.with(index);
    ++index;
  });
  return result;
}

int emit(std::ostream& out, const Report& report) {
  out << report.to_text();
  return report.all_pass() ? kExitPass : kExitFail;
}

Generator field_generator(const std::string& name) {
  static const std::map<std::string, Generator> kFields = {
      {"gf2", Generator::kRandomMatrixGf2},
      {"gf3", Generator::kRandomMatrixGf3},
      {"gf5", Generator::kRandomMatrixGf5},
      {"q", Generator::kRandomMatrixQ},
  };
  const auto it = kFields.find(name);
  if (it == kFields.end()) throw Error(ErrorCode::kInvalidArgument, "unknown field '" + name + "'");
  return it->second;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matroid toolkit", "matroidkit"};
  app.require_subcommand(1);

  std::string path;
  std::string contract_text;
  std::string delete_text;
  std::string set_text;
  std::string target;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_ground = 8;
  std::vector<std::string> fields{"gf2", "gf3", "q"};
  unsigned threads = 1;

  const auto with_file = [&](const char* name, const char* help, const char* file_help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, file_help)->required();
    return sub;
  };
  auto* axioms_cmd = with_file("axioms", "Check (I1)(I2)(I3)(IM) on a set system", "set-system file");
  auto* circuits_cmd = with_file("circuits", "List circuits", "matrix, set-system or graph file");
  auto* bases_cmd = with_file("bases", "List bases", "matrix, set-system or graph file");
  auto* dual_cmd = with_file("dual", "Independent sets of the dual", "matrix, set-system or graph file");
  auto* minor_cmd = with_file("minor", "Independent sets of M / C \\ D", "matrix, set-system or graph file");
  minor_cmd->add_option("--contract", contract_text, "elements to contract, e.g. 0,1");
  minor_cmd->add_option("--delete", delete_text, "elements to delete, e.g. 2");
  auto* closure_cmd = with_file("closure", "Closure of a set", "matrix, set-system or graph file");
  closure_cmd->add_option("--set", set_text, "the set, e.g. 0,1")->required();
  auto* ie_cmd = with_file("ie-check", "Idempotence and exchange of an operator", "any source or operator table");
  auto* tame_cmd = with_file("tame", "Circuit-cocircuit intersection sizes", "matrix, set-system or graph file");
  auto* rep_cmd = with_file("rep", "Vector matroid of a matrix as a set system", "matrix file");
  auto* ts_cmd = with_file("ts", "Thin sums checks for a matrix", "matrix file");
  auto* dualrep_cmd = with_file("dualrep", "Representation of the dual matroid", "matrix file");
  auto* cycle_cmd = with_file("graph-cycle", "Circuits of the cycle matroid", "graph file");
  auto* bond_cmd = with_file("graph-bond", "Circuits of the bond matroid", "graph file");

  auto* verify_cmd = app.add_subcommand("verify", "Run every check over a generated corpus");
  verify_cmd->add_option("target", target, "what to verify")->required()->check(CLI::IsMember({"all"}));
  verify_cmd->add_option("--seed", seed, "corpus seed");
  verify_cmd->add_option("--count", count, "number of random instances");
  verify_cmd->add_option("--max-ground", max_ground, "largest ground set");
  verify_cmd->add_option("--fields", fields, "matrix fields: gf2,gf3,gf5,q")->delimiter(',');
  verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      CorpusSpec spec;
      spec.seed = seed;
      spec.count = count;
      spec.max_ground = max_ground;
      spec.generators.push_back(Generator::kExplicitUniform);
      for (const auto& f : fields) {
        const auto g = field_generator(f);
        if (std::find(spec.generators.begin(), spec.generators.end(), g) == spec.generators.end()) {
          spec.generators.push_back(g);
        }
      }
      spec.generators.push_back(Generator::kRandomGraph);
      spec.validate();
      if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
      return emit(out, verify_all(spec, threads));
    }

    const auto source = read_source(path);

    if (axioms_cmd->parsed()) {
      if (source.kind != SourceKind::kSetSystem) throw Error(ErrorCode::kInvalidArgument, "expected a set-system file");
      const auto system = parse_set_system(source.text);
      const auto r = check_axioms(system.ground, system.family);
      Report report;
      const std::pair<const char*, const AxiomCheck*> lines[] = {
          {"axiom-i1", &r.i1}, {"axiom-i2", &r.i2}, {"axiom-i3", &r.i3}, {"axiom-im", &r.im}};
      for (const auto& [name, c] : lines) report.add(name, source.id, c->pass, c->pass ? "" : c->witness());
      return emit(out, report);
    }
    if (ie_cmd->parsed()) {
      const auto s = source.kind == SourceKind::kOperatorTable ? parse_operator_table(source.text)
                                                               : SpaceOperator::closure_of(load_matroid(source));
      Report report;
      const bool idempotent = is_idempotent(s);
      const bool exchange = is_exchange(s);
      report.add("idempotent", source.id, idempotent);
      report.add("exchange", source.id, exchange);
      report.add("ie", source.id, idempotent && exchange);
      return emit(out, report);
    }
    if (rep_cmd->parsed()) {
      const auto m = vector_matroid(load_family(source));
      out << format_set_system(m.universe_size(), m.independent_sets());
      return kExitPass;
    }
    if (ts_cmd->parsed()) {
      const auto f = load_family(source);
      Report report;
      report.add("thin-family", source.id, is_thin_family(f).thin);
      const auto at = first_disagreement(thin_sums_system(f), vector_matroid(f));
      report.add("ts-collapse", source.id, !at, at ? "differs at " + at->to_braced_string() : "");
      const auto d = verify_ts_duality(f);
      report.add("ts-duality-forward", source.id, d.forward,
                 d.forward_mismatch ? "differs at " + d.forward_mismatch->to_braced_string() : "");
      report.add("ts-duality-backward", source.id, d.backward,
                 d.backward_mismatch ? "differs at " + d.backward_mismatch->to_braced_string() : "");
      return emit(out, report);
    }
    if (dualrep_cmd->parsed()) {
      out << format_matrix(dual_representation(load_family(source)).matrix());
      return kExitPass;
    }
    if (cycle_cmd->parsed()) {
      print_sets(out, "circuit", cycle_matroid(load_graph(source)).circuits());
      return kExitPass;
    }
    if (bond_cmd->parsed()) {
      print_sets(out, "circuit", bond_matroid(load_graph(source)).circuits());
      return kExitPass;
    }

    const auto m = load_matroid(source);
    if (circuits_cmd->parsed()) {
      print_sets(out, "circuit", m.circuits());
    } else if (bases_cmd->parsed()) {
      print_sets(out, "base", m.bases());
    } else if (dual_cmd->parsed()) {
      out << format_set_system(m.universe_size(), m.dual().independent_sets());
    } else if (minor_cmd->parsed()) {
      const auto c = parse_element_set(contract_text.empty() ? "-" : contract_text, m.universe_size());
      const auto d = parse_element_set(delete_text.empty() ? "-" : delete_text, m.universe_size());
      if (!(c & d).empty()) throw Error(ErrorCode::kInvalidArgument, "contract and delete sets overlap");
      const auto minor = m.contract(c).delete_elements(d);
      auto family = minor.independent_sets();
      for (auto& s : family) s = relabel(s, minor.ground());
      std::sort(family.begin(), family.end());
      out << format_set_system(minor.ground().size(), family);
    } else if (closure_cmd->parsed()) {
      const auto x = parse_element_set(set_text, m.universe_size());
      out << "closure " << span(m, x).to_string() << '\n';
    } else if (tame_cmd->parsed()) {
      const auto t = tameness(m);
      Report report;
      const bool pass = t.all_finite && t.max_intersection <= m.ground().size();
      report.add("tame", source.id, pass, "max-intersection=" + std::to_string(t.max_intersection));
      return emit(out, report);
    }
    return kExitPass;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace matroidkit::cli
