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

#include "matroidkit/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "matroidkit/errors.hpp"

namespace matroidkit {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in{std::string(text.substr(start, end - start))};
    Line line{number, {}};
    std::string token;
    while (in >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

Error parse_error(const std::string& message) { return Error(ErrorCode::kParseError, "parse error: " + message); }

std::uint64_t parse_count(const std::string& token, const std::string& what) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw parse_error("invalid " + what + " '" + token + "'");
  return value;
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t index, const std::string& keyword,
                           std::size_t arity) {
  if (index >= lines.size()) throw parse_error("missing '" + keyword + "' line");
  const auto& line = lines[index];
  if (line.tokens.front() != keyword || line.tokens.size() != arity + 1) {
    throw parse_error("line " + std::to_string(line.number) + ": expected '" + keyword + "' with " +
                      std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
  }
  return line;
}

std::size_t parse_ground_size(const Line& line) {
  const auto n = parse_count(line.tokens[1], "ground size");
  if (n > kMaxGroundSize) throw Error(ErrorCode::kGroundTooLarge, "ground set of size " + line.tokens[1] + " exceeds 32");
  return static_cast<std::size_t>(n);
}

}  // namespace

SourceKind detect_source_kind(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error("empty input");
  const auto& head = lines.front().tokens.front();
  if (head == "field") return SourceKind::kMatrix;
  if (head == "vertices") return SourceKind::kGraph;
  if (head == "ground") {
    if (lines.size() > 1 && lines[1].tokens.front() == "map") return SourceKind::kOperatorTable;
    return SourceKind::kSetSystem;
  }
  throw parse_error("line 1: unknown format starting with '" + head + "'");
}

Matrix parse_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error("empty input");
  const auto& head = lines[0];
  std::optional<Field> field;
  if (head.tokens.size() == 2 && head.tokens[0] == "field" && head.tokens[1] == "q") {
    field = Field::rationals();
  } else if (head.tokens.size() == 3 && head.tokens[0] == "field" && head.tokens[1] == "gf") {
    field = Field::prime(parse_count(head.tokens[2], "characteristic"));
  } else {
    throw parse_error("line " + std::to_string(head.number) + ": expected 'field gf <p>' or 'field q'");
  }
  const auto rows = static_cast<std::size_t>(parse_count(expect_keyword(lines, 1, "rows", 1).tokens[1], "row count"));
  const auto cols = static_cast<std::size_t>(parse_count(expect_keyword(lines, 2, "cols", 1).tokens[1], "column count"));
  if (lines.size() - 3 != rows) {
    throw parse_error("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 3));
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& line = lines[3 + r];
    if (line.tokens.size() != cols) {
      throw parse_error("row " + std::to_string(r + 1) + " has " + std::to_string(line.tokens.size()) +
                        " entries, expected " + std::to_string(cols));
    }
    for (const auto& token : line.tokens) entries.push_back(field->parse(token));
  }
  return Matrix(*field, rows, cols, std::move(entries));
}

std::string format_matrix(const Matrix& m) {
  std::string out = "field " + m.field().name() + "\nrows " + std::to_string(m.rows()) + "\ncols " +
                    std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += m.field().format(m(r, c));
    }
    out += '\n';
  }
  return out;
}

SetSystem parse_set_system(std::string_view text) {
  const auto lines = tokenize(text);
  const auto n = parse_ground_size(expect_keyword(lines, 0, "ground", 1));
  std::vector<ElementSet> family;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = expect_keyword(lines, i, "ind", 1);
    const auto s = parse_element_set(line.tokens[1], n);
    if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(s);
  }
  std::sort(family.begin(), family.end());
  return SetSystem{GroundSet(n), std::move(family)};
}

std::string format_set_system(std::size_t ground_size, std::span<const ElementSet> family) {
  std::string out = "ground " + std::to_string(ground_size) + "\n";
  for (auto s : family) out += "ind " + s.to_string() + "\n";
  return out;
}

SpaceOperator parse_operator_table(std::string_view text) {
  const auto lines = tokenize(text);
  const auto n = parse_ground_size(expect_keyword(lines, 0, "ground", 1));
  if (n > kMaxOperatorGround) throw Error(ErrorCode::kGroundTooLarge, "operator tables support at most 16 elements");
  const auto size = std::size_t{1} << n;
  if (lines.size() - 1 != size) {
    throw parse_error("expected " + std::to_string(size) + " map lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<ElementSet> table(size);
  std::vector<bool> seen(size, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = expect_keyword(lines, i, "map", 2);
    const auto in = parse_count(line.tokens[1], "mask");
    const auto out = parse_count(line.tokens[2], "mask");
    if (in >= size || out >= size) {
      throw parse_error("line " + std::to_string(line.number) + ": mask outside ground set of size " + std::to_string(n));
    }
    if (seen[in]) throw parse_error("line " + std::to_string(line.number) + ": duplicate map for mask " + line.tokens[1]);
    seen[in] = true;
    table[in] = ElementSet(static_cast<ElementSet::Mask>(out));
  }
  return SpaceOperator::from_table(n, std::move(table));
}

std::string format_operator_table(const SpaceOperator& s) {
  std::string out = "ground " + std::to_string(s.universe_size()) + "\n";
  for_each_subset(s.ground(), [&](ElementSet x) {
    out += "map " + std::to_string(x.mask()) + " " + std::to_string(s(x).mask()) + "\n";
  });
  return out;
}

MultiGraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const auto vertices = static_cast<std::size_t>(
      parse_count(expect_keyword(lines, 0, "vertices", 1).tokens[1], "vertex count"));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = expect_keyword(lines, i, "edge", 3);
    edges.push_back(Edge{static_cast<std::size_t>(parse_count(line.tokens[1], "edge id")),
                         static_cast<std::size_t>(parse_count(line.tokens[2], "vertex")),
                         static_cast<std::size_t>(parse_count(line.tokens[3], "vertex"))});
  }
  return MultiGraph(vertices, std::move(edges));
}

std::string format_graph(const MultiGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "edge " + std::to_string(e.id) + " " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace matroidkit
