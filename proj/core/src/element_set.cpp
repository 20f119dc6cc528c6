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

#include "matroidkit/element_set.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "matroidkit/errors.hpp"

namespace matroidkit {

namespace {

void check_index(std::size_t e) {
  if (e >= kMaxGroundSize) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(e) + " exceeds the 32-element limit");
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<std::size_t> elements) {
  for (auto e : elements) {
    check_index(e);
    bits_ |= Mask{1} << e;
  }
}

ElementSet ElementSet::singleton(std::size_t e) {
  check_index(e);
  return ElementSet(Mask{1} << e);
}

ElementSet ElementSet::from_elements(const std::vector<std::size_t>& elements) {
  ElementSet out;
  for (auto e : elements) out = out.with(e);
  return out;
}

ElementSet ElementSet::with(std::size_t e) const {
  check_index(e);
  return ElementSet(bits_ | (Mask{1} << e));
}

ElementSet ElementSet::without(std::size_t e) const {
  check_index(e);
  return ElementSet(bits_ & ~(Mask{1} << e));
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each_element(*this, [&](std::size_t e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  if (empty()) return "-";
  std::string out;
  for_each_element(*this, [&](std::size_t e) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  });
  return out;
}

std::string ElementSet::to_braced_string() const {
  return "{" + (empty() ? std::string() : to_string()) + "}";
}

std::ostream& operator<<(std::ostream& os, ElementSet s) { return os << s.to_braced_string(); }

ElementSet parse_element_set(const std::string& text, std::size_t universe) {
  if (text == "-") return {};
  ElementSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        item.size() > 9) {
      throw Error(ErrorCode::kParseError, "parse error: invalid element list '" + text + "'");
    }
    const auto e = static_cast<std::size_t>(std::stoul(item));
    if (e >= universe) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + item + " out of range for ground set of size " + std::to_string(universe));
    }
    out = out.with(e);
  }
  if (text.empty() || text.back() == ',') {
    throw Error(ErrorCode::kParseError, "parse error: invalid element list '" + text + "'");
  }
  return out;
}

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size > kMaxGroundSize) {
    throw Error(ErrorCode::kGroundTooLarge, "ground set of size " + std::to_string(size) + " exceeds 32");
  }
}

GroundSet::GroundSet(std::size_t size, std::vector<std::string> names) : GroundSet(size) {
  if (!names.empty() && names.size() != size) {
    throw Error(ErrorCode::kInvalidName, "name table has " + std::to_string(names.size()) + " entries, expected " +
                                             std::to_string(size));
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw Error(ErrorCode::kInvalidName, "element names are not distinct");
  }
  names_ = std::move(names);
}

std::string GroundSet::label(std::size_t e) const {
  return has_names() ? names_.at(e) : std::to_string(e);
}

}  // namespace matroidkit
