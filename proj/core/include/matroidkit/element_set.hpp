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

#ifndef MATROIDKIT_ELEMENT_SET_HPP_
#define MATROIDKIT_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace matroidkit {

inline constexpr std::size_t kMaxGroundSize = 32;

/// A subset of a ground set {0, ..., n-1} with n <= 32, stored as a bit mask.
/// Ordering is by mask value, which is the canonical emission order.
class ElementSet {
 public:
  using Mask = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  ElementSet(std::initializer_list<std::size_t> elements);

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1));
  }
  static ElementSet singleton(std::size_t e);
  static ElementSet from_elements(const std::vector<std::size_t>& elements);

  constexpr Mask mask() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const noexcept { return e < 32 && ((bits_ >> e) & 1U) != 0; }
  constexpr bool is_subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr std::size_t lowest() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  ElementSet with(std::size_t e) const;
  ElementSet without(std::size_t e) const;

  std::vector<std::size_t> elements() const;
  /// Comma-separated ascending indices, or "-" for the empty set.
  std::string to_string() const;
  /// "{0,1,2}" style, used in diagnostics.
  std::string to_braced_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

 private:
  Mask bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, ElementSet s);

/// Calls f(x) for every subset x of `within`, in ascending mask order.
template <typename F>
void for_each_subset(ElementSet within, F&& f) {
  const auto g = within.mask();
  ElementSet::Mask x = 0;
  while (true) {
    f(ElementSet(x));
    if (x == g) break;
    x = (x - g) & g;
  }
}

/// Calls f(e) for every member, ascending.
template <typename F>
void for_each_element(ElementSet s, F&& f) {
  auto bits = s.mask();
  while (bits != 0) {
    f(static_cast<std::size_t>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

/// Parses "0,2,5" or "-" into a set. Throws Error(kParseError) on malformed
/// input and Error(kElementOutOfRange) on indices >= universe.
ElementSet parse_element_set(const std::string& text, std::size_t universe);

/// A finite ground set {0, ..., size-1}, optionally with distinct names.
class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  GroundSet(std::size_t size, std::vector<std::string> names);

  std::size_t size() const noexcept { return size_; }
  ElementSet all() const noexcept { return ElementSet::full(size_); }
  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// The element's name, or its decimal index when unnamed.
  std::string label(std::size_t e) const;

 private:
  std::size_t size_;
  std::vector<std::string> names_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_ELEMENT_SET_HPP_
