// Copyright 2026 The wtab Authors
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

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "wtab/error.hpp"

namespace wtab {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int value) : doubled_(2 * value) {}

  static constexpr HalfInt from_doubled(int doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }

  constexpr int doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr int sign() const { return (doubled_ > 0) - (doubled_ < 0); }
  constexpr HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  /// Integer value; only meaningful when is_integer().
  constexpr int as_int() const { return doubled_ / 2; }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

  /// Accepts "-7", "3", "3/2", "-11/2".
  static HalfInt parse(std::string_view text) {
    auto fail = [&] { throw Error(ErrorCode::kParse, "not an exact half-integer: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    auto to_int = [&](std::string_view s) {
      int v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
      return v;
    };
    if (slash == std::string_view::npos) return HalfInt(to_int(text));
    const int num = to_int(text.substr(0, slash));
    const int den = to_int(text.substr(slash + 1));
    if (den == 1) return HalfInt(num);
    if (den != 2) fail();
    return from_doubled(num);
  }

 private:
  int doubled_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace wtab

template <>
struct std::hash<wtab::HalfInt> {
  std::size_t operator()(wtab::HalfInt h) const noexcept { return std::hash<int>{}(h.doubled()); }
};
