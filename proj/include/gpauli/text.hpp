// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPAULI_TEXT_HPP
#define GPAULI_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gpauli/element.hpp"

namespace gpauli {

/// Parses element text:
///
///   element := [ "z^" INT WS ] site { WS "x" WS site }
///   site    := "X" INT "Z" INT
///   INT     := [ "-" ] DIGIT { DIGIT }
///   WS      := one or more spaces
///
/// The phase reduces mod 2L and site exponents mod k_i. Throws ParseError
/// carrying a 1-based column, including when the site count differs from the profile.
PauliElement parse_element(const Profile &profile, std::string_view text);

/// Canonical text; the phase token is omitted when c = 0.
std::string format_element(const PauliElement &g);

/// "2,3,4" -> {2, 3, 4}. Throws ParseError.
std::vector<Exponent> parse_dims(std::string_view text);

}  // namespace gpauli

#endif
