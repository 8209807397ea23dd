// Copyright 2026-present the icsmine project
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

#include <compare>
#include <string>
#include <string_view>

namespace icsmine {

/// One attribute/state pair such as "MV101=Open" or "FIT301<0.5", the atom
/// of mining. Immutable. Items order by (attribute, state) so canonical
/// forms are well defined.
///
/// Rendering matches the conventional historian notation: actuator states
/// join with '=', threshold states already start with '<' or ">=" and join
/// bare ("FIT301<0.5"). The separators are reserved, which keeps item text
/// and rule keys unambiguous:
///   - attribute: non-empty, none of ',', '=', '<', '>', tab, newline
///   - state: non-empty, no ',', tab, or newline; must not start with '='
class Item {
public:
    Item(std::string attribute, std::string state);

    /// Inverse of text(). "MV101=Open" and "FIT301<0.5" both parse.
    static Item parse(std::string_view text);

    const std::string& attribute() const { return attribute_; }
    const std::string& state() const { return state_; }

    std::string text() const;

    std::strong_ordering operator<=>(const Item& other) const;
    bool operator==(const Item& other) const = default;

private:
    std::string attribute_;
    std::string state_;
};

}  // namespace icsmine
