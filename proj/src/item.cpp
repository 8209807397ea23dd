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

#include "icsmine/item.hpp"

#include "icsmine/error.hpp"

namespace icsmine {

namespace {

bool valid_attribute(std::string_view a) {
    if (a.empty()) {
        return false;
    }
    for (char c : a) {
        if (c == ',' || c == '=' || c == '<' || c == '>' || c == '\t' ||
            c == '\n' || c == '\r') {
            return false;
        }
    }
    return true;
}

bool valid_state(std::string_view s) {
    if (s.empty() || s.front() == '=') {
        return false;
    }
    for (char c : s) {
        if (c == ',' || c == '\t' || c == '\n' || c == '\r') {
            return false;
        }
    }
    return true;
}

}  // namespace

Item::Item(std::string attribute, std::string state)
    : attribute_(std::move(attribute)), state_(std::move(state)) {
    if (!valid_attribute(attribute_)) {
        throw ParseError("invalid item attribute '" + attribute_ + "'");
    }
    if (!valid_state(state_)) {
        throw ParseError("invalid item state '" + state_ + "' for attribute '" +
                         attribute_ + "'");
    }
}

Item Item::parse(std::string_view text) {
    auto pos = text.find_first_of("=<>");
    if (pos == std::string_view::npos || pos == 0) {
        throw ParseError("unparseable item '" + std::string(text) + "'");
    }
    std::string attribute(text.substr(0, pos));
    std::string state;
    if (text[pos] == '=') {
        state = std::string(text.substr(pos + 1));
    } else {
        // '<' and '>' are part of the state: "FIT301<0.5", "FIT101>=0.5".
        state = std::string(text.substr(pos));
    }
    return Item(std::move(attribute), std::move(state));
}

std::string Item::text() const {
    if (state_.front() == '<' || state_.front() == '>') {
        return attribute_ + state_;
    }
    return attribute_ + "=" + state_;
}

std::strong_ordering Item::operator<=>(const Item& other) const {
    if (auto c = attribute_ <=> other.attribute_; c != 0) {
        return c;
    }
    return state_ <=> other.state_;
}

}  // namespace icsmine
