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

#include <stdexcept>
#include <string>

namespace icsmine {

/// Base class for all data errors raised by the toolkit.
/// The CLI maps these to exit code 2 (usage errors are exit code 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two states of the same attribute in one itemset.
class InconsistentItemsetError : public Error {
public:
    using Error::Error;
};

/// A configured attribute is missing from an input header.
class MissingColumnError : public Error {
public:
    MissingColumnError(const std::string& column, const std::string& where)
        : Error("missing column '" + column + "' in " + where), column_(column) {}

    const std::string& column() const { return column_; }

private:
    std::string column_;
};

/// A value, line, or config entry could not be parsed. The message carries
/// row and column context where available.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The operation needs at least one transaction / data row.
class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

/// A valve in Transition state has no configured flow-meter pairing.
class MissingPairingError : public Error {
public:
    using Error::Error;
};

/// NaN or infinity where a finite sensor reading is required.
class NonFiniteValueError : public Error {
public:
    using Error::Error;
};

/// An itemset required by the confidence computation is absent from the
/// support lookup. Signals a miner bug (downward closure violated).
class MissingSupportError : public Error {
public:
    using Error::Error;
};

/// Antecedent support of zero; confidence is undefined.
class ZeroAntecedentSupportError : public Error {
public:
    using Error::Error;
};

}  // namespace icsmine
