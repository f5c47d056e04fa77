// Copyright 2026 The monolab Authors
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

namespace monolab {

/// Shape or subsystem-structure mismatch between a matrix and its DimSpec.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (bad exponent, p outside [0,1], ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix claimed to be a density matrix / Hermitian but is not, beyond tolerance.
class NotPhysicalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested measure has no implemented definition on this cut.
class MeasureUndefined : public std::runtime_error {
public:
    explicit MeasureUndefined(const std::string& what)
        : std::runtime_error("measure undefined on cut: " + what) {}
};

/// Bisection bracket whose endpoint scores share a sign.
class NoBracketedCrossing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace monolab
