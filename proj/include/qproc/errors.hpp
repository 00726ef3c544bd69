// Copyright 2026 The qproc developers
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

namespace qproc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller handed us something malformed (bad dimensions, broken
/// invariants, unparseable files, unknown ids).
class InvalidInputError : public Error {
  public:
    using Error::Error;
};

/// A numerical routine failed to converge or produced garbage.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// A configured cap (dimension, depth, element count) was exceeded.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// The gate set cannot express what synthesis needs, e.g. a negative
/// power of a gate that has neither an inverse nor a known period.
class CapabilityError : public Error {
  public:
    using Error::Error;
};

} // namespace qproc
