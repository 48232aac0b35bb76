// Copyright 2026 The LatticeQS Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lqs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different qubit counts or have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (dense-matrix qubit limit, ...) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A caller violated a documented precondition (bad index, bad parameter).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Requested symmetry sector contains no basis states.
class EmptySectorError : public Error {
 public:
  using Error::Error;
};

/// Operator translation would leave the open chain.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

/// An internal numerical invariant failed (non-real expectation, lost norm).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace lqs
