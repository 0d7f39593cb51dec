// Copyright 2026 The relgme Authors
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

namespace relgme {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dimensions of a matrix, vector or factor shape do not fit together.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// A physical parameter lies outside its domain (speed >= c, degenerate geometry, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Malformed user input: bad files, non-normalized states, invalid partitions.
class InputError : public Error {
   public:
    using Error::Error;
};

/// A matrix that should be a density matrix is not one.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Iterative or floating-point failure (eigensolver divergence, negative radicands).
class NumericError : public Error {
   public:
    using Error::Error;
};

}  // namespace relgme
