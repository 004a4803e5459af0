// Copyright 2026 The gdpkraus Authors
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

namespace gdpk {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A numerical invariant (hermiticity, positivity, completeness, convergence)
// did not hold. The CLI maps the whole family to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPsdError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class CompletePositivityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidKrausError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidStateError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RangeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// y + z == 0: the generator has no dissipative part and (theta, Omega, tau)
// are undefined.
class DegenerateGeneratorError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace gdpk
