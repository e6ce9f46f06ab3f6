// Copyright 2026 The as-census Authors.
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

#ifndef ASCENSUS_ERRORS_HPP_
#define ASCENSUS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ascensus {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ASCENSUS_DEFINE_ERROR(Name)         \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

ASCENSUS_DEFINE_ERROR(InvalidPrime);
ASCENSUS_DEFINE_ERROR(InvalidDegree);
ASCENSUS_DEFINE_ERROR(DivisionByZero);
ASCENSUS_DEFINE_ERROR(FieldMismatch);
ASCENSUS_DEFINE_ERROR(NotMonic);
ASCENSUS_DEFINE_ERROR(ParseError);
ASCENSUS_DEFINE_ERROR(RamifiedAtInfinity);
ASCENSUS_DEFINE_ERROR(IsArtinSchreierTrivial);
ASCENSUS_DEFINE_ERROR(InvalidKappa);
ASCENSUS_DEFINE_ERROR(UndefinedDensity);
ASCENSUS_DEFINE_ERROR(BoundViolation);
ASCENSUS_DEFINE_ERROR(OracleMismatch);
ASCENSUS_DEFINE_ERROR(ConsistencyError);

#undef ASCENSUS_DEFINE_ERROR

// Raised when an enumeration would exceed its cap. `parameter` names the
// quantity that hit the limit so front ends can report it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string parameter, const std::string& what)
      : Error(what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace ascensus

#endif  // ASCENSUS_ERRORS_HPP_
