// Copyright 2026 The gpforce Authors
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

#ifndef GPFORCE_ERRORS_HPP_
#define GPFORCE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gpforce {

// Invalid input: bad graph parameters, malformed matchings, subsets that are
// not part of the matching they are checked against.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The two forcing-number engines disagreed. Always an implementation bug.
class EngineMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Members of one rotation orbit carry different forcing numbers.
class OrbitInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gpforce

#endif  // GPFORCE_ERRORS_HPP_
