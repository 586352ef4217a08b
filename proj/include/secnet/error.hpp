// Copyright 2026 The secnet Authors
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

namespace secnet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed graph edits, out-of-range costs, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured number of evaluated subsets.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

// A builder could not produce (or certify) the requested topology.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace secnet
