// Copyright 2026 The hgs Authors
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

#ifndef HGS_ERRORS_H
#define HGS_ERRORS_H

#include <stdexcept>
#include <string>

namespace hgs {

/// Malformed textual input (bad syntax, unknown tokens).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input that would exceed a fixed resource ceiling (qubit count, matrix size).
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace hgs

#endif  // HGS_ERRORS_H
