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

#ifndef HGS_TOOLS_CLI_H
#define HGS_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace hgs::cli {

enum ExitCode : int {
    kSuccess = 0,
    kParseFailure = 1,       // malformed input text or command line
    kValidationFailure = 2,  // well-formed input that is invalid or over capacity
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace hgs::cli

#endif  // HGS_TOOLS_CLI_H
