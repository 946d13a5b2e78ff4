// Copyright 2026 The Douglas Authors.
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


#ifndef DOUGLAS_CLI_HPP_
#define DOUGLAS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace douglas::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidSpec = 2,
  kSizeLimit = 3,
};

// Runs one command line (without the program name). Reads
// DOUGLAS_CACHE_DIR for the condensation memo.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace douglas::cli

#endif  // DOUGLAS_CLI_HPP_
