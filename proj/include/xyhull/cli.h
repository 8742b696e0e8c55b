// Copyright 2026 The xyhull Authors
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

#ifndef XYHULL_CLI_H_
#define XYHULL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace xyhull {

// Runs the command line `args` (without the program name). Returns the exit
// code: 0 on success, 2 on bad arguments, 3 on infeasible bounds and 1 on an
// internal error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace xyhull

#endif  // XYHULL_CLI_H_
