// Copyright 2026 The qwc Authors
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

#ifndef QWC_CLI_HPP
#define QWC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qwc {

/// Runs one qwc command (args exclude the program name) writing to the
/// given streams. Exit codes: 0 success or positive predicate, 2 for a
/// negative result (not controllable, implication failed, target
/// missed), 1 on any error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qwc

#endif  // QWC_CLI_HPP
