// Copyright 2026 The gf2perm Authors.
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

#ifndef GF2PERM_CLI_HPP_
#define GF2PERM_CLI_HPP_

#include <ostream>

namespace gf2perm {

// Entry point of the gf2perm tool. Returns 0 on success, 1 on a
// mathematical failure (or verification mismatches), 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gf2perm

#endif  // GF2PERM_CLI_HPP_
