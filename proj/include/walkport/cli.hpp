// Copyright 2026 The walkport Authors
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

#include <ostream>
#include <string>
#include <vector>

#include "walkport/hilbert.hpp"

namespace walkport {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Parses "re:im,re:im,..." (a bare number is real). Throws ParseError.
std::vector<Amplitude> parse_amplitudes(const std::string &text);

/// Expands "P1..P15" or "P1,P3" into family names. "all" yields an empty list.
std::vector<std::string> parse_family_list(const std::string &text);

/// Entry point behind the walkport executable. `args` excludes the program
/// name. Returns the process exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace walkport
