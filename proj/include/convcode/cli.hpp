// Copyright 2026 The convcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "convcode/access_convert.hpp"
#include "convcode/bw_convert.hpp"

namespace convcode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// A construction family as named on the command line, e.g. "subgroup-mult-B".
struct FamilyChoice {
  Family family = Family::kDefault;
  Variant variant = Variant::kBase;
  bool piggyback = false;

  std::string name() const;
};

FamilyChoice parse_family_choice(const std::string& name, const std::string& variant_override = "");

struct FieldChoice {
  std::uint32_t q = 0;
  std::string rule;  // the requirement that picked q
};

// Smallest prime power meeting the family's published field-size requirement.
// Throws PreconditionError when none exists up to 2^16 or the family's
// structural conditions cannot hold.
FieldChoice auto_field(const FamilyChoice& family, const MergeParams& params);

// "2,3", "4..6", "2,5..7" or "" (empty).
std::vector<std::size_t> parse_range(const std::string& text);

// Runs one command line (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convcode
