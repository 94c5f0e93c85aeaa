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

#include <string>

#include "convcode/access_convert.hpp"
#include "convcode/bw_convert.hpp"
#include "json.hpp"

namespace convcode {

using Json = nlohmann::ordered_json;

// Every *_from_json throws PreconditionError on malformed input, and every
// to_json output loads back to an equal object.

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const MdsCode& code);
MdsCode code_from_json(const Json& j);

Json to_json(const MergeParams& p);
MergeParams merge_params_from_json(const Json& j);
Json to_json(const BwParams& p);
BwParams bw_params_from_json(const Json& j);

Json to_json(const ConversionPlan& plan);
ConversionPlan plan_from_json(const Json& j);

Json to_json(const ConvertiblePair& pair);
ConvertiblePair pair_from_json(const Json& j);

Json to_json(const AccessTrace& trace, std::size_t lambda);
AccessTrace trace_from_json(const Json& j);

Json to_json(const AccessReport& report);

Json to_json(const VectorCodeword& word, const FieldSpec& field);
VectorCodeword vector_codeword_from_json(const Json& j);

Json to_json(const BandwidthTrace& trace);
Json to_json(const BandwidthReport& report);

Json to_json(const VectorCodePair& pair);
VectorCodePair vector_pair_from_json(const Json& j);

// "pair" for scalar pair descriptors, "vector-pair" for piggybacked ones.
std::string descriptor_kind(const Json& j);

}  // namespace convcode
