# Copyright 2026 The convcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""MDS convertible codes: access- and bandwidth-optimal merge conversion."""

from ._convcode import (
    CapExceededError,
    ConvertiblePair,
    Error,
    Field,
    InconsistentDataError,
    MdsCode,
    PreconditionError,
    VectorCodePair,
    access_cost_bound,
    bandwidth_bound,
    build,
    build_vector_pair,
    cauchy,
    convert,
    is_superregular,
    min_subpacketization,
    vector_convert,
    vector_encode_final,
    vector_encode_initial,
    verify_access_optimal,
    verify_bandwidth_optimal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
