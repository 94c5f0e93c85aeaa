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

import random

import pytest

import convcode as cc


def test_field_arithmetic():
    f = cc.Field(16)
    assert f.modulus == [1, 1, 0, 0, 1]
    for a in range(1, 16):
        assert f.mul(a, f.inv(a)) == 1
    assert cc.Field(13).mul(5, 8) == 1
    with pytest.raises(ValueError):
        cc.Field(12)


def test_superregular_and_mds():
    f = cc.Field(13)
    p = cc.cauchy(f, [1, 2, 3], [4, 5])
    assert cc.is_superregular(f, p)
    assert cc.MdsCode.systematic(f, p).verify_mds()
    p[0][0] = 0
    assert not cc.is_superregular(f, p)


def test_subgroup_pair_conversion():
    f = cc.Field(13)
    pair = cc.build("subgroup-mult", 5, 4, 4, 2, f, variant="B")
    assert pair.sets()["Y"] == [1, 12, 0]
    rng = random.Random(3)
    msgs = [[rng.randrange(13) for _ in range(5)] for _ in range(2)]
    words = [pair.initial_code.encode(m) for m in msgs]
    final, reads, writes = cc.convert(pair, words)
    assert final == pair.final_code.encode(msgs[0] + msgs[1])
    assert (reads, writes) == (8, 4)
    report = cc.verify_access_optimal(pair, trials=10, seed=4)
    assert report["passed"] and report["per_symbol"]


def test_default_conversion_costs_more():
    pair = cc.build("grs", 4, 3, 2, 2, cc.Field(13))
    words = [pair.initial_code.encode([1, 2, 3, 4]), pair.initial_code.encode([5, 6, 7, 8])]
    optimal = cc.convert(pair, words)
    default = cc.convert(pair, words, default_plan=True)
    assert optimal[0] == default[0]
    assert optimal[1] == 4
    assert optimal[1] + optimal[2] == cc.access_cost_bound(4, 3, 2, 2)
    assert default[1] == 8


def test_tampered_codeword_rejected():
    pair = cc.build("grs", 4, 3, 2, 2, cc.Field(13))
    good = pair.initial_code.encode([1, 2, 3, 4])
    bad = list(good)
    bad[5] = (bad[5] + 1) % 13
    assert not pair.initial_code.contains(bad)
    with pytest.raises(cc.InconsistentDataError):
        cc.convert(pair, [good, bad])


def test_json_round_trip():
    pair = cc.build("grs-doubly-ext", 4, 3, 3, 2, cc.Field(11))
    again = cc.ConvertiblePair.from_json(pair.to_json())
    assert again.to_json() == pair.to_json()
    assert again.final_code.verify_mds()


def test_piggyback_bandwidth():
    assert cc.min_subpacketization(6, 2) == 3
    assert cc.bandwidth_bound(8, 2, 6, 2) == (44, 18)
    pair = cc.build_vector_pair(8, 2, 6, 2, cc.Field(23))
    assert pair.alpha == 3
    rng = random.Random(5)
    msgs = [[[rng.randrange(23) for _ in range(3)] for _ in range(8)] for _ in range(2)]
    words = [cc.vector_encode_initial(pair, m) for m in msgs]
    final, read, write = cc.vector_convert(pair, words)
    assert final == cc.vector_encode_final(pair, msgs)
    assert (read, write) == (44, 18)
    assert cc.verify_bandwidth_optimal(pair, trials=5)["optimal"]
