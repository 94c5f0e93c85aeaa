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

#include <vector>

#include "convcode/access_convert.hpp"
#include "convcode/random.hpp"
#include "doctest.h"

using namespace convcode;

namespace {

std::vector<Codeword> encode_all(const ConvertiblePair& pair, Rng& rng, std::vector<Symbol>* all = nullptr) {
  std::vector<Codeword> out;
  for (std::size_t l = 0; l < pair.params.lambda; ++l) {
    const auto msg = rng.symbols(pair.field(), pair.params.k_i);
    if (all) all->insert(all->end(), msg.begin(), msg.end());
    out.push_back(pair.initial_code.encode(msg));
  }
  return out;
}

ConvertiblePair example1() {
  return build_subgroup_mult({5, 4, 4, 2}, FieldSpec::prime(13), Variant::kB);
}

}  // namespace

TEST_CASE("multiplicative subgroup, variant B, GF(13)") {
  const auto pair = example1();
  CHECK(pair.find_set("Y")->elements() == std::vector<Symbol>{1, 12, 0});
  CHECK(pair.find_set("X_1")->elements() == std::vector<Symbol>{2, 4, 8, 3, 6});
  CHECK(pair.find_set("X_2")->elements() == std::vector<Symbol>{11, 9, 5, 10, 7});
  const auto f = FieldSpec::prime(13);
  const Matrix expected = Matrix::from_rows(f, {{1, 9, 7, 1},
                                                {9, 8, 10, 1},
                                                {2, 3, 5, 1},
                                                {7, 10, 9, 1},
                                                {8, 2, 11, 1},
                                                {4, 12, 6, 1},
                                                {5, 4, 3, 1},
                                                {10, 11, 8, 1},
                                                {3, 6, 4, 1},
                                                {11, 5, 2, 1}});
  CHECK(pair.final_code.systematic_parity() == expected);
  CHECK(pair.initial_code.systematic_parity() == row_range(expected, 0, 5));
  CHECK(is_superregular(expected));
  CHECK(pair.initial_code.verify_mds());
  CHECK(pair.final_code.verify_mds());

  // Block 2 swaps the two subgroup columns, fixes the 0 column and the
  // all-one column.
  const auto map = verify_parallel_block_reconstructible(expected, 5);
  REQUIRE(map.has_value());
  CHECK(map->is_permutation);
  const std::vector<std::size_t> src{1, 0, 2, 3};
  const std::vector<Symbol> theta{12, 12, 12, 1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(map->blocks[0][i].source_column == i);
    CHECK(map->blocks[0][i].scale == 1);
    CHECK(map->blocks[1][i].source_column == src[i]);
    CHECK(map->blocks[1][i].scale == theta[i]);
  }
  CHECK(pair.plan.per_symbol());
  CHECK(access_cost_bound(pair.params) == 12);

  const auto rep = verify_access_optimal(pair, 50, 1);
  CHECK(rep.passed);
  CHECK(rep.reads == 8);
  CHECK(rep.writes == 4);
  CHECK(rep.per_symbol);

  Rng rng(2);
  const auto init = encode_all(pair, rng);
  CHECK(convert_default(pair, init).trace.disks_read() == 10);
  CHECK(convert_default(pair, init).final_codeword == convert(pair, init).final_codeword);
}

TEST_CASE("subgroup preconditions") {
  const auto f13 = FieldSpec::prime(13);
  CHECK_THROWS_AS(build_subgroup_mult({5, 4, 4, 3}, f13, Variant::kB), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_mult({5, 4, 4, 4}, f13, Variant::kB), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_mult({5, 5, 5, 2}, f13, Variant::kBase), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_mult({5, 4, 1, 2}, f13, Variant::kB), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_add({4, 3, 3, 2}, FieldSpec::of_order(16), Variant::kBase), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_add({4, 4, 4, 2}, f13, Variant::kBase), PreconditionError);
  CHECK_THROWS_AS(build_subgroup_add({4, 4, 4, 2}, FieldSpec::of_order(16), Variant::kB), PreconditionError);
  // X^(1) meeting Y.
  CHECK_THROWS_AS(build_subgroup_mult({2, 4, 4, 2}, f13, Variant::kB, std::vector<Symbol>{1, 2}), PreconditionError);
}

TEST_CASE("additive subgroup, variant A, GF(16)") {
  const auto pair = build_subgroup_add({7, 3, 3, 2}, FieldSpec::of_order(16), Variant::kA);
  CHECK(pair.find_set("Y")->elements() == std::vector<Symbol>{0, 1});
  CHECK(pair.find_set("X_1")->elements() == std::vector<Symbol>{2, 4, 6, 8, 10, 12, 14});
  CHECK(pair.find_set("X_2")->elements() == std::vector<Symbol>{3, 5, 7, 9, 11, 13, 15});
  const auto map = verify_parallel_block_reconstructible(pair.final_code.systematic_parity(), 7);
  REQUIRE(map.has_value());
  for (const auto& block : map->blocks)
    for (const auto& m : block) CHECK(m.scale == 1);
  CHECK(pair.initial_code.verify_mds());
  CHECK(pair.final_code.verify_mds());
  const auto rep = verify_access_optimal(pair, 20, 4);
  CHECK(rep.passed);
  CHECK(rep.reads == 6);
  CHECK(rep.per_symbol);
}

TEST_CASE("truncated subgroup pair keeps the first r_f columns") {
  const auto pair = build_subgroup_mult({5, 4, 3, 2}, FieldSpec::prime(13), Variant::kB);
  CHECK(pair.final_code.r() == 3);
  CHECK(pair.final_code.verify_mds());
  const auto rep = verify_access_optimal(pair, 20, 5);
  CHECK(rep.passed);
  CHECK(rep.reads == 6);
}

TEST_CASE("block matching negative cases") {
  const auto f = FieldSpec::prime(13);
  const Matrix single = cauchy(OrderedSet(f, {2, 3, 4}), OrderedSet(f, {5, 6}));
  const auto id = verify_parallel_block_reconstructible(single, 3);
  REQUIRE(id.has_value());
  CHECK(id->blocks[0][1].source_column == 1);
  CHECK(id->blocks[0][1].scale == 1);

  Rng rng(9);
  int misses = 0;
  for (int t = 0; t < 20; ++t) {
    const Matrix p(f, 6, 2, rng.symbols(f, 12));
    bool ok = true;
    for (auto v : p.entries()) ok &= v != 0;
    if (ok && !verify_parallel_block_reconstructible(p, 3)) ++misses;
  }
  CHECK(misses > 0);
  CHECK_THROWS_AS(verify_parallel_block_reconstructible(single, 2), PreconditionError);
}

TEST_CASE("GRS pair with r_i > r_f") {
  const auto f = FieldSpec::prime(13);
  const auto pair = build_grs({4, 3, 2, 2}, f, false);
  CHECK(pair.find_set("A_1")->elements() == std::vector<Symbol>{1, 2, 4, 8});
  CHECK(pair.find_set("A_2")->elements() == std::vector<Symbol>{3, 6, 12, 11});
  CHECK(vandermonde(*pair.find_set("A_2"), 2) ==
        diagonal(f, std::vector<Symbol>{1, 3}) * vandermonde(*pair.find_set("A_1"), 2));
  CHECK(pair.initial_code.verify_mds());
  CHECK(pair.final_code.verify_mds());

  const auto& bi = *pair.find_set("B_I");
  const auto& bf = *pair.find_set("B_F");
  const std::vector<Symbol> extra(bi.begin() + bf.size(), bi.end());
  const auto f_poly = vanishing_polynomial(f, extra);
  const Matrix fm = f_matrix(f, f_poly, 2, 3);
  const Matrix lhs = fm * pair.initial_code.matrix();
  const Matrix rhs = horizontal_concat({vandermonde(*pair.find_set("A_1"), 2), vandermonde(bf, 2), Matrix(f, 2, 1)});
  CHECK(lhs == rhs);

  const auto rep = verify_access_optimal(pair, 100, 6);
  CHECK(rep.passed);
  CHECK(rep.reads == 4);
  CHECK_FALSE(rep.per_symbol);
}

TEST_CASE("GRS with r_i = r_f has no scaling") {
  const auto pair = build_grs({4, 3, 3, 2}, FieldSpec::prime(13), false);
  CHECK(pair.find_set("B_I")->elements() == pair.find_set("B_F")->elements());
  CHECK(pair.initial_code.matrix() ==
        horizontal_concat({vandermonde(*pair.find_set("A_1"), 3), vandermonde(*pair.find_set("B_I"), 3)}));
  CHECK(verify_access_optimal(pair, 20, 1).passed);
}

TEST_CASE("doubly-extended GRS") {
  const auto f11 = FieldSpec::prime(11);
  const auto pair = build_grs({4, 3, 3, 2}, f11, true);
  CHECK(pair.initial_code.verify_mds());
  CHECK(pair.final_code.verify_mds());
  const auto rep = verify_access_optimal(pair, 100, 7);
  CHECK(rep.passed);
  CHECK(rep.reads == 6);
  CHECK(rep.trace.read_set.back() == DiskId{1, 6});
  CHECK(build_grs({4, 3, 3, 2}, f11, false).final_code.verify_mds());
  CHECK_THROWS_AS(build_grs({4, 3, 3, 2}, FieldSpec::of_order(9), true), PreconditionError);

  // n_f = 10: only the doubly-extended form fits GF(9).
  const auto f9 = FieldSpec::of_order(9);
  CHECK_THROWS_AS(build_grs({4, 2, 2, 2}, f9, false), PreconditionError);
  const auto small = build_grs({4, 2, 2, 2}, f9, true);
  CHECK(small.final_code.verify_mds());
  CHECK(verify_access_optimal(small, 20, 4).passed);

  // k = 5, r = 3: 12 is not a prime power, so both forms need GF(13).
  CHECK_THROWS_AS(build_grs({5, 3, 3, 2}, f11, true), PreconditionError);
  CHECK(verify_access_optimal(build_grs({5, 3, 3, 2}, FieldSpec::prime(13), true), 10, 1).passed);
  CHECK(verify_access_optimal(build_grs({5, 3, 3, 2}, FieldSpec::prime(13), false), 10, 1).passed);

  const auto wide = build_grs({4, 4, 2, 2}, f11, true);
  CHECK(wide.initial_code.verify_mds());
  const auto& bi = *wide.find_set("B_I");
  const auto& bf = *wide.find_set("B_F");
  const std::vector<Symbol> extra(bi.begin() + bf.size(), bi.end());
  const Matrix fm = f_matrix(f11, vanishing_polynomial(f11, extra), 2, 4);
  Matrix e(f11, 2, 1);
  e(1, 0) = 1;
  CHECK(fm * wide.initial_code.matrix() ==
        horizontal_concat({vandermonde(*wide.find_set("A_1"), 2), vandermonde(bf, 2), Matrix(f11, 2, 2), e}));
  CHECK(verify_access_optimal(wide, 20, 2).passed);
}

TEST_CASE("triply-extended GRS") {
  const auto pair = build_triply_extended({3, 3, 3, 2}, FieldSpec::of_order(8));
  CHECK(pair.final_code.n() == 9);
  CHECK(pair.initial_code.verify_mds());
  CHECK(pair.final_code.verify_mds());
  CHECK(verify_access_optimal(pair, 20, 3).passed);
  CHECK_THROWS_AS(build_triply_extended({3, 3, 3, 2}, FieldSpec::of_order(9)), PreconditionError);
  CHECK_THROWS_AS(build_triply_extended({4, 3, 3, 2}, FieldSpec::of_order(8)), PreconditionError);
}

TEST_CASE("conversion engine") {
  const auto pair = build_grs({4, 3, 2, 2}, FieldSpec::prime(13), false);
  std::vector<Codeword> zero(2, Codeword(7, 0));
  const auto res = convert(pair, zero);
  CHECK(res.final_codeword == Codeword(10, 0));
  CHECK(res.trace.disks_read() == 4);
  CHECK(res.trace.disks_written == 2);

  Rng rng(8);
  std::vector<Symbol> all;
  auto init = encode_all(pair, rng, &all);
  const auto out = convert(pair, init);
  CHECK(out.final_codeword == pair.final_code.encode(all));
  CHECK(out.trace == res.trace);
  for (const auto& d : out.trace.read_set) CHECK(d.position >= 4);

  init[1][2] = FieldSpec::prime(13).add(init[1][2], 1);
  CHECK_THROWS_AS(convert(pair, init), InconsistentDataError);
  init.pop_back();
  CHECK_THROWS_AS(convert(pair, init), PreconditionError);
}

TEST_CASE("default family and bounds") {
  const MergeParams wide{4, 3, 5, 2};
  CHECK(access_cost_bound(wide) == 13);
  CHECK(access_cost_bound({4, 4, 4, 2}) == 12);
  const auto pair = build_default(wide, FieldSpec::prime(13));
  CHECK(pair.final_code.verify_mds());
  Rng rng(1);
  std::vector<Symbol> all;
  const auto init = encode_all(pair, rng, &all);
  const auto res = convert(pair, init);
  CHECK(res.final_codeword == pair.final_code.encode(all));
  CHECK(res.trace.total_access() == 13);
  CHECK_THROWS_AS(verify_access_optimal(pair, 1, 1), PreconditionError);
  CHECK_THROWS_WITH_AS(MergeParams({4, 3, 1, 2}).validate(), doctest::Contains("trivial"), PreconditionError);
}
