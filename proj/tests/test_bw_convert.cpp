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

#include <set>
#include <vector>

#include "convcode/bw_convert.hpp"
#include "convcode/combinatorics.hpp"
#include "doctest.h"

using namespace convcode;

namespace {

const BwParams kExample{8, 2, 6, 2};

}  // namespace

TEST_CASE("bounds and sub-packetization") {
  const auto c = bandwidth_bound(kExample);
  CHECK(kExample.alpha() == 3);
  CHECK(c.read == 44);
  CHECK(c.write == 18);
  CHECK(c.total() == 62);
  CHECK(bandwidth_bound(5, 4, 4, 2, 1).total() == 12);
  CHECK(bandwidth_bound(3, 2, 4, 2, 1).read == 6);
  CHECK(bandwidth_bound(BwParams{5, 2, 4, 3}).read == 27);
  CHECK(bandwidth_bound(BwParams{5, 2, 4, 3}).write == 8);
  CHECK_THROWS_AS(bandwidth_bound(8, 2, 6, 2, 1), PreconditionError);

  CHECK(min_subpacketization(6, 2) == 3);
  CHECK(min_subpacketization(6, 3) == 2);
  CHECK(min_subpacketization(4, 4) == 1);
  CHECK_THROWS_AS(min_subpacketization(2, 4), PreconditionError);
  const std::vector<std::size_t> finals{4, 6};
  CHECK(multi_rf_subpacketization(2, finals) == 6);
  const std::vector<std::size_t> bad{2};
  CHECK_THROWS_AS(multi_rf_subpacketization(2, bad), PreconditionError);
}

TEST_CASE("integer identity of the read cost") {
  for (std::size_t r_f = 2; r_f <= 12; ++r_f)
    for (std::size_t r_i = 1; r_i < r_f; ++r_i)
      for (std::size_t k = r_f + 1; k <= 15; ++k)
        for (std::size_t lambda = 2; lambda <= 4; ++lambda) {
          const BwParams p{k, r_i, r_f, lambda};
          const std::uint64_t direct = lambda * (r_i * p.alpha() + (p.alpha() - p.beta()) * k);
          CHECK(bandwidth_bound(p).read == direct);
        }
}

TEST_CASE("piggyback layout") {
  const auto pair = build_vector_pair(kExample, FieldSpec::prime(23));
  CHECK(pair.w[0] == Matrix::identity(pair.field(), 6));
  CHECK(pair.piggyback_column(0, 1) == 2);
  CHECK(pair.piggyback_column(0, 2) == 3);
  CHECK(pair.piggyback_column(1, 1) == 4);
  CHECK(pair.piggyback_column(1, 2) == 5);
  CHECK(pair.piggyback_source(0) == 0);
  CHECK(pair.piggyback_source(1) == 0);

  for (std::size_t r_f = 3; r_f <= 12; ++r_f)
    for (std::size_t r_i = 1; r_i < r_f; ++r_i) {
      VectorCodePair probe = pair;
      probe.params = BwParams{r_f + 1, r_i, r_f, 2};
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t i = 0; i < r_i; ++i)
        for (std::size_t j = probe.params.beta(); j < probe.params.alpha(); ++j)
          seen.insert({probe.piggyback_column(i, j), probe.piggyback_source(i)});
      CHECK(seen.size() == (r_f - r_i) * probe.params.beta());
      CHECK(seen.begin()->first == r_i);
      CHECK(seen.rbegin()->first == r_f - 1);
      CHECK(seen.rbegin()->second == probe.params.beta() - 1);
    }

  // Parity row 8: sub-symbols 1 and 2 carry m_0 . p^2 and m_0 . p^3.
  const auto f = pair.field();
  VectorMessage m(8, std::vector<Symbol>(3, 0));
  for (std::size_t t = 0; t < 8; ++t) m[t][0] = static_cast<Symbol>(t + 1);
  const auto c = vector_encode_initial(pair, m);
  auto dot_col = [&](std::size_t u) {
    Symbol acc = 0;
    for (std::size_t t = 0; t < 8; ++t) acc = f.add(acc, f.mul(m[t][0], pair.p_initial(t, u)));
    return acc;
  };
  CHECK(c.symbols[8] == std::vector<Symbol>{dot_col(0), dot_col(2), dot_col(3)});
  CHECK(c.symbols[9] == std::vector<Symbol>{dot_col(1), dot_col(4), dot_col(5)});
  const VectorMessage zero(8, std::vector<Symbol>(3, 0));
  CHECK(vector_encode_initial(pair, zero).symbols == std::vector<std::vector<Symbol>>(10, std::vector<Symbol>(3, 0)));
}

TEST_CASE("every k-subset decodes") {
  const auto pair = build_vector_pair(kExample, FieldSpec::prime(23));
  Rng rng(12);
  const auto m = random_vector_message(pair, rng);
  const auto c = vector_encode_initial(pair, m);
  std::size_t subsets = 0;
  for_each_combination(10, 8, [&](std::span<const std::size_t> keep) {
    std::vector<KnownVectorSymbol> known;
    for (auto i : keep) known.push_back({i, c.symbols[i]});
    CHECK(vector_decode(pair, known) == m);
    ++subsets;
    return true;
  });
  CHECK(subsets == 45);
  std::vector<KnownVectorSymbol> few{{0, c.symbols[0]}};
  CHECK_THROWS_AS(vector_decode(pair, few), PreconditionError);
}

TEST_CASE("final columns are base codewords") {
  const auto pair = build_vector_pair(kExample, FieldSpec::prime(23));
  Rng rng(4);
  const std::vector<VectorMessage> msgs{random_vector_message(pair, rng), random_vector_message(pair, rng)};
  const auto d = vector_encode_final(pair, msgs);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<Symbol> col;
    for (const auto& s : d.symbols) col.push_back(s[j]);
    CHECK(pair.base.final_code.contains(col));
  }
}

TEST_CASE("conversion meets the bound") {
  const auto pair = build_vector_pair(kExample, FieldSpec::prime(23));
  const auto rep = verify_bandwidth_optimal(pair, 100, 9);
  CHECK(rep.optimal);
  CHECK(rep.read == 44);
  CHECK(rep.write == 18);
  CHECK(rep.excess == 0);

  const auto bad = verify_bandwidth_optimal(pair, 5, 9, ReadPolicy::kDefault);
  CHECK(bad.conversions_correct);
  CHECK_FALSE(bad.optimal);
  CHECK(bad.read == 48);
  CHECK(bad.excess == 4);

  const VectorCodeword zero{3, std::vector<std::vector<Symbol>>(10, std::vector<Symbol>(3, 0))};
  const std::vector<VectorCodeword> zeros{zero, zero};
  const auto res = vector_convert(pair, zeros);
  CHECK(res.final_codeword.symbols == std::vector<std::vector<Symbol>>(22, std::vector<Symbol>(3, 0)));
  CHECK(res.trace.read_total == 44);
  CHECK(res.trace.uniform_download(pair.params));
  CHECK(res.trace.reads[0][0] == 2);

  std::vector<VectorCodeword> broken = zeros;
  broken[1].symbols[9][2] = 1;
  CHECK_THROWS_AS(vector_convert(pair, broken), InconsistentDataError);
}

TEST_CASE("other parameters") {
  const auto pair = build_vector_pair(BwParams{5, 2, 4, 3}, FieldSpec::prime(19));
  const auto rep = verify_bandwidth_optimal(pair, 20, 2);
  CHECK(rep.optimal);
  CHECK(rep.read == 27);
  CHECK(rep.write == 8);
  const auto g3 = build_vector_pair(BwParams{7, 3, 6, 2}, FieldSpec::prime(19));
  CHECK(verify_bandwidth_optimal(g3, 20, 3).optimal);
  CHECK_THROWS_AS(build_vector_pair(kExample, FieldSpec::prime(19)), PreconditionError);
  CHECK_THROWS_AS(build_vector_pair(BwParams{6, 3, 2, 2}, FieldSpec::prime(23)), PreconditionError);
}
