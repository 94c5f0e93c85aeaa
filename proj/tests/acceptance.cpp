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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "convcode/access_convert.hpp"
#include "convcode/bw_convert.hpp"
#include "convcode/combinatorics.hpp"
#include "oracles.hpp"

using namespace convcode;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!pass) why << "; ";
      why << what;
      pass = false;
    }
  }
};

bool multiply_is_zero(const Matrix& h, const Codeword& d) {
  for (auto v : multiply(h, d))
    if (v != 0) return false;
  return true;
}

std::vector<Symbol> elems(const ConvertiblePair& p, const std::string& name) { return p.find_set(name)->elements(); }

// Random messages through the plan; checks parity-check membership and the
// systematic prefix of every output against the inputs.
bool conversions_sound(const ConvertiblePair& pair, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix h = pair.final_code.parity_check_matrix();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Codeword> init;
    for (std::size_t l = 0; l < pair.params.lambda; ++l)
      init.push_back(pair.initial_code.encode(rng.symbols(pair.field(), pair.params.k_i)));
    const auto d = convert(pair, init).final_codeword;
    if (!multiply_is_zero(h, d)) return false;
    for (std::size_t l = 0; l < pair.params.lambda; ++l)
      for (std::size_t s = 0; s < pair.params.k_i; ++s)
        if (d[l * pair.params.k_i + s] != init[l][s]) return false;
  }
  return true;
}

Outcome subgroup_mult_example() {
  Outcome o;
  const auto f = FieldSpec::prime(13);
  const auto pair = build_subgroup_mult({5, 4, 4, 2}, f, Variant::kB);
  std::vector<Symbol> x = elems(pair, "X_1");
  const auto x2 = elems(pair, "X_2");
  x.insert(x.end(), x2.begin(), x2.end());
  o.expect(elems(pair, "Y") == std::vector<Symbol>{1, 12, 0}, "Y differs");
  o.expect(x == std::vector<Symbol>{2, 4, 8, 3, 6, 11, 9, 5, 10, 7}, "X differs");
  const Matrix& p = pair.final_code.systematic_parity();
  o.expect(p.rows() == 10 && p.cols() == 4, "P is not 10x4");
  o.expect(oracle::superregular(p), "P not superregular (determinant oracle)");
  o.expect(is_superregular(p), "P not superregular (library)");
  const auto map = verify_parallel_block_reconstructible(p, 5);
  o.expect(map && map->is_permutation, "P not parallel-block-reconstructible");
  const auto rep = verify_access_optimal(pair, 50, 101);
  o.expect(rep.passed, "access check failed: " + rep.failure);
  o.expect(rep.reads == 8 && rep.writes == 4, "reads/writes " + std::to_string(rep.reads) + "/" + std::to_string(rep.writes));
  o.expect(rep.per_symbol, "not one read per (new symbol, initial codeword)");
  o.why << (o.pass ? "Y={1,12,0}, 10x4 P superregular, block map is a permutation, 50 conversions read 8 write 4 per-symbol" : "");
  return o;
}

Outcome subgroup_add_example() {
  Outcome o;
  const auto pair = build_subgroup_add({7, 3, 3, 2}, FieldSpec::of_order(16), Variant::kA);
  o.expect(pair.field().modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1}, "modulus is not x^4+x+1");
  o.expect(elems(pair, "Y") == std::vector<Symbol>{0, 1}, "Y differs");
  o.expect(elems(pair, "X_1") == std::vector<Symbol>{2, 4, 6, 8, 10, 12, 14}, "X_1 differs");
  o.expect(elems(pair, "X_2") == std::vector<Symbol>{3, 5, 7, 9, 11, 13, 15}, "X_2 differs");
  const auto map = verify_parallel_block_reconstructible(pair.final_code.systematic_parity(), 7);
  o.expect(map.has_value(), "not parallel-block-reconstructible");
  if (map)
    for (const auto& block : map->blocks)
      for (const auto& m : block) o.expect(m.scale == 1, "a block-matching scalar differs from 1");
  const auto rep = verify_access_optimal(pair, 50, 102);
  o.expect(rep.passed && rep.reads == 6, "conversion reads " + std::to_string(rep.reads));
  o.why << (o.pass ? "Y={0,1}, X matches, all matching scalars 1, conversion reads 6" : "");
  return o;
}

Outcome grs_example() {
  Outcome o;
  const auto f = FieldSpec::prime(13);
  const auto pair = build_grs({4, 3, 2, 2}, f, false);
  o.expect(binomial(7, 4) == 35 && binomial(10, 8) == 45, "subset counts");
  o.expect(pair.initial_code.verify_mds(), "initial [7,4] code not MDS");
  o.expect(pair.final_code.verify_mds(), "final [10,8] code not MDS");
  o.expect(oracle::min_distance(pair.initial_code) == 4, "initial minimum distance oracle");
  o.expect(conversions_sound(pair, 100, 103), "a conversion violated H^F d = 0 or the prefix");
  const auto rep = verify_access_optimal(pair, 10, 104);
  o.expect(rep.passed && rep.reads == 4, "read access " + std::to_string(rep.reads));
  const auto bi = elems(pair, "B_I"), bf = elems(pair, "B_F");
  const std::vector<Symbol> extra(bi.begin() + static_cast<std::ptrdiff_t>(bf.size()), bi.end());
  const Matrix fm = f_matrix(f, vanishing_polynomial(f, extra), 2, 3);
  const Matrix rhs = horizontal_concat(
      {vandermonde(*pair.find_set("A_1"), 2), vandermonde(*pair.find_set("B_F"), 2), Matrix(f, 2, 1)});
  o.expect(fm * pair.initial_code.matrix() == rhs, "F H^I != [V_A1 V_BF 0]");
  o.why << (o.pass ? "both codes MDS (35 and 45 subsets), 100 conversions sound, reads 4, F-matrix identity exact" : "");
  return o;
}

Outcome extended_examples() {
  Outcome o;
  const auto d = build_grs({4, 3, 3, 2}, FieldSpec::prime(11), true);
  o.expect(d.initial_code.verify_mds() && d.final_code.verify_mds(), "doubly-extended codes not MDS");
  o.expect(conversions_sound(d, 100, 105), "doubly-extended conversion unsound");
  const auto rep = verify_access_optimal(d, 10, 106);
  o.expect(rep.passed && rep.reads == 6, "doubly-extended reads " + std::to_string(rep.reads));
  const auto t = build_triply_extended({3, 3, 3, 2}, FieldSpec::of_order(8));
  o.expect(t.final_code.n() == 9, "triply-extended n_f != 9");
  o.expect(t.initial_code.verify_mds() && t.final_code.verify_mds(), "triply-extended codes not MDS");
  o.expect(oracle::min_distance(t.final_code) == 4, "triply-extended minimum distance oracle");
  o.why << (o.pass ? "GF(11) doubly-extended MDS, 100 sound conversions, reads 6; GF(8) triply-extended n_f=9 MDS" : "");
  return o;
}

Outcome bandwidth_example() {
  Outcome o;
  const BwParams params{8, 2, 6, 2};
  o.expect(min_subpacketization(6, 2) == 3, "alpha != 3");
  const auto pair = build_vector_pair(params, FieldSpec::prime(23));
  o.expect(params.alpha() == 3, "pair alpha != 3");
  o.expect(pair.piggyback_column(0, 1) == 2 && pair.piggyback_column(0, 2) == 3, "row 8 piggybacks are not p^2, p^3");
  o.expect(pair.piggyback_column(1, 1) == 4 && pair.piggyback_column(1, 2) == 5, "row 9 piggybacks are not p^4, p^5");
  o.expect(pair.piggyback_source(0) == 0 && pair.piggyback_source(1) == 0, "piggyback source is not m_0");

  Rng rng(107);
  const auto m = random_vector_message(pair, rng);
  const auto c = vector_encode_initial(pair, m);
  std::size_t decoded = 0;
  for_each_combination(10, 8, [&](std::span<const std::size_t> keep) {
    std::vector<KnownVectorSymbol> known;
    for (auto i : keep) known.push_back({i, c.symbols[i]});
    decoded += vector_decode(pair, known) == m;
    return true;
  });
  o.expect(decoded == 45, std::to_string(decoded) + "/45 subsets decode");
  const auto rep = verify_bandwidth_optimal(pair, 100, 108);
  const auto bound = bandwidth_bound(params);
  o.expect(bound.read == 44 && bound.write == 18 && bound.total() == 62, "bound is not 44 + 18");
  o.expect(rep.read == 44 && rep.write == 18, "conversion read/write " + std::to_string(rep.read) + "/" +
                                                  std::to_string(rep.write));
  o.expect(rep.conversions_correct, "output differs from final encoding");
  o.why << (o.pass ? "alpha=3, piggyback layout p^2,p^3 / p^4,p^5, 45/45 subsets decode, read 44 write 18 = 62, 100 trials exact" : "");
  return o;
}

Outcome field_axioms() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u})
    o.expect(oracle::field_axioms_hold(FieldSpec::of_order(q)), "axioms fail for q=" + std::to_string(q));
  o.why << (o.pass ? "10 fields, all triples, checked against schoolbook arithmetic" : "");
  return o;
}

Outcome superregular_vs_mds() {
  Outcome o;
  Rng rng(109);
  std::size_t agree = 0, positive = 0;
  const std::vector<std::uint32_t> orders{7, 8, 11};
  for (std::size_t t = 0; t < 200; ++t) {
    const auto f = FieldSpec::of_order(orders[t % 3]);
    const std::size_t rows = 2 + rng.below(3), cols = 2 + rng.below(2);
    Matrix p(f, rows, cols, rng.symbols(f, rows * cols));
    if (t % 2 == 0) {
      // Start from a Cauchy matrix so both outcomes occur; sometimes spoil one entry.
      std::vector<Symbol> pts(f.q());
      std::iota(pts.begin(), pts.end(), 0);
      for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
      p = cauchy(OrderedSet(f, {pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(rows)}),
                 OrderedSet(f, {pts.begin() + static_cast<std::ptrdiff_t>(rows),
                                pts.begin() + static_cast<std::ptrdiff_t>(rows + cols)}));
      if (rng.below(2)) p(rng.below(rows), rng.below(cols)) = rng.symbol(f);
    }
    const bool sr = is_superregular(p);
    const bool mds = oracle::min_distance(MdsCode::systematic(p)) == cols + 1;
    agree += sr == mds && sr == oracle::superregular(p);
    positive += sr;
  }
  o.expect(agree == 200, std::to_string(agree) + "/200 agree");
  o.expect(positive > 0 && positive < 200, "sample lacks one of the outcomes");
  o.why << (o.pass ? "200/200 agree (" + std::to_string(positive) + " superregular), MDS by minimum-distance oracle" : "");
  return o;
}

Outcome subgroup_properties() {
  Outcome o;
  std::size_t configs = 0, good = 0, mds_checked = 0;
  for (std::uint32_t q = 3; q <= 64; ++q) {
    if (prime_power_decompose(q).first == 0) continue;
    const auto f = FieldSpec::of_order(q);
    for (std::size_t k = 2; k <= 6; ++k)
      for (std::size_t r = 2; r <= k; ++r)
        for (std::size_t lambda = 2; lambda <= r; ++lambda)
          for (int fam = 0; fam < 5; ++fam) {
            std::optional<ConvertiblePair> pair;
            try {
              const MergeParams mp{k, r, r, lambda};
              if (fam < 3)
                pair = build_subgroup_mult(mp, f, fam == 0 ? Variant::kBase : (fam == 1 ? Variant::kA : Variant::kB));
              else
                pair = build_subgroup_add(mp, f, fam == 3 ? Variant::kBase : Variant::kA);
            } catch (const PreconditionError&) {
              continue;
            }
            ++configs;
            const auto map = verify_parallel_block_reconstructible(pair->final_code.systematic_parity(), k);
            bool ok = map && map->is_permutation && pair->initial_code.verify_mds() &&
                      verify_access_optimal(*pair, 2, configs).passed;
            if (binomial(pair->final_code.n(), pair->final_code.k()) <= 5000) {
              ++mds_checked;
              ok = ok && pair->final_code.verify_mds();
            }
            good += ok;
            if (!ok) o.expect(false, "q=" + std::to_string(q) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
          }
  }
  o.expect(configs > 0, "no valid configuration");
  o.why << (o.pass ? std::to_string(good) + "/" + std::to_string(configs) +
                         " valid subgroup configurations block-reconstructible with per-symbol optimal conversion; final code MDS by brute force on " +
                         std::to_string(mds_checked) + " with at most 5000 subsets"
                   : "");
  return o;
}

Outcome bandwidth_identity() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t r_f = 2; r_f <= 12; ++r_f)
    for (std::size_t r_i = 1; r_i < r_f; ++r_i)
      for (std::size_t k = r_f + 1; k <= 15; ++k)
        for (std::size_t lambda = 2; lambda <= 4; ++lambda) {
          const BwParams p{k, r_i, r_f, lambda};
          ++cases;
          o.expect(lambda * (r_i * p.alpha() + (p.alpha() - p.beta()) * k) == bandwidth_bound(p).read,
                   "identity fails at k=" + std::to_string(k) + " r_i=" + std::to_string(r_i) +
                       " r_f=" + std::to_string(r_f));
        }
  o.why << (o.pass ? std::to_string(cases) + " parameter sets, exact integers" : "");
  return o;
}

Outcome trace_independence() {
  Outcome o;
  const std::vector<ConvertiblePair> pairs{build_subgroup_mult({5, 4, 4, 2}, FieldSpec::prime(13), Variant::kB),
                                           build_subgroup_add({7, 3, 3, 2}, FieldSpec::of_order(16), Variant::kA),
                                           build_grs({4, 3, 2, 2}, FieldSpec::prime(13), false),
                                           build_grs({4, 3, 3, 2}, FieldSpec::prime(11), true),
                                           build_triply_extended({3, 3, 3, 2}, FieldSpec::of_order(8))};
  for (const auto& pair : pairs) {
    Rng rng(110);
    std::vector<AccessTrace> traces;
    for (int t = 0; t < 2; ++t) {
      std::vector<Codeword> init;
      for (std::size_t l = 0; l < pair.params.lambda; ++l)
        init.push_back(pair.initial_code.encode(rng.symbols(pair.field(), pair.params.k_i)));
      traces.push_back(convert(pair, init).trace);
    }
    o.expect(traces[0] == traces[1], family_tag(pair.family) + " trace depends on data");
  }
  const auto vp = build_vector_pair(BwParams{8, 2, 6, 2}, FieldSpec::prime(23));
  o.expect(verify_bandwidth_optimal(vp, 2, 111).data_independent, "vector trace depends on data");
  o.why << (o.pass ? "5 scalar families and the vector pair give identical traces on two random inputs" : "");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"multiplicative subgroup pair, GF(13), variant B", subgroup_mult_example},
      {"additive subgroup pair, GF(16), variant A", subgroup_add_example},
      {"GRS pair, GF(13), r_i=3 r_f=2", grs_example},
      {"doubly- and triply-extended GRS pairs", extended_examples},
      {"piggybacked vector pair, GF(23), alpha=3", bandwidth_example},
      {"field axioms, exhaustive", field_axioms},
      {"superregular iff MDS, 200 random matrices", superregular_vs_mds},
      {"subgroup constructions over all small fields", subgroup_properties},
      {"bandwidth integer identity", bandwidth_identity},
      {"data-independent access traces", trace_independence},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.why << "threw: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << ": " << o.why.str() << " [" << std::fixed
              << std::setprecision(2) << secs << "s]\n";
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
