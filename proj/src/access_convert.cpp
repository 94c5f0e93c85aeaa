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

#include "convcode/access_convert.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "convcode/random.hpp"

namespace convcode {

namespace {

std::string describe(const MergeParams& p) {
  return "(k_i=" + std::to_string(p.k_i) + ", r_i=" + std::to_string(p.r_i) + ", r_f=" + std::to_string(p.r_f) +
         ", lambda=" + std::to_string(p.lambda) + ")";
}

void require_optimal_regime(const MergeParams& p) {
  p.validate();
  require(p.access_optimal_regime(),
          "access-optimal constructions need r_f <= min(k_i, r_i), got " + describe(p) +
              "; use the default re-encoding instead");
}

void require_field_order(const FieldSpec& field, std::uint64_t needed, const std::string& what) {
  require(field.q() >= needed, what + " needs q >= " + std::to_string(needed) + ", got q = " + std::to_string(field.q()));
}

OrderedSet make_set(const FieldSpec& field, std::vector<Symbol> elems, const std::string& name) {
  for (auto v : elems) require(field.contains(v), "set " + name + " has an element outside the field");
  std::vector<Symbol> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "set " + name + " has repeated elements");
  return OrderedSet(field, std::move(elems));
}

std::string block_name(const std::string& base, std::size_t l) { return base + "_" + std::to_string(l + 1); }

Matrix ones_column(const FieldSpec& field, std::size_t rows) {
  return Matrix(field, rows, 1, std::vector<Symbol>(rows, 1));
}

// Cauchy pair shared by both subgroup families: P = C(X, Y) optionally with an
// all-one column; blocks X^(l) already laid out.
ConvertiblePair finish_cauchy_pair(const MergeParams& params, const FieldSpec& field, Family family, Variant variant,
                                   const std::vector<OrderedSet>& blocks, const OrderedSet& y, bool ones) {
  std::vector<Symbol> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  require(std::adjacent_find(all.begin(), all.end()) == all.end(),
          "evaluation blocks X^(l) overlap; pick a larger field or different first block");
  const OrderedSet x(field, [&] {
    std::vector<Symbol> v;
    for (const auto& b : blocks) v.insert(v.end(), b.begin(), b.end());
    return v;
  }());
  require(disjoint(x, y), "evaluation points X meet the subgroup Y; pick a different first block");

  Matrix p = cauchy(x, y);
  if (ones) p = horizontal_concat({p, ones_column(field, p.rows())});
  const std::size_t r = p.cols();

  const auto map = verify_parallel_block_reconstructible(p, params.k_i);
  require(map.has_value(), "Cauchy blocks are not scalar multiples of the first block");
  require(map->is_permutation, "block column matching is not a permutation");

  ConversionPlan plan;
  plan.parities.resize(params.r_f);
  for (std::size_t i = 0; i < params.r_f; ++i)
    for (std::size_t l = 0; l < params.lambda; ++l) {
      const BlockMatch& m = map->blocks[l][i];
      plan.parities[i].push_back(PlanTerm{{params.k_i + m.source_column}, {m.scale}});
    }

  const Matrix p_i = row_range(p, 0, params.k_i);
  const Matrix p_f = params.r_f == r ? p : column_range(p, 0, params.r_f);

  std::vector<NamedSet> sets;
  for (std::size_t l = 0; l < blocks.size(); ++l) sets.push_back({block_name("X", l), blocks[l]});
  sets.push_back({"Y", y});
  return ConvertiblePair{params, family, variant, MdsCode::systematic(p_i), MdsCode::systematic(p_f), std::move(plan),
                         std::move(sets)};
}

std::vector<Symbol> powers(const FieldSpec& field, Symbol base, std::size_t first, std::size_t count) {
  std::vector<Symbol> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(field.pow(base, static_cast<long long>(first + t)));
  return out;
}

ConversionPlan plan_from_blocks(const MergeParams& params, const std::vector<Matrix>& m,
                                const std::vector<std::size_t>& read_positions) {
  ConversionPlan plan;
  plan.parities.resize(params.r_f);
  for (std::size_t i = 0; i < params.r_f; ++i)
    for (std::size_t l = 0; l < params.lambda; ++l) {
      PlanTerm term;
      for (std::size_t u = 0; u < read_positions.size(); ++u)
        if (m[l](i, u) != 0) {
          term.sources.push_back(read_positions[u]);
          term.coefficients.push_back(m[l](i, u));
        }
      plan.parities[i].push_back(std::move(term));
    }
  return plan;
}

}  // namespace

void MergeParams::validate() const {
  require(k_i >= 2, "k_i must be at least 2, got " + std::to_string(k_i));
  require(r_i >= 1, "r_i must be at least 1");
  require(r_f != 1,
          "r_f = 1 is served by the trivial scheme (new parity = sum of the old single parities); not handled here");
  require(r_f >= 2, "r_f must be at least 2, got " + std::to_string(r_f));
  require(lambda >= 2, "lambda must be at least 2, got " + std::to_string(lambda));
}

std::string family_tag(Family family) {
  switch (family) {
    case Family::kSubgroupMult: return "subgroup-mult";
    case Family::kSubgroupAdd: return "subgroup-add";
    case Family::kGrs: return "grs";
    case Family::kGrsDoublyExtended: return "grs-doubly-ext";
    case Family::kGrsTriplyExtended: return "grs-triply-ext";
    case Family::kDefault: return "default";
  }
  return "default";
}

Family parse_family(const std::string& tag) {
  for (Family f : {Family::kSubgroupMult, Family::kSubgroupAdd, Family::kGrs, Family::kGrsDoublyExtended,
                   Family::kGrsTriplyExtended, Family::kDefault})
    if (family_tag(f) == tag) return f;
  throw PreconditionError("unknown family '" + tag + "'");
}

std::string variant_tag(Variant variant) {
  switch (variant) {
    case Variant::kBase: return "base";
    case Variant::kA: return "A";
    case Variant::kB: return "B";
  }
  return "base";
}

Variant parse_variant(const std::string& tag) {
  if (tag == "base") return Variant::kBase;
  if (tag == "A") return Variant::kA;
  if (tag == "B") return Variant::kB;
  throw PreconditionError("unknown variant '" + tag + "'");
}

bool ConversionPlan::per_symbol() const {
  for (const auto& parity : parities)
    for (const auto& term : parity)
      if (term.sources.size() != 1) return false;
  return true;
}

bool AccessTrace::per_symbol(std::size_t lambda) const {
  for (const auto& reads : symbol_reads) {
    std::vector<std::size_t> count(lambda, 0);
    for (const auto& d : reads) {
      if (d.codeword >= lambda) return false;
      ++count[d.codeword];
    }
    if (std::any_of(count.begin(), count.end(), [](std::size_t c) { return c != 1; })) return false;
  }
  return true;
}

const OrderedSet* ConvertiblePair::find_set(const std::string& name) const {
  for (const auto& s : sets)
    if (s.name == name) return &s.set;
  return nullptr;
}

ConvertiblePair build_subgroup_mult(const MergeParams& params, const FieldSpec& field, Variant variant,
                                    std::optional<std::vector<Symbol>> x1) {
  require_optimal_regime(params);
  const std::size_t r = params.r_i;
  const std::size_t drop = variant == Variant::kBase ? 0 : (variant == Variant::kA ? 1 : 2);
  require(r > drop, "subgroup size r - " + std::to_string(drop) + " must be positive");
  const std::size_t s = r - drop;
  require(params.lambda <= s, "lambda must not exceed the subgroup size " + std::to_string(s));
  require((field.q() - 1) % s == 0, "multiplicative subgroup of order " + std::to_string(s) +
                                        " needs s | q - 1, got q = " + std::to_string(field.q()));
  if (!x1) require_field_order(field, (params.k_i + 1) * s + 1, "default first block");

  const Symbol alpha = field.primitive_element();
  const Symbol gamma = field.pow(alpha, static_cast<long long>((field.q() - 1) / s));

  std::vector<Symbol> y = powers(field, gamma, 0, s);
  if (variant != Variant::kBase) y.push_back(0);
  const OrderedSet ys = make_set(field, y, "Y");

  std::vector<Symbol> first = x1 ? *x1 : powers(field, alpha, 1, params.k_i);
  require(first.size() == params.k_i, "first block must have k_i elements");
  std::vector<OrderedSet> blocks;
  for (std::size_t l = 0; l < params.lambda; ++l) {
    const Symbol shift = field.pow(gamma, static_cast<long long>(l));
    std::vector<Symbol> b;
    for (auto v : first) b.push_back(field.mul(shift, v));
    blocks.push_back(make_set(field, std::move(b), block_name("X", l)));
  }
  return finish_cauchy_pair(params, field, Family::kSubgroupMult, variant, blocks, ys, variant == Variant::kB);
}

ConvertiblePair build_subgroup_add(const MergeParams& params, const FieldSpec& field, Variant variant,
                                   std::optional<std::vector<Symbol>> x1) {
  require_optimal_regime(params);
  require(variant != Variant::kB, "the additive family has no variant B");
  const std::size_t s = params.r_i - (variant == Variant::kA ? 1 : 0);
  const auto [sp, u] = prime_power_decompose(s);
  require(s >= 2 && sp == field.p() && u < field.m(),
          "additive subgroup of order " + std::to_string(s) + " needs s = p^u with 1 <= u < m over GF(" +
              std::to_string(field.q()) + ")");
  require(params.lambda <= s, "lambda must not exceed the subgroup size " + std::to_string(s));
  if (!x1) require_field_order(field, static_cast<std::uint64_t>(params.k_i + 1) * s, "default first block");

  // Integers below p^u are exactly the span of 1, x, ..., x^(u-1).
  std::vector<Symbol> y(s);
  for (std::size_t j = 0; j < s; ++j) y[j] = static_cast<Symbol>(j);
  const OrderedSet ys = make_set(field, y, "Y");

  std::vector<Symbol> first;
  if (x1) {
    first = *x1;
  } else {
    for (std::size_t f = 1; f <= params.k_i; ++f) first.push_back(static_cast<Symbol>(f * s));
  }
  require(first.size() == params.k_i, "first block must have k_i elements");
  std::vector<OrderedSet> blocks;
  for (std::size_t l = 0; l < params.lambda; ++l) {
    std::vector<Symbol> b;
    for (auto v : first) b.push_back(field.add(y[l], v));
    blocks.push_back(make_set(field, std::move(b), block_name("X", l)));
  }
  return finish_cauchy_pair(params, field, Family::kSubgroupAdd, variant, blocks, ys, variant == Variant::kA);
}

std::vector<Symbol> vanishing_polynomial(const FieldSpec& field, std::span<const Symbol> roots) {
  std::vector<Symbol> f{1};
  for (auto beta : roots) {
    std::vector<Symbol> next(f.size() + 1, 0);
    for (std::size_t t = 0; t < f.size(); ++t) {
      next[t + 1] = field.add(next[t + 1], f[t]);
      next[t] = field.sub(next[t], field.mul(beta, f[t]));
    }
    f = std::move(next);
  }
  return f;
}

Matrix f_matrix(const FieldSpec& field, std::span<const Symbol> f, std::size_t r_f, std::size_t r_i) {
  require(!f.empty() && f.size() - 1 == r_i - r_f, "f must have degree r_i - r_f");
  Matrix out(field, r_f, r_i);
  for (std::size_t j = 0; j < r_f; ++j)
    for (std::size_t t = 0; t < f.size(); ++t) out(j, j + t) = f[t];
  return out;
}

ConvertiblePair build_grs(const MergeParams& params, const FieldSpec& field, bool doubly_extended) {
  require_optimal_regime(params);
  const std::size_t k = params.k_i;
  const std::size_t ext = doubly_extended ? 1 : 0;
  const std::string what = doubly_extended ? "doubly-extended GRS pair" : "GRS pair";
  require_field_order(field, std::max(k + params.r_i, params.k_f() + params.r_f) - ext, what);

  const Symbol gamma = field.primitive_element();
  std::vector<OrderedSet> a;
  for (std::size_t l = 0; l < params.lambda; ++l)
    a.push_back(make_set(field, powers(field, gamma, l * k, k), block_name("A", l)));

  const std::size_t bf_size = params.r_f - ext;
  std::vector<Symbol> bf{0};
  for (auto v : powers(field, gamma, params.k_f(), bf_size - 1)) bf.push_back(v);

  const std::size_t bi_size = params.r_i - ext;
  std::vector<Symbol> bi = bf;
  for (std::size_t e = params.k_f() + bf_size - 1, tries = 0; bi.size() < bi_size && tries < field.q(); ++e, ++tries) {
    const Symbol v = field.pow(gamma, static_cast<long long>(e % (field.q() - 1)));
    if (!a[0].contains(v) && std::find(bi.begin(), bi.end(), v) == bi.end()) bi.push_back(v);
  }
  require(bi.size() == bi_size, "not enough field elements to extend B^F to B^I");

  const OrderedSet bf_set = make_set(field, bf, "B_F");
  const OrderedSet bi_set = make_set(field, bi, "B_I");
  const std::vector<Symbol> extra(bi.begin() + static_cast<std::ptrdiff_t>(bf.size()), bi.end());
  const std::vector<Symbol> f = vanishing_polynomial(field, extra);
  auto eval = [&](Symbol x) {
    Symbol acc = 0;
    for (std::size_t t = f.size(); t-- > 0;) acc = field.add(field.mul(acc, x), f[t]);
    return acc;
  };

  std::vector<Symbol> scale;
  for (auto v : a[0]) scale.push_back(field.inv(eval(v)));
  for (std::size_t j = 0; j < bi.size(); ++j) scale.push_back(j < bf.size() ? field.inv(eval(bi[j])) : 1);
  if (doubly_extended) scale.push_back(1);

  auto v_or_ext = [&](const OrderedSet& s, std::size_t r) {
    return doubly_extended ? extended_vandermonde(s, r) : vandermonde(s, r);
  };
  const Matrix h_i = scale_columns(horizontal_concat({vandermonde(a[0], params.r_i), v_or_ext(bi_set, params.r_i)}), scale);

  std::vector<Matrix> hf_blocks;
  for (const auto& al : a) hf_blocks.push_back(vandermonde(al, params.r_f));
  const Matrix w = v_or_ext(bf_set, params.r_f);
  hf_blocks.push_back(w);
  const Matrix h_f = horizontal_concat(std::span<const Matrix>(hf_blocks));

  const Matrix w_inv = inverse(w);
  std::vector<Matrix> m;
  for (std::size_t l = 0; l < params.lambda; ++l) {
    const Symbol base = field.pow(gamma, static_cast<long long>(l * k));
    std::vector<Symbol> d;
    for (std::size_t t = 0; t < params.r_f; ++t) d.push_back(field.pow(base, static_cast<long long>(t)));
    m.push_back(w_inv * diagonal(field, d) * w);
  }

  std::vector<std::size_t> read_positions;
  for (std::size_t u = 0; u < bf_size; ++u) read_positions.push_back(k + u);
  if (doubly_extended) read_positions.push_back(params.n_i() - 1);

  std::vector<NamedSet> sets;
  for (std::size_t l = 0; l < a.size(); ++l) sets.push_back({block_name("A", l), a[l]});
  sets.push_back({"B_I", bi_set});
  sets.push_back({"B_F", bf_set});
  return ConvertiblePair{params,
                         doubly_extended ? Family::kGrsDoublyExtended : Family::kGrs,
                         Variant::kBase,
                         MdsCode::parity_check(h_i),
                         MdsCode::parity_check(h_f),
                         plan_from_blocks(params, m, read_positions),
                         std::move(sets)};
}

ConvertiblePair build_triply_extended(const MergeParams& params, const FieldSpec& field) {
  params.validate();
  require(params.r_i == 3 && params.r_f == 3, "triply-extended pair needs r_i = r_f = 3");
  require(params.k_i >= 3, "triply-extended pair needs k_i >= 3");
  require(field.p() == 2, "triply-extended pair needs a field of characteristic 2");
  require_field_order(field, params.k_f() + 1, "triply-extended pair");

  const std::size_t k = params.k_i;
  const Symbol gamma = field.primitive_element();
  std::vector<OrderedSet> a;
  for (std::size_t l = 0; l < params.lambda; ++l)
    a.push_back(make_set(field, powers(field, gamma, l * k, k), block_name("A", l)));
  const OrderedSet b(field, {0});

  const Matrix w = extended_vandermonde(b, 3, true);
  const Matrix h_i = horizontal_concat({vandermonde(a[0], 3), w});
  std::vector<Matrix> hf_blocks;
  for (const auto& al : a) hf_blocks.push_back(vandermonde(al, 3));
  hf_blocks.push_back(w);

  const Matrix w_inv = inverse(w);
  std::vector<Matrix> m;
  for (std::size_t l = 0; l < params.lambda; ++l) {
    const Symbol base = field.pow(gamma, static_cast<long long>(l * k));
    const std::vector<Symbol> d{1, base, field.mul(base, base)};
    m.push_back(w_inv * diagonal(field, d) * w);
  }

  std::vector<NamedSet> sets;
  for (std::size_t l = 0; l < a.size(); ++l) sets.push_back({block_name("A", l), a[l]});
  sets.push_back({"B", b});
  return ConvertiblePair{params,
                         Family::kGrsTriplyExtended,
                         Variant::kBase,
                         MdsCode::parity_check(h_i),
                         MdsCode::parity_check(horizontal_concat(std::span<const Matrix>(hf_blocks))),
                         plan_from_blocks(params, m, {k, k + 1, k + 2}),
                         std::move(sets)};
}

ConvertiblePair build_default(const MergeParams& params, const FieldSpec& field) {
  params.validate();
  require_field_order(field, std::max(params.n_i(), params.n_f()), "Reed-Solomon pair");
  auto first_elements = [&](std::size_t n) {
    std::vector<Symbol> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Symbol>(j);
    return OrderedSet(field, std::move(v));
  };
  const OrderedSet si = first_elements(params.n_i());
  const OrderedSet sf = first_elements(params.n_f());
  ConvertiblePair pair{params,
                       Family::kDefault,
                       Variant::kBase,
                       MdsCode::parity_check(vandermonde(si, params.r_i)),
                       MdsCode::parity_check(vandermonde(sf, params.r_f)),
                       {},
                       {{"S_I", si}, {"S_F", sf}}};
  pair.plan = default_plan(pair);
  return pair;
}

ConversionPlan default_plan(const ConvertiblePair& pair) {
  const MergeParams& p = pair.params;
  const Matrix& pf = pair.final_code.systematic_parity();
  ConversionPlan plan;
  plan.parities.resize(p.r_f);
  for (std::size_t i = 0; i < p.r_f; ++i)
    for (std::size_t l = 0; l < p.lambda; ++l) {
      PlanTerm term;
      for (std::size_t t = 0; t < p.k_i; ++t) {
        const Symbol c = pf(l * p.k_i + t, i);
        if (c == 0) continue;
        term.sources.push_back(t);
        term.coefficients.push_back(c);
      }
      plan.parities[i].push_back(std::move(term));
    }
  return plan;
}

std::optional<BlockMap> verify_parallel_block_reconstructible(const Matrix& p, std::size_t k_i) {
  require(k_i >= 1 && p.rows() % k_i == 0, "P must have a whole number of k_i-row blocks");
  const FieldSpec& field = p.field();
  const std::size_t lambda = p.rows() / k_i;
  auto block_column = [&](std::size_t l, std::size_t c) {
    std::vector<Symbol> v(k_i);
    for (std::size_t t = 0; t < k_i; ++t) v[t] = p(l * k_i + t, c);
    return v;
  };
  std::vector<std::vector<Symbol>> first;
  for (std::size_t c = 0; c < p.cols(); ++c) first.push_back(block_column(0, c));

  BlockMap map;
  for (std::size_t l = 0; l < lambda; ++l) {
    std::vector<BlockMatch> row;
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < p.cols(); ++i) {
      const std::vector<Symbol> col = block_column(l, i);
      std::optional<BlockMatch> found;
      // Prefer the same index, then the lowest one.
      std::vector<std::size_t> order{i};
      for (std::size_t c = 0; c < p.cols(); ++c)
        if (c != i) order.push_back(c);
      for (auto c : order) {
        if (std::all_of(first[c].begin(), first[c].end(), [](Symbol v) { return v == 0; })) continue;
        if (auto theta = scalar_multiple_of(field, col, first[c]); theta && *theta != 0) {
          found = BlockMatch{c, *theta};
          break;
        }
      }
      if (!found) return std::nullopt;
      if (!used.insert(found->source_column).second) map.is_permutation = false;
      row.push_back(*found);
    }
    map.blocks.push_back(std::move(row));
  }
  return map;
}

ConversionResult run_plan(const ConvertiblePair& pair, const ConversionPlan& plan,
                          std::span<const Codeword> initial_codewords) {
  const MergeParams& p = pair.params;
  const FieldSpec& field = pair.field();
  require(initial_codewords.size() == p.lambda,
          "conversion needs " + std::to_string(p.lambda) + " initial codewords, got " +
              std::to_string(initial_codewords.size()));
  for (std::size_t l = 0; l < p.lambda; ++l) {
    require(initial_codewords[l].size() == p.n_i(), "initial codeword " + std::to_string(l) + " has wrong length");
    for (auto v : initial_codewords[l]) require(field.contains(v), "symbol outside the field");
    if (!pair.initial_code.contains(initial_codewords[l]))
      throw InconsistentDataError("initial codeword " + std::to_string(l) + " is not in the initial code");
  }
  require(plan.num_parities() == p.r_f, "plan does not produce r_f parities");

  ConversionResult out;
  std::set<DiskId> read;
  auto read_disk = [&](std::size_t l, std::size_t pos, std::vector<DiskId>& log) {
    require(pos < p.n_i(), "plan reads outside the initial codeword");
    const DiskId id{l, pos};
    read.insert(id);
    log.push_back(id);
    return initial_codewords[l][pos];
  };

  // Message symbols stay on their disks; only the new parities are written.
  out.final_codeword.reserve(p.n_f());
  for (std::size_t l = 0; l < p.lambda; ++l)
    out.final_codeword.insert(out.final_codeword.end(), initial_codewords[l].begin(),
                              initial_codewords[l].begin() + static_cast<std::ptrdiff_t>(p.k_i));
  for (const auto& parity : plan.parities) {
    require(parity.size() == p.lambda, "plan term count differs from lambda");
    std::vector<DiskId> log;
    Symbol acc = 0;
    for (std::size_t l = 0; l < p.lambda; ++l) {
      const PlanTerm& term = parity[l];
      require(term.sources.size() == term.coefficients.size(), "plan term size mismatch");
      for (std::size_t s = 0; s < term.sources.size(); ++s)
        acc = field.add(acc, field.mul(term.coefficients[s], read_disk(l, term.sources[s], log)));
    }
    out.final_codeword.push_back(acc);
    out.trace.symbol_reads.push_back(std::move(log));
  }
  out.trace.read_set.assign(read.begin(), read.end());
  out.trace.disks_written = p.r_f;
  return out;
}

ConversionResult convert(const ConvertiblePair& pair, std::span<const Codeword> initial_codewords) {
  return run_plan(pair, pair.plan, initial_codewords);
}

ConversionResult convert_default(const ConvertiblePair& pair, std::span<const Codeword> initial_codewords) {
  return run_plan(pair, default_plan(pair), initial_codewords);
}

std::size_t access_cost_bound(const MergeParams& params) {
  if (params.access_optimal_regime()) return (params.lambda + 1) * params.r_f;
  return params.k_f() + params.r_f;
}

AccessReport verify_access_optimal(const ConvertiblePair& pair, std::size_t trials, std::uint64_t seed) {
  require(trials >= 1, "need at least one trial");
  const MergeParams& p = pair.params;
  require(p.access_optimal_regime(), "access optimality is only defined for r_f <= min(k_i, r_i)");
  AccessReport rep;
  rep.trials = trials;
  rep.bound = access_cost_bound(p);
  rep.conversions_correct = true;
  rep.data_independent = true;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Codeword> init;
    std::vector<Symbol> all;
    for (std::size_t l = 0; l < p.lambda; ++l) {
      const auto msg = rng.symbols(pair.field(), p.k_i);
      all.insert(all.end(), msg.begin(), msg.end());
      init.push_back(pair.initial_code.encode(msg));
    }
    const ConversionResult res = convert(pair, init);
    if (res.final_codeword != pair.final_code.encode(all)) {
      if (rep.conversions_correct) rep.failure = "trial " + std::to_string(t) + ": converted codeword differs from re-encoding";
      rep.conversions_correct = false;
    }
    if (t == 0) {
      rep.trace = res.trace;
    } else if (!(res.trace == rep.trace)) {
      if (rep.data_independent && rep.failure.empty()) rep.failure = "access pattern depends on the data";
      rep.data_independent = false;
    }
  }
  rep.reads = rep.trace.disks_read();
  rep.writes = rep.trace.disks_written;
  rep.reads_optimal = rep.reads == p.lambda * p.r_f;
  rep.writes_optimal = rep.writes == p.r_f;
  rep.per_symbol = pair.plan.per_symbol() && rep.trace.per_symbol(p.lambda);
  const bool needs_per_symbol = pair.family == Family::kSubgroupMult || pair.family == Family::kSubgroupAdd;
  rep.passed = rep.conversions_correct && rep.data_independent && rep.reads_optimal && rep.writes_optimal &&
               (!needs_per_symbol || rep.per_symbol);
  if (!rep.passed && rep.failure.empty()) {
    if (!rep.reads_optimal)
      rep.failure = "read " + std::to_string(rep.reads) + " disks, optimum is " + std::to_string(p.lambda * p.r_f);
    else if (!rep.writes_optimal)
      rep.failure = "wrote " + std::to_string(rep.writes) + " disks, optimum is " + std::to_string(p.r_f);
    else
      rep.failure = "conversion is not per-symbol";
  }
  return rep;
}

}  // namespace convcode
