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

#include "convcode/bw_convert.hpp"

#include <numeric>

namespace convcode {

namespace {

Symbol dot(const FieldSpec& f, std::span<const Symbol> a, const Matrix& p, std::size_t col) {
  Symbol acc = 0;
  for (std::size_t t = 0; t < a.size(); ++t) acc = f.add(acc, f.mul(a[t], p(t, col)));
  return acc;
}

void check_message(const VectorCodePair& pair, const VectorMessage& m) {
  require(m.size() == pair.params.k_i, "vector message needs k_i rows");
  for (const auto& row : m) {
    require(row.size() == pair.params.alpha(), "vector message rows need alpha sub-symbols");
    for (auto v : row) require(pair.field().contains(v), "sub-symbol outside the field");
  }
}

// Column j of a k x alpha message.
std::vector<Symbol> message_column(const VectorMessage& m, std::size_t j) {
  std::vector<Symbol> out(m.size());
  for (std::size_t t = 0; t < m.size(); ++t) out[t] = m[t][j];
  return out;
}

}  // namespace

std::size_t BwParams::g() const { return std::gcd(r_f, r_i); }

void BwParams::validate() const {
  require(r_i >= 1, "r_i must be at least 1");
  require(lambda >= 2, "lambda must be at least 2");
  require(k_i > r_f && r_f > r_i, "piggybacked vector code needs k_i > r_f > r_i, got k_i=" + std::to_string(k_i) +
                                      ", r_i=" + std::to_string(r_i) + ", r_f=" + std::to_string(r_f));
}

BandwidthCost bandwidth_bound(std::size_t k_i, std::size_t r_i, std::size_t r_f, std::size_t lambda,
                              std::size_t alpha) {
  require(k_i >= 1 && r_i >= 1 && r_f >= 1 && lambda >= 1 && alpha >= 1, "bandwidth bound needs positive parameters");
  BandwidthCost c;
  c.write = static_cast<std::uint64_t>(r_f) * alpha;
  if (r_i >= r_f || k_i <= r_f) {
    c.read = static_cast<std::uint64_t>(lambda) * alpha * std::min(k_i, r_f);
    return c;
  }
  // lambda alpha (r_i + k_i (1 - r_i / r_f)) = lambda alpha (r_i r_f + k_i (r_f - r_i)) / r_f
  const std::uint64_t num = static_cast<std::uint64_t>(lambda) * alpha * (r_i * r_f + k_i * (r_f - r_i));
  require(num % r_f == 0, "read bound is not an integer for alpha = " + std::to_string(alpha));
  c.read = num / r_f;
  return c;
}

BandwidthCost bandwidth_bound(const BwParams& params) {
  return bandwidth_bound(params.k_i, params.r_i, params.r_f, params.lambda, params.alpha());
}

std::size_t min_subpacketization(std::size_t r_f, std::size_t r_i) {
  require(r_i >= 1 && r_f >= r_i, "sub-packetization needs r_f >= r_i >= 1");
  return r_f / std::gcd(r_f, r_i);
}

std::size_t multi_rf_subpacketization(std::size_t r_i, std::span<const std::size_t> r_finals) {
  require(r_i >= 1, "r_i must be at least 1");
  require(!r_finals.empty(), "need at least one final redundancy");
  std::size_t alpha = 1;
  for (auto r : r_finals) {
    require(r > r_i, "every final redundancy must exceed r_i");
    alpha *= r / std::gcd(r_i, r);
  }
  return alpha;
}

std::size_t VectorCodePair::piggyback_column(std::size_t i, std::size_t j) const {
  const std::size_t a = params.alpha(), b = params.beta();
  return params.r_i + (a - b) * (i % params.g()) + (j - b);
}

VectorCodePair build_vector_pair(const BwParams& params, const FieldSpec& field) {
  params.validate();
  const MergeParams base_params{params.k_i, params.r_f, params.r_f, params.lambda};
  const bool doubly = field.q() < params.n_f();
  require(field.q() + 1 >= params.n_f(), "vector pair needs q >= n_f - 1 = " + std::to_string(params.n_f() - 1) +
                                             ", got q = " + std::to_string(field.q()));
  return build_vector_pair(params, build_grs(base_params, field, doubly));
}

VectorCodePair build_vector_pair(const BwParams& params, ConvertiblePair base) {
  params.validate();
  require(base.params.k_i == params.k_i && base.params.r_i == params.r_f && base.params.r_f == params.r_f &&
              base.params.lambda == params.lambda,
          "base pair must have shape (k_i + r_f, k_i; lambda k_i + r_f, lambda k_i)");
  const Matrix p_initial = base.initial_code.systematic_parity();
  const Matrix& p_final = base.final_code.systematic_parity();
  // r_f rows of P^I that are independent; W_l is solved there and checked on all rows.
  std::vector<std::size_t> rows;
  for (std::size_t t = 0; t < params.k_i && rows.size() < params.r_f; ++t) {
    rows.push_back(t);
    if (rank(select_rows(p_initial, rows)) < rows.size()) rows.pop_back();
  }
  require(rows.size() == params.r_f, "base initial parity block must have full column rank r_f");
  const Matrix square = select_rows(p_initial, rows);

  std::vector<Matrix> blocks, w;
  for (std::size_t l = 0; l < params.lambda; ++l) {
    Matrix block = row_range(p_final, l * params.k_i, (l + 1) * params.k_i);
    Matrix wl = solve(square, select_rows(block, rows));
    if (!(p_initial * wl == block))
      throw InconsistentDataError("final parity block " + std::to_string(l + 1) +
                                  " is not in the column space of the initial parity block");
    blocks.push_back(std::move(block));
    w.push_back(std::move(wl));
  }

  std::vector<std::size_t> drop;
  for (std::size_t u = params.r_i; u < params.r_f; ++u) drop.push_back(params.k_i + u);
  MdsCode column_code = base.initial_code.puncture(drop);
  return VectorCodePair{params, std::move(base), p_initial, std::move(blocks), std::move(w), std::move(column_code)};
}

VectorCodeword vector_encode_initial(const VectorCodePair& pair, const VectorMessage& message) {
  check_message(pair, message);
  const BwParams& p = pair.params;
  const FieldSpec& f = pair.field();
  const std::size_t alpha = p.alpha(), beta = p.beta();
  VectorCodeword out{alpha, message};
  std::vector<std::vector<Symbol>> cols;
  for (std::size_t j = 0; j < alpha; ++j) cols.push_back(message_column(message, j));
  for (std::size_t i = 0; i < p.r_i; ++i) {
    std::vector<Symbol> sym(alpha);
    for (std::size_t j = 0; j < alpha; ++j) {
      sym[j] = dot(f, cols[j], pair.p_initial, i);
      if (j >= beta)
        sym[j] = f.add(sym[j], dot(f, cols[pair.piggyback_source(i)], pair.p_initial, pair.piggyback_column(i, j)));
    }
    out.symbols.push_back(std::move(sym));
  }
  return out;
}

VectorCodeword vector_encode_final(const VectorCodePair& pair, std::span<const VectorMessage> messages) {
  const BwParams& p = pair.params;
  require(messages.size() == p.lambda, "final encoding needs lambda message blocks");
  const FieldSpec& f = pair.field();
  VectorCodeword out{p.alpha(), {}};
  for (const auto& m : messages) {
    check_message(pair, m);
    out.symbols.insert(out.symbols.end(), m.begin(), m.end());
  }
  for (std::size_t i = 0; i < p.r_f; ++i) {
    std::vector<Symbol> sym(p.alpha(), 0);
    for (std::size_t j = 0; j < p.alpha(); ++j)
      for (std::size_t l = 0; l < p.lambda; ++l)
        sym[j] = f.add(sym[j], dot(f, message_column(messages[l], j), pair.p_blocks[l], i));
    out.symbols.push_back(std::move(sym));
  }
  return out;
}

VectorMessage vector_decode(const VectorCodePair& pair, std::span<const KnownVectorSymbol> known) {
  const BwParams& p = pair.params;
  const FieldSpec& f = pair.field();
  const std::size_t alpha = p.alpha(), beta = p.beta();
  require(known.size() >= p.k_i, "decoding needs at least k_i = " + std::to_string(p.k_i) + " symbols, got " +
                                      std::to_string(known.size()));
  for (const auto& s : known) {
    require(s.position < p.n_i(), "known position outside the initial codeword");
    require(s.value.size() == alpha, "known symbol needs alpha sub-symbols");
    for (auto v : s.value) require(f.contains(v), "sub-symbol outside the field");
  }

  std::vector<std::vector<Symbol>> cols(alpha);
  auto decode_column = [&](std::size_t j, auto value_of) {
    std::vector<KnownSymbol> col;
    for (const auto& s : known) col.push_back({s.position, value_of(s)});
    cols[j] = pair.column_code.decode_erasures(col);
  };
  for (std::size_t j = 0; j < beta; ++j) decode_column(j, [&](const KnownVectorSymbol& s) { return s.value[j]; });
  // Strip the piggybacks, whose sources are the columns just decoded.
  for (std::size_t j = beta; j < alpha; ++j)
    decode_column(j, [&](const KnownVectorSymbol& s) {
      if (s.position < p.k_i) return s.value[j];
      const std::size_t i = s.position - p.k_i;
      return f.sub(s.value[j], dot(f, cols[pair.piggyback_source(i)], pair.p_initial, pair.piggyback_column(i, j)));
    });

  VectorMessage out(p.k_i, std::vector<Symbol>(alpha));
  for (std::size_t t = 0; t < p.k_i; ++t)
    for (std::size_t j = 0; j < alpha; ++j) out[t][j] = cols[j][t];
  return out;
}

bool vector_contains_initial(const VectorCodePair& pair, const VectorCodeword& word) {
  const BwParams& p = pair.params;
  if (word.alpha != p.alpha() || word.n() != p.n_i()) return false;
  for (const auto& s : word.symbols) {
    if (s.size() != p.alpha()) return false;
    for (auto v : s)
      if (!pair.field().contains(v)) return false;
  }
  const VectorMessage m(word.symbols.begin(), word.symbols.begin() + static_cast<std::ptrdiff_t>(p.k_i));
  return vector_encode_initial(pair, m) == word;
}

bool BandwidthTrace::uniform_download(const BwParams& params) const {
  for (const auto& disks : reads) {
    if (disks.size() != params.n_i()) return false;
    for (std::size_t t = 1; t < params.k_i; ++t)
      if (disks[t] != disks[0]) return false;
    for (std::size_t i = params.k_i; i < params.n_i(); ++i)
      if (disks[i] != params.alpha()) return false;
  }
  return true;
}

VectorConversionResult vector_convert(const VectorCodePair& pair, std::span<const VectorCodeword> initial_codewords,
                                      ReadPolicy policy) {
  const BwParams& p = pair.params;
  const FieldSpec& f = pair.field();
  const std::size_t k = p.k_i, alpha = p.alpha(), beta = p.beta();
  require(initial_codewords.size() == p.lambda, "conversion needs " + std::to_string(p.lambda) + " initial codewords");
  for (std::size_t l = 0; l < p.lambda; ++l)
    if (!vector_contains_initial(pair, initial_codewords[l]))
      throw InconsistentDataError("initial vector codeword " + std::to_string(l) + " is not in the initial code");

  VectorConversionResult out;
  out.trace.reads.assign(p.lambda, std::vector<std::size_t>(p.n_i(), 0));
  auto read = [&](std::size_t l, std::size_t pos, std::size_t j) {
    ++out.trace.reads[l][pos];
    ++out.trace.read_total;
    return initial_codewords[l].symbols[pos][j];
  };

  // Message symbols stay on their disks.
  out.final_codeword.alpha = alpha;
  for (const auto& c : initial_codewords)
    out.final_codeword.symbols.insert(out.final_codeword.symbols.end(), c.symbols.begin(),
                                      c.symbols.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::vector<Symbol>> parity(p.r_f, std::vector<Symbol>(alpha, 0));

  for (std::size_t l = 0; l < p.lambda; ++l) {
    if (policy == ReadPolicy::kDefault) {
      VectorMessage m(k, std::vector<Symbol>(alpha));
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < alpha; ++j) m[t][j] = read(l, t, j);
      for (std::size_t i = 0; i < p.r_f; ++i)
        for (std::size_t j = 0; j < alpha; ++j)
          parity[i][j] = f.add(parity[i][j], dot(f, message_column(m, j), pair.p_blocks[l], i));
      continue;
    }

    // v[u][j] = m_j . p^u for every u < r_f, j < alpha.
    std::vector<std::vector<Symbol>> v(p.r_f, std::vector<Symbol>(alpha, 0));
    for (std::size_t j = beta; j < alpha; ++j) {
      std::vector<Symbol> col(k);
      for (std::size_t t = 0; t < k; ++t) col[t] = read(l, t, j);
      for (std::size_t u = 0; u < p.r_f; ++u) v[u][j] = dot(f, col, pair.p_initial, u);
    }
    for (std::size_t i = 0; i < p.r_i; ++i)
      for (std::size_t j = 0; j < alpha; ++j) {
        const Symbol x = read(l, k + i, j);
        if (j < beta)
          v[i][j] = x;
        else
          v[pair.piggyback_column(i, j)][pair.piggyback_source(i)] = f.sub(x, v[i][j]);
      }
    for (std::size_t i = 0; i < p.r_f; ++i)
      for (std::size_t j = 0; j < alpha; ++j)
        for (std::size_t u = 0; u < p.r_f; ++u)
          parity[i][j] = f.add(parity[i][j], f.mul(pair.w[l](u, i), v[u][j]));
  }

  for (auto& sym : parity) out.final_codeword.symbols.push_back(std::move(sym));
  out.trace.write_total = static_cast<std::uint64_t>(p.r_f) * alpha;
  return out;
}

VectorMessage random_vector_message(const VectorCodePair& pair, Rng& rng) {
  VectorMessage m(pair.params.k_i);
  for (auto& row : m) row = rng.symbols(pair.field(), pair.params.alpha());
  return m;
}

BandwidthReport verify_bandwidth_optimal(const VectorCodePair& pair, std::size_t trials, std::uint64_t seed,
                                         ReadPolicy policy) {
  require(trials >= 1, "need at least one trial");
  const BandwidthCost bound = bandwidth_bound(pair.params);
  BandwidthReport rep;
  rep.trials = trials;
  rep.bound_read = bound.read;
  rep.bound_write = bound.write;
  rep.conversions_correct = true;
  rep.data_independent = true;
  Rng rng(seed);
  BandwidthTrace first;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<VectorMessage> msgs;
    std::vector<VectorCodeword> init;
    for (std::size_t l = 0; l < pair.params.lambda; ++l) {
      msgs.push_back(random_vector_message(pair, rng));
      init.push_back(vector_encode_initial(pair, msgs.back()));
    }
    const auto res = vector_convert(pair, init, policy);
    if (!(res.final_codeword == vector_encode_final(pair, msgs))) {
      if (rep.conversions_correct) rep.failure = "trial " + std::to_string(t) + ": output differs from final encoding";
      rep.conversions_correct = false;
    }
    if (t == 0) {
      first = res.trace;
    } else if (!(res.trace == first)) {
      if (rep.data_independent && rep.failure.empty()) rep.failure = "download pattern depends on the data";
      rep.data_independent = false;
    }
  }
  rep.read = first.read_total;
  rep.write = first.write_total;
  rep.excess = static_cast<std::int64_t>(rep.read + rep.write) - static_cast<std::int64_t>(bound.total());
  rep.optimal = rep.conversions_correct && rep.data_independent && rep.read == bound.read && rep.write == bound.write;
  if (!rep.optimal && rep.failure.empty())
    rep.failure = "read " + std::to_string(rep.read) + " / write " + std::to_string(rep.write) + " against bound " +
                  std::to_string(bound.read) + " / " + std::to_string(bound.write) + " (excess " +
                  std::to_string(rep.excess) + ")";
  return rep;
}

}  // namespace convcode
