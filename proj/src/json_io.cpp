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

#include "convcode/json_io.hpp"

#include <set>

namespace convcode {

namespace {

const Json& field_of(const Json& j, const char* key) {
  require(j.is_object(), "expected a JSON object");
  const auto it = j.find(key);
  require(it != j.end(), std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Json disk_list(const std::vector<DiskId>& disks) {
  Json out = Json::array();
  for (const auto& d : disks) out.push_back({d.codeword, d.position});
  return out;
}

std::vector<DiskId> disks_from_json(const Json& j) {
  require(j.is_array(), "disk list must be an array");
  std::vector<DiskId> out;
  for (const auto& d : j) {
    require(d.is_array() && d.size() == 2, "disk entries are [codeword, position] pairs");
    out.push_back({d[0].get<std::size_t>(), d[1].get<std::size_t>()});
  }
  return out;
}

}  // namespace

Json to_json(const FieldSpec& field) {
  return Json{{"p", field.p()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto m = j.contains("m") ? get<unsigned>(j, "m") : 1u;
  if (m == 1) {
    const FieldSpec f = FieldSpec::prime(p);
    if (j.contains("modulus")) {
      const auto mod = get<std::vector<std::uint32_t>>(j, "modulus");
      require(mod.empty() || (mod.size() == 2 && mod[1] == 1), "prime field modulus must be [] or [c, 1]");
    }
    return f;
  }
  if (!j.contains("modulus")) return FieldSpec::extension(p, m);
  return FieldSpec::extension(p, m, get<std::vector<std::uint32_t>>(j, "modulus"));
}

Json to_json(const Matrix& m) {
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", to_json(m.field())}, {"entries", m.to_rows()}};
}

Matrix matrix_from_json(const Json& j) {
  const FieldSpec f = field_from_json(field_of(j, "field"));
  const auto rows = get<std::size_t>(j, "rows");
  const auto cols = get<std::size_t>(j, "cols");
  const auto entries = get<std::vector<std::vector<Symbol>>>(j, "entries");
  require(entries.size() == rows, "matrix 'entries' row count differs from 'rows'");
  std::vector<Symbol> flat;
  for (const auto& r : entries) {
    require(r.size() == cols, "matrix 'entries' row length differs from 'cols'");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(f, rows, cols, std::move(flat));
}

Json to_json(const MdsCode& code) {
  return Json{{"n", code.n()},
              {"k", code.k()},
              {"repr", code.representation() == CodeRepresentation::kSystematic ? "systematic" : "parity_check"},
              {"matrix", to_json(code.matrix())},
              {"field", to_json(code.field())}};
}

MdsCode code_from_json(const Json& j) {
  const auto repr = get<std::string>(j, "repr");
  Matrix m = matrix_from_json(field_of(j, "matrix"));
  require(field_from_json(field_of(j, "field")) == m.field(), "code field differs from its matrix field");
  std::optional<MdsCode> code;
  if (repr == "systematic")
    code = MdsCode::systematic(std::move(m));
  else if (repr == "parity_check")
    code = MdsCode::parity_check(std::move(m));
  else
    throw PreconditionError("unknown code repr '" + repr + "'");
  require(code->n() == get<std::size_t>(j, "n") && code->k() == get<std::size_t>(j, "k"),
          "code n/k differ from its matrix shape");
  return *code;
}

Json to_json(const MergeParams& p) {
  return Json{{"k_i", p.k_i}, {"r_i", p.r_i}, {"r_f", p.r_f}, {"lambda", p.lambda}};
}

MergeParams merge_params_from_json(const Json& j) {
  return MergeParams{get<std::size_t>(j, "k_i"), get<std::size_t>(j, "r_i"), get<std::size_t>(j, "r_f"),
                     get<std::size_t>(j, "lambda")};
}

Json to_json(const BwParams& p) {
  return Json{{"k_i", p.k_i}, {"r_i", p.r_i}, {"r_f", p.r_f}, {"lambda", p.lambda}};
}

BwParams bw_params_from_json(const Json& j) {
  return BwParams{get<std::size_t>(j, "k_i"), get<std::size_t>(j, "r_i"), get<std::size_t>(j, "r_f"),
                  get<std::size_t>(j, "lambda")};
}

Json to_json(const ConversionPlan& plan) {
  Json out = Json::array();
  for (const auto& parity : plan.parities) {
    Json terms = Json::array();
    for (const auto& t : parity) terms.push_back({{"sources", t.sources}, {"coefficients", t.coefficients}});
    out.push_back(std::move(terms));
  }
  return out;
}

ConversionPlan plan_from_json(const Json& j) {
  require(j.is_array(), "plan must be an array of new parities");
  ConversionPlan plan;
  for (const auto& parity : j) {
    require(parity.is_array(), "plan entries must be arrays of terms");
    std::vector<PlanTerm> terms;
    for (const auto& t : parity) {
      PlanTerm term{get<std::vector<std::size_t>>(t, "sources"), get<std::vector<Symbol>>(t, "coefficients")};
      require(term.sources.size() == term.coefficients.size(), "plan term sources/coefficients differ in length");
      terms.push_back(std::move(term));
    }
    plan.parities.push_back(std::move(terms));
  }
  return plan;
}

Json to_json(const ConvertiblePair& pair) {
  std::set<DiskId> read;
  for (const auto& parity : pair.plan.parities)
    for (std::size_t l = 0; l < parity.size(); ++l)
      for (auto s : parity[l].sources) read.insert({l, s});
  Json sets = Json::object();
  for (const auto& s : pair.sets) sets[s.name] = s.set.elements();
  return Json{{"kind", "pair"},
              {"params", to_json(pair.params)},
              {"family", family_tag(pair.family)},
              {"variant", variant_tag(pair.variant)},
              {"field", to_json(pair.field())},
              {"initial", to_json(pair.initial_code)},
              {"final", to_json(pair.final_code)},
              {"plan", to_json(pair.plan)},
              {"read_set", disk_list({read.begin(), read.end()})},
              {"sets", std::move(sets)}};
}

ConvertiblePair pair_from_json(const Json& j) {
  require(descriptor_kind(j) == "pair", "not a scalar pair descriptor");
  const MergeParams params = merge_params_from_json(field_of(j, "params"));
  params.validate();
  const FieldSpec field = field_from_json(field_of(j, "field"));
  MdsCode initial = code_from_json(field_of(j, "initial"));
  MdsCode final_code = code_from_json(field_of(j, "final"));
  require(initial.field() == field && final_code.field() == field, "codes must use the pair's field");
  require(initial.n() == params.n_i() && initial.k() == params.k_i, "initial code shape differs from params");
  require(final_code.n() == params.n_f() && final_code.k() == params.k_f(), "final code shape differs from params");
  ConversionPlan plan = plan_from_json(field_of(j, "plan"));
  require(plan.num_parities() == params.r_f, "plan must list r_f new parities");
  for (const auto& parity : plan.parities) {
    require(parity.size() == params.lambda, "plan must have lambda terms per new parity");
    for (const auto& t : parity)
      for (std::size_t s = 0; s < t.sources.size(); ++s) {
        require(t.sources[s] < params.n_i(), "plan source outside the initial codeword");
        require(field.contains(t.coefficients[s]), "plan coefficient outside the field");
      }
  }
  std::vector<NamedSet> sets;
  if (j.contains("sets")) {
    const Json& js = j["sets"];
    require(js.is_object(), "'sets' must be an object");
    for (auto it = js.begin(); it != js.end(); ++it)
      sets.push_back({it.key(), OrderedSet(field, it.value().get<std::vector<Symbol>>())});
  }
  ConvertiblePair pair{params,
                       parse_family(get<std::string>(j, "family")),
                       j.contains("variant") ? parse_variant(get<std::string>(j, "variant")) : Variant::kBase,
                       std::move(initial),
                       std::move(final_code),
                       std::move(plan),
                       std::move(sets)};
  if (j.contains("read_set"))
    require(to_json(pair)["read_set"] == j["read_set"], "'read_set' does not match the plan");
  return pair;
}

Json to_json(const AccessTrace& trace, std::size_t lambda) {
  Json per = Json::array();
  for (const auto& r : trace.symbol_reads) per.push_back(disk_list(r));
  return Json{{"reads", trace.disks_read()},
              {"writes", trace.disks_written},
              {"per_symbol", trace.per_symbol(lambda)},
              {"read_set", disk_list(trace.read_set)},
              {"symbol_reads", std::move(per)}};
}

AccessTrace trace_from_json(const Json& j) {
  AccessTrace t;
  t.read_set = disks_from_json(field_of(j, "read_set"));
  t.disks_written = get<std::size_t>(j, "writes");
  if (j.contains("symbol_reads"))
    for (const auto& r : j["symbol_reads"]) t.symbol_reads.push_back(disks_from_json(r));
  require(t.disks_read() == get<std::size_t>(j, "reads"), "'reads' differs from the read set size");
  return t;
}

Json to_json(const AccessReport& r) {
  return Json{{"trials", r.trials},
              {"reads", r.reads},
              {"writes", r.writes},
              {"bound", r.bound},
              {"reads_optimal", r.reads_optimal},
              {"writes_optimal", r.writes_optimal},
              {"conversions_correct", r.conversions_correct},
              {"data_independent", r.data_independent},
              {"per_symbol", r.per_symbol},
              {"passed", r.passed},
              {"failure", r.failure}};
}

Json to_json(const VectorCodeword& word, const FieldSpec& field) {
  return Json{{"n", word.n()}, {"alpha", word.alpha}, {"field", to_json(field)}, {"subsymbols", word.symbols}};
}

VectorCodeword vector_codeword_from_json(const Json& j) {
  const FieldSpec field = field_from_json(field_of(j, "field"));
  VectorCodeword w{get<std::size_t>(j, "alpha"), get<std::vector<std::vector<Symbol>>>(j, "subsymbols")};
  require(w.n() == get<std::size_t>(j, "n"), "'n' differs from the number of symbols");
  for (const auto& s : w.symbols) {
    require(s.size() == w.alpha, "every symbol needs alpha sub-symbols");
    for (auto v : s) require(field.contains(v), "sub-symbol outside the field");
  }
  return w;
}

Json to_json(const BandwidthTrace& trace) {
  return Json{{"read", trace.read_total}, {"write", trace.write_total}, {"per_disk", trace.reads}};
}

Json to_json(const BandwidthReport& r) {
  return Json{{"read", r.read},
              {"write", r.write},
              {"bound_read", r.bound_read},
              {"bound_write", r.bound_write},
              {"optimal", r.optimal}};
}

Json to_json(const VectorCodePair& pair) {
  Json w = Json::array();
  for (const auto& m : pair.w) w.push_back(to_json(m));
  return Json{{"kind", "vector-pair"},
              {"params", to_json(pair.params)},
              {"alpha", pair.params.alpha()},
              {"beta", pair.params.beta()},
              {"field", to_json(pair.field())},
              {"base", to_json(pair.base)},
              {"p_initial", to_json(pair.p_initial)},
              {"w", std::move(w)}};
}

VectorCodePair vector_pair_from_json(const Json& j) {
  require(descriptor_kind(j) == "vector-pair", "not a vector pair descriptor");
  const BwParams params = bw_params_from_json(field_of(j, "params"));
  VectorCodePair pair = build_vector_pair(params, pair_from_json(field_of(j, "base")));
  require(pair.field() == field_from_json(field_of(j, "field")), "vector pair field differs from its base");
  if (j.contains("p_initial"))
    require(to_json(pair.p_initial) == j["p_initial"], "'p_initial' does not match the base pair");
  if (j.contains("w")) require(to_json(pair)["w"] == j["w"], "'w' does not match the base pair");
  return pair;
}

std::string descriptor_kind(const Json& j) {
  require(j.is_object(), "descriptor must be a JSON object");
  return j.contains("kind") ? j["kind"].get<std::string>() : "pair";
}

}  // namespace convcode
