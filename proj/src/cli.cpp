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

#include "convcode/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "convcode/combinatorics.hpp"
#include "convcode/json_io.hpp"

namespace convcode {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  require(f.good(), "cannot write '" + path + "'");
  f << text;
}

bool is_prime_power(std::uint32_t q) { return q >= 2 && prime_power_decompose(q).first != 0; }

std::string num(std::uint64_t v) { return std::to_string(v); }

FieldChoice search(const std::string& rule, std::uint32_t from, const std::function<bool(std::uint32_t)>& ok) {
  for (std::uint64_t q = std::max<std::uint32_t>(from, 2); q <= FieldSpec::kMaxOrder; ++q)
    if (is_prime_power(static_cast<std::uint32_t>(q)) && ok(static_cast<std::uint32_t>(q)))
      return {static_cast<std::uint32_t>(q), rule};
  throw PreconditionError("no field of order <= 65536 satisfies " + rule);
}

struct CommonArgs {
  std::string family = "subgroup-mult";
  std::string variant;
  std::size_t k = 0, ri = 0, rf = 0, r = 0, lambda = 2;
  std::string q = "auto";
  std::string field_json;
};

void add_param_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--family", a.family, "construction family");
  cmd->add_option("--variant", a.variant, "base, A or B (overrides a family suffix)");
  cmd->add_option("--k", a.k, "k_i, message symbols per initial codeword")->required();
  cmd->add_option("--ri", a.ri, "r_i, initial parities");
  cmd->add_option("--rf", a.rf, "r_f, final parities");
  cmd->add_option("--r", a.r, "sets r_i = r_f");
  cmd->add_option("--lambda", a.lambda, "number of merged codewords");
  cmd->add_option("--q", a.q, "field order, or 'auto'");
  cmd->add_option("--field-json", a.field_json, "file with a {p, m, modulus} field description");
}

MergeParams merge_params(const CommonArgs& a) {
  MergeParams p{a.k, a.ri, a.rf, a.lambda};
  if (a.r) {
    require(!a.ri || a.ri == a.r, "--r conflicts with --ri");
    require(!a.rf || a.rf == a.r, "--r conflicts with --rf");
    p.r_i = p.r_f = a.r;
  }
  require(p.r_i && p.r_f, "give --r, or both --ri and --rf");
  return p;
}

FieldSpec resolve_field(const CommonArgs& a, const FamilyChoice& fam, const MergeParams& p, std::ostream& err) {
  if (!a.field_json.empty()) return field_from_json(load_json(a.field_json));
  if (a.q == "auto") {
    const FieldChoice c = auto_field(fam, p);
    err << "auto field: q = " << c.q << " (smallest prime power with " << c.rule << ")\n";
    return FieldSpec::of_order(c.q);
  }
  std::uint32_t q = 0;
  try {
    std::size_t used = 0;
    q = static_cast<std::uint32_t>(std::stoul(a.q, &used));
    require(used == a.q.size(), "");
  } catch (const std::exception&) {
    throw PreconditionError("--q must be an integer or 'auto', got '" + a.q + "'");
  }
  return FieldSpec::of_order(q);
}

ConvertiblePair build_scalar(const FamilyChoice& fam, const MergeParams& p, const FieldSpec& f) {
  switch (fam.family) {
    case Family::kSubgroupMult: return build_subgroup_mult(p, f, fam.variant);
    case Family::kSubgroupAdd: return build_subgroup_add(p, f, fam.variant);
    case Family::kGrs: return build_grs(p, f, false);
    case Family::kGrsDoublyExtended: return build_grs(p, f, true);
    case Family::kGrsTriplyExtended: return build_triply_extended(p, f);
    case Family::kDefault: return build_default(p, f);
  }
  throw PreconditionError("unknown family");
}

BwParams bw_params(const MergeParams& p) { return BwParams{p.k_i, p.r_i, p.r_f, p.lambda}; }

std::vector<Symbol> json_symbols(const Json& j, std::size_t n, const FieldSpec& f, const std::string& what) {
  require(j.is_array() && j.size() == n, what + " must list " + std::to_string(n) + " symbols");
  std::vector<Symbol> out;
  for (const auto& v : j) {
    require(v.is_number_unsigned() && f.contains(v.get<Symbol>()), what + " has a value outside the field");
    out.push_back(v.get<Symbol>());
  }
  return out;
}

const Json& message_list(const Json& j, std::size_t lambda) {
  const Json& list = j.is_object() && j.contains("messages") ? j["messages"] : j;
  require(list.is_array() && list.size() == lambda, "messages file must hold " + std::to_string(lambda) + " messages");
  return list;
}

std::string ratio(std::uint64_t got, std::uint64_t best) { return num(got) + "/" + num(best); }

// ---- construct ----

int cmd_construct(const CommonArgs& a, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const FamilyChoice fam = parse_family_choice(a.family, a.variant);
  const MergeParams p = merge_params(a);
  const FieldSpec f = resolve_field(a, fam, p, err);
  const Json j = fam.piggyback ? to_json(build_vector_pair(bw_params(p), f)) : to_json(build_scalar(fam, p, f));
  write_output(out_path, j.dump(2) + "\n", out);
  return kExitOk;
}

// ---- convert ----

struct ConvertArgs {
  std::string pair_path, messages_path, out_path;
  bool random = false, use_default = false, json = false;
  std::uint64_t seed = 1;
};

int convert_scalar(const ConvertiblePair& pair, const ConvertArgs& a, std::ostream& out) {
  const MergeParams& p = pair.params;
  std::vector<std::vector<Symbol>> msgs;
  if (a.random) {
    Rng rng(a.seed);
    for (std::size_t l = 0; l < p.lambda; ++l) msgs.push_back(rng.symbols(pair.field(), p.k_i));
  } else {
    const Json doc = load_json(a.messages_path);
    const Json& list = message_list(doc, p.lambda);
    for (const auto& m : list) msgs.push_back(json_symbols(m, p.k_i, pair.field(), "message"));
  }
  std::vector<Codeword> init;
  std::vector<Symbol> all;
  for (const auto& m : msgs) {
    init.push_back(pair.initial_code.encode(m));
    all.insert(all.end(), m.begin(), m.end());
  }
  const ConversionResult res = a.use_default ? convert_default(pair, init) : convert(pair, init);
  const bool correct = res.final_codeword == pair.final_code.encode(all);
  const std::size_t bound = access_cost_bound(p);
  const std::size_t best_read = bound - p.r_f;
  const bool optimal = correct && res.trace.disks_read() == best_read && res.trace.disks_written == p.r_f;

  Json j{{"kind", "scalar-conversion"},
         {"policy", a.use_default ? "default" : "plan"},
         {"messages", msgs},
         {"final", res.final_codeword},
         {"trace", to_json(res.trace, p.lambda)},
         {"bound", {{"read", best_read}, {"write", p.r_f}, {"total", bound}}},
         {"correct", correct},
         {"optimal", optimal}};
  if (!a.out_path.empty()) write_output(a.out_path, j.dump(2) + "\n", out);
  if (a.json) {
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(12) << "quantity" << std::setw(10) << "actual" << "optimal\n"
        << std::setw(12) << "disks read" << std::setw(10) << res.trace.disks_read() << best_read << "\n"
        << std::setw(12) << "written" << std::setw(10) << res.trace.disks_written << p.r_f << "\n"
        << std::setw(12) << "total" << std::setw(10) << res.trace.total_access() << bound << "\n";
    out << "read " << ratio(res.trace.disks_read(), best_read) << ", write " << ratio(res.trace.disks_written, p.r_f)
        << ", " << (optimal ? "OPTIMAL" : (correct ? "SUBOPTIMAL" : "INCORRECT")) << "\n";
  }
  return correct ? kExitOk : kExitVerifyFailed;
}

int convert_vector(const VectorCodePair& pair, const ConvertArgs& a, std::ostream& out) {
  const BwParams& p = pair.params;
  std::vector<VectorMessage> msgs;
  if (a.random) {
    Rng rng(a.seed);
    for (std::size_t l = 0; l < p.lambda; ++l) msgs.push_back(random_vector_message(pair, rng));
  } else {
    const Json doc = load_json(a.messages_path);
    const Json& list = message_list(doc, p.lambda);
    for (const auto& m : list) {
      require(m.is_array() && m.size() == p.k_i, "vector message must have k_i rows");
      VectorMessage vm;
      for (const auto& row : m) vm.push_back(json_symbols(row, p.alpha(), pair.field(), "message row"));
      msgs.push_back(std::move(vm));
    }
  }
  std::vector<VectorCodeword> init;
  for (const auto& m : msgs) init.push_back(vector_encode_initial(pair, m));
  const auto res = vector_convert(pair, init, a.use_default ? ReadPolicy::kDefault : ReadPolicy::kOptimal);
  const bool correct = res.final_codeword == vector_encode_final(pair, msgs);
  const BandwidthCost bound = bandwidth_bound(p);
  const bool optimal = correct && res.trace.read_total == bound.read && res.trace.write_total == bound.write;

  Json j{{"kind", "vector-conversion"},
         {"policy", a.use_default ? "default" : "optimal"},
         {"messages", msgs},
         {"final", to_json(res.final_codeword, pair.field())},
         {"trace", to_json(res.trace)},
         {"report",
          {{"read", res.trace.read_total},
           {"write", res.trace.write_total},
           {"bound_read", bound.read},
           {"bound_write", bound.write},
           {"optimal", optimal}}},
         {"correct", correct}};
  if (!a.out_path.empty()) write_output(a.out_path, j.dump(2) + "\n", out);
  if (a.json) {
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(12) << "quantity" << std::setw(10) << "actual" << "bound\n"
        << std::setw(12) << "read" << std::setw(10) << res.trace.read_total << bound.read << "\n"
        << std::setw(12) << "write" << std::setw(10) << res.trace.write_total << bound.write << "\n"
        << std::setw(12) << "total" << std::setw(10) << res.trace.read_total + res.trace.write_total << bound.total()
        << "\n";
    out << "read " << ratio(res.trace.read_total, bound.read) << ", write "
        << ratio(res.trace.write_total, bound.write) << ", "
        << (optimal ? "OPTIMAL" : (correct ? "SUBOPTIMAL" : "INCORRECT")) << "\n";
  }
  return correct ? kExitOk : kExitVerifyFailed;
}

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  require(a.random != !a.messages_path.empty(), "give exactly one of --messages and --random");
  const Json desc = load_json(a.pair_path);
  if (descriptor_kind(desc) == "vector-pair") return convert_vector(vector_pair_from_json(desc), a, out);
  return convert_scalar(pair_from_json(desc), a, out);
}

// ---- verify ----

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped
  std::string detail;
};

Check mds_check(const std::string& name, const MdsCode& code) {
  try {
    return {name, code.verify_mds() ? "pass" : "fail", "[" + num(code.n()) + ", " + num(code.k()) + "]"};
  } catch (const CapExceededError& e) {
    return {name, "skipped", e.what()};
  }
}

std::vector<Check> verify_scalar(const ConvertiblePair& pair, std::size_t trials, std::uint64_t seed, Json& extra) {
  std::vector<Check> checks{mds_check("initial_mds", pair.initial_code), mds_check("final_mds", pair.final_code)};
  const bool subgroup = pair.family == Family::kSubgroupMult || pair.family == Family::kSubgroupAdd;
  if (subgroup) {
    const Matrix& pf = pair.final_code.systematic_parity();
    try {
      checks.push_back({"superregular", is_superregular(pf) ? "pass" : "fail", "final parity block"});
    } catch (const CapExceededError& e) {
      checks.push_back({"superregular", "skipped", e.what()});
    }
    if (pf.cols() == pair.initial_code.r()) {
      const auto map = verify_parallel_block_reconstructible(pf, pair.params.k_i);
      checks.push_back({"block_reconstructible", map && map->is_permutation ? "pass" : "fail",
                        map ? "per-block column permutation" : "no scalar-multiple match"});
    }
  }
  if (pair.params.access_optimal_regime()) {
    const AccessReport rep = verify_access_optimal(pair, trials, seed);
    extra["access"] = to_json(rep);
    extra["per_symbol"] = rep.per_symbol;
    checks.push_back({"access_optimal", rep.passed ? "pass" : "fail",
                      "reads " + num(rep.reads) + ", writes " + num(rep.writes) + ", bound " + num(rep.bound) +
                          (rep.failure.empty() ? "" : "; " + rep.failure)});
  } else {
    Rng rng(seed);
    bool ok = true;
    for (std::size_t t = 0; t < trials && ok; ++t) {
      std::vector<Codeword> init;
      std::vector<Symbol> all;
      for (std::size_t l = 0; l < pair.params.lambda; ++l) {
        const auto m = rng.symbols(pair.field(), pair.params.k_i);
        all.insert(all.end(), m.begin(), m.end());
        init.push_back(pair.initial_code.encode(m));
      }
      ok = convert(pair, init).final_codeword == pair.final_code.encode(all);
    }
    checks.push_back({"conversion", ok ? "pass" : "fail", num(trials) + " random trials"});
  }
  return checks;
}

std::vector<Check> verify_vector(const VectorCodePair& pair, std::size_t trials, std::uint64_t seed, Json& extra) {
  std::vector<Check> checks{mds_check("base_initial_mds", pair.base.initial_code),
                            mds_check("base_final_mds", pair.base.final_code)};
  const BwParams& p = pair.params;
  if (binomial(p.n_i(), p.k_i) <= 5000) {
    Rng rng(seed);
    const auto m = random_vector_message(pair, rng);
    const auto c = vector_encode_initial(pair, m);
    bool ok = true;
    for_each_combination(p.n_i(), p.k_i, [&](std::span<const std::size_t> keep) {
      std::vector<KnownVectorSymbol> known;
      for (auto i : keep) known.push_back({i, c.symbols[i]});
      ok = vector_decode(pair, known) == m;
      return ok;
    });
    checks.push_back({"vector_mds", ok ? "pass" : "fail", num(binomial(p.n_i(), p.k_i)) + " subsets"});
  } else {
    checks.push_back({"vector_mds", "skipped", "more than 5000 subsets"});
  }
  const BandwidthReport rep = verify_bandwidth_optimal(pair, trials, seed);
  extra["bandwidth"] = to_json(rep);
  checks.push_back({"bandwidth_optimal", rep.optimal ? "pass" : "fail",
                    "read " + ratio(rep.read, rep.bound_read) + ", write " + ratio(rep.write, rep.bound_write) +
                        (rep.failure.empty() ? "" : "; " + rep.failure)});
  return checks;
}

int cmd_verify(const std::string& pair_path, std::size_t trials, std::uint64_t seed, bool json, std::ostream& out) {
  const Json desc = load_json(pair_path);
  Json extra = Json::object();
  const std::vector<Check> checks = descriptor_kind(desc) == "vector-pair"
                                        ? verify_vector(vector_pair_from_json(desc), trials, seed, extra)
                                        : verify_scalar(pair_from_json(desc), trials, seed, extra);
  bool ok = true;
  for (const auto& c : checks) ok &= c.status != "fail";
  if (json) {
    Json j{{"passed", ok}, {"checks", Json::array()}};
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      out << std::left << std::setw(22) << c.name << std::setw(9) << c.status << c.detail << "\n";
    if (extra.contains("per_symbol")) out << std::setw(22) << "per_symbol" << extra["per_symbol"].dump() << "\n";
    out << (ok ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- sweep ----

struct SweepArgs {
  std::string families = "subgroup-mult,subgroup-mult-A,subgroup-mult-B,subgroup-add,subgroup-add-A,grs,grs-doubly-ext";
  std::string k = "4..6", r, ri, rf, lambda = "2";
  std::string format = "csv";
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::string out_path;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  require(a.format == "csv" || a.format == "json" || a.format == "text", "--format must be csv, json or text");
  std::vector<std::pair<std::size_t, std::size_t>> reds;
  if (!a.r.empty()) {
    require(a.ri.empty() && a.rf.empty(), "--r conflicts with --ri/--rf");
    for (auto r : parse_range(a.r)) reds.push_back({r, r});
  } else {
    require(!a.ri.empty() && !a.rf.empty(), "give --r, or both --ri and --rf");
    for (auto ri : parse_range(a.ri))
      for (auto rf : parse_range(a.rf)) reds.push_back({ri, rf});
  }
  const std::vector<std::string> header{"family", "k_i",   "r_i",   "r_f",     "lambda",    "q",
                                        "read",   "write", "bound", "optimal", "per_symbol"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& fname : split(a.families, ','))
    for (auto lambda : parse_range(a.lambda))
      for (const auto& [ri, rf] : reds)
        for (auto k : parse_range(a.k)) {
          const FamilyChoice fam = parse_family_choice(fname);
          const MergeParams p{k, ri, rf, lambda};
          std::vector<std::string> row{fam.name(), num(k), num(ri), num(rf), num(lambda)};
          try {
            const FieldChoice fc = auto_field(fam, p);
            const FieldSpec f = FieldSpec::of_order(fc.q);
            if (fam.piggyback) {
              const auto rep = verify_bandwidth_optimal(build_vector_pair(bw_params(p), f), a.trials, a.seed);
              row.insert(row.end(), {num(fc.q), num(rep.read), num(rep.write), num(rep.bound_read + rep.bound_write),
                                     rep.optimal ? "true" : "false", "n/a"});
            } else {
              const ConvertiblePair pair = build_scalar(fam, p, f);
              const AccessReport rep = verify_access_optimal(pair, a.trials, a.seed);
              row.insert(row.end(), {num(fc.q), num(rep.reads), num(rep.writes), num(rep.bound),
                                     rep.passed ? "true" : "false", rep.per_symbol ? "true" : "false"});
            }
          } catch (const PreconditionError&) {
            row.insert(row.end(), 6, "n/a");
          }
          rows.push_back(std::move(row));
        }

  std::ostringstream s;
  if (a.format == "csv") {
    for (std::size_t c = 0; c < header.size(); ++c) s << (c ? "," : "") << header[c];
    s << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) s << (c ? "," : "") << row[c];
      s << "\n";
    }
  } else if (a.format == "json") {
    Json j = Json::array();
    for (const auto& row : rows) {
      Json o = Json::object();
      for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string& v = row[c];
        if (v == "true" || v == "false")
          o[header[c]] = v == "true";
        else if (c > 0 && v != "n/a")
          o[header[c]] = std::stoull(v);
        else
          o[header[c]] = v;
      }
      j.push_back(std::move(o));
    }
    s << j.dump(2) << "\n";
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c + 1 < cells.size(); ++c)
        s << std::left << std::setw(static_cast<int>(width[c] + 2)) << cells[c];
      s << cells.back() << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
  write_output(a.out_path, s.str(), out);
  return kExitOk;
}

}  // namespace

std::string FamilyChoice::name() const {
  if (piggyback) return "piggyback";
  std::string n = family_tag(family);
  if ((family == Family::kSubgroupMult || family == Family::kSubgroupAdd) && variant != Variant::kBase)
    n += "-" + variant_tag(variant);
  return n;
}

FamilyChoice parse_family_choice(const std::string& name, const std::string& variant_override) {
  FamilyChoice c;
  std::string base = name;
  if (name == "piggyback") {
    c.piggyback = true;
    return c;
  }
  if (name.size() > 2 && name.rfind("-A") == name.size() - 2) {
    c.variant = Variant::kA;
    base = name.substr(0, name.size() - 2);
  } else if (name.size() > 2 && name.rfind("-B") == name.size() - 2) {
    c.variant = Variant::kB;
    base = name.substr(0, name.size() - 2);
  }
  c.family = parse_family(base);
  if (!variant_override.empty()) c.variant = parse_variant(variant_override);
  require(c.variant == Variant::kBase || c.family == Family::kSubgroupMult || c.family == Family::kSubgroupAdd,
          "variants apply only to the subgroup families");
  return c;
}

FieldChoice auto_field(const FamilyChoice& fam, const MergeParams& p) {
  if (fam.piggyback) {
    const BwParams b = bw_params(p);
    b.validate();
    return search("q >= n_f - 1 = " + num(b.n_f() - 1), static_cast<std::uint32_t>(b.n_f() - 1),
                  [](std::uint32_t) { return true; });
  }
  p.validate();
  const std::size_t k = p.k_i;
  switch (fam.family) {
    case Family::kSubgroupMult: {
      const std::size_t drop = fam.variant == Variant::kBase ? 0 : (fam.variant == Variant::kA ? 1 : 2);
      require(p.r_i > drop, "subgroup size must be positive");
      const std::size_t s = p.r_i - drop;
      require(p.lambda <= s, "lambda must not exceed the subgroup size " + num(s));
      require(p.access_optimal_regime(), "needs r_f <= min(k_i, r_i)");
      const std::uint64_t need = (k + 1) * s + 1;
      return search("q >= (k+1)s + 1 = " + num(need) + " and s = " + num(s) + " dividing q - 1",
                    static_cast<std::uint32_t>(std::min<std::uint64_t>(need, FieldSpec::kMaxOrder + 1)),
                    [s](std::uint32_t q) { return (q - 1) % s == 0; });
    }
    case Family::kSubgroupAdd: {
      require(fam.variant != Variant::kB, "the additive family has no variant B");
      const std::size_t s = p.r_i - (fam.variant == Variant::kA ? 1 : 0);
      const auto [sp, u] = prime_power_decompose(s);
      require(s >= 2 && sp != 0, "additive subgroup order " + num(s) + " is not a prime power");
      require(p.lambda <= s, "lambda must not exceed the subgroup size " + num(s));
      require(p.access_optimal_regime(), "needs r_f <= min(k_i, r_i)");
      const std::uint64_t need = (k + 1) * s;
      return search("q = p^m >= (k+1)s = " + num(need) + " with s = " + num(s) + " = p^u, u < m",
                    static_cast<std::uint32_t>(std::min<std::uint64_t>(need, FieldSpec::kMaxOrder + 1)),
                    [sp = sp, s](std::uint32_t q) { return prime_power_decompose(q).first == sp && q > s; });
    }
    case Family::kGrs:
    case Family::kGrsDoublyExtended: {
      require(p.access_optimal_regime(), "needs r_f <= min(k_i, r_i)");
      const bool ext = fam.family == Family::kGrsDoublyExtended;
      const std::uint64_t need = std::max(k + p.r_i, p.k_f() + p.r_f) - (ext ? 1 : 0);
      return search(std::string("q >= max{k + r_i, lambda k + r_f}") + (ext ? " - 1" : "") + " = " + num(need),
                    static_cast<std::uint32_t>(std::min<std::uint64_t>(need, FieldSpec::kMaxOrder + 1)),
                    [](std::uint32_t) { return true; });
    }
    case Family::kGrsTriplyExtended: {
      require(p.r_i == 3 && p.r_f == 3 && k >= 3, "triply-extended pair needs r_i = r_f = 3 <= k_i");
      const std::uint64_t need = p.k_f() + 1;
      return search("q = 2^m >= lambda k + 1 = " + num(need),
                    static_cast<std::uint32_t>(std::min<std::uint64_t>(need, FieldSpec::kMaxOrder + 1)),
                    [](std::uint32_t q) { return (q & (q - 1)) == 0; });
    }
    case Family::kDefault: {
      const std::uint64_t need = std::max(p.n_i(), p.n_f());
      return search("q >= max{n_i, n_f} = " + num(need),
                    static_cast<std::uint32_t>(std::min<std::uint64_t>(need, FieldSpec::kMaxOrder + 1)),
                    [](std::uint32_t) { return true; });
    }
  }
  throw PreconditionError("unknown family");
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  auto to_num = [&](const std::string& s) {
    std::size_t used = 0;
    std::size_t v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == s.size() && !s.empty(), "bad range item '" + s + "' in '" + text + "'");
    return v;
  };
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_num(item));
      continue;
    }
    const std::size_t lo = to_num(item.substr(0, dots)), hi = to_num(item.substr(dots + 2));
    require(lo <= hi, "empty range '" + item + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, convert and verify MDS convertible codes", "convcode"};
  app.require_subcommand(1);

  CommonArgs construct_args;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "build a code pair and print its JSON descriptor");
  add_param_flags(construct, construct_args);
  construct->add_option("--out", construct_out, "output file (default stdout)");

  ConvertArgs convert_args;
  auto* conv = app.add_subcommand("convert", "convert codewords with a stored pair");
  conv->add_option("--pair", convert_args.pair_path, "pair descriptor JSON")->required();
  conv->add_option("--messages", convert_args.messages_path, "JSON file with lambda messages");
  conv->add_flag("--random", convert_args.random, "draw messages from the seeded generator");
  conv->add_option("--seed", convert_args.seed, "generator seed");
  conv->add_flag("--default", convert_args.use_default, "re-encode instead of the optimized plan");
  conv->add_option("--out", convert_args.out_path, "write the conversion JSON here");
  conv->add_flag("--json", convert_args.json, "print JSON instead of the table");

  std::string verify_pair;
  std::size_t verify_trials = 20;
  std::uint64_t verify_seed = 1;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "run the brute-force and optimality checks on a pair");
  ver->add_option("--pair", verify_pair, "pair descriptor JSON")->required();
  ver->add_option("--trials", verify_trials, "random conversion trials");
  ver->add_option("--seed", verify_seed, "generator seed");
  ver->add_flag("--json", verify_json, "print JSON instead of the table");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "tabulate field sizes and costs over parameter ranges");
  sweep->add_option("--family", sweep_args.families, "comma-separated families");
  sweep->add_option("--k", sweep_args.k, "k_i range");
  sweep->add_option("--r", sweep_args.r, "r range (r_i = r_f)");
  sweep->add_option("--ri", sweep_args.ri, "r_i range");
  sweep->add_option("--rf", sweep_args.rf, "r_f range");
  sweep->add_option("--lambda", sweep_args.lambda, "lambda range");
  sweep->add_option("--format", sweep_args.format, "csv, json or text");
  sweep->add_option("--trials", sweep_args.trials, "conversion trials per cell");
  sweep->add_option("--seed", sweep_args.seed, "generator seed");
  sweep->add_option("--out", sweep_args.out_path, "output file (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_args, construct_out, out, err);
    if (conv->parsed()) return cmd_convert(convert_args, out);
    if (ver->parsed()) return cmd_verify(verify_pair, verify_trials, verify_seed, verify_json, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, out);
  } catch (const InconsistentDataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace convcode
