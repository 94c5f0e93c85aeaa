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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convcode/access_convert.hpp"
#include "convcode/bw_convert.hpp"
#include "convcode/json_io.hpp"

namespace py = pybind11;
using namespace convcode;

namespace {

FieldSpec make_field(std::uint32_t q, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!modulus) return FieldSpec::of_order(q);
  const auto [p, m] = prime_power_decompose(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return FieldSpec::extension(p, m, *modulus);
}

py::dict report_dict(const AccessReport& r) {
  py::dict d;
  d["trials"] = r.trials;
  d["reads"] = r.reads;
  d["writes"] = r.writes;
  d["bound"] = r.bound;
  d["per_symbol"] = r.per_symbol;
  d["data_independent"] = r.data_independent;
  d["conversions_correct"] = r.conversions_correct;
  d["passed"] = r.passed;
  d["failure"] = r.failure;
  return d;
}

py::dict report_dict(const BandwidthReport& r) {
  py::dict d;
  d["trials"] = r.trials;
  d["read"] = r.read;
  d["write"] = r.write;
  d["bound_read"] = r.bound_read;
  d["bound_write"] = r.bound_write;
  d["excess"] = r.excess;
  d["conversions_correct"] = r.conversions_correct;
  d["data_independent"] = r.data_independent;
  d["optimal"] = r.optimal;
  d["failure"] = r.failure;
  return d;
}

ConvertiblePair build_pair(const std::string& family, std::size_t k, std::size_t r_i, std::size_t r_f,
                           std::size_t lambda, const FieldSpec& field, const std::string& variant) {
  const MergeParams p{k, r_i, r_f, lambda};
  switch (parse_family(family)) {
    case Family::kSubgroupMult:
      return build_subgroup_mult(p, field, parse_variant(variant));
    case Family::kSubgroupAdd:
      return build_subgroup_add(p, field, parse_variant(variant));
    case Family::kGrs:
      return build_grs(p, field, false);
    case Family::kGrsDoublyExtended:
      return build_grs(p, field, true);
    case Family::kGrsTriplyExtended:
      return build_triply_extended(p, field);
    case Family::kDefault:
      return build_default(p, field);
  }
  throw PreconditionError("unknown family " + family);
}

}  // namespace

PYBIND11_MODULE(_convcode, m) {
  m.doc() = "MDS convertible codes for the merge regime";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InconsistentDataError>(m, "InconsistentDataError", PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<FieldSpec>(m, "Field")
      .def(py::init(&make_field), py::arg("q"), py::arg("modulus") = std::nullopt)
      .def_property_readonly("q", &FieldSpec::q)
      .def_property_readonly("p", &FieldSpec::p)
      .def_property_readonly("m", &FieldSpec::m)
      .def_property_readonly("modulus", &FieldSpec::modulus)
      .def("add", &FieldSpec::add)
      .def("sub", &FieldSpec::sub)
      .def("mul", &FieldSpec::mul)
      .def("inv", &FieldSpec::inv)
      .def("div", &FieldSpec::div)
      .def("pow", &FieldSpec::pow)
      .def("primitive_element", &FieldSpec::primitive_element)
      .def("__repr__", &FieldSpec::to_string);

  m.def("is_superregular", [](const FieldSpec& f, const std::vector<std::vector<Symbol>>& rows) {
    return is_superregular(Matrix::from_rows(f, rows));
  });
  m.def("cauchy", [](const FieldSpec& f, std::vector<Symbol> x, std::vector<Symbol> y) {
    return cauchy(OrderedSet(f, std::move(x)), OrderedSet(f, std::move(y))).to_rows();
  });

  py::class_<MdsCode>(m, "MdsCode")
      .def_static("systematic",
                  [](const FieldSpec& f, const std::vector<std::vector<Symbol>>& p) {
                    return MdsCode::systematic(Matrix::from_rows(f, p));
                  })
      .def_static("parity_check",
                  [](const FieldSpec& f, const std::vector<std::vector<Symbol>>& h) {
                    return MdsCode::parity_check(Matrix::from_rows(f, h));
                  })
      .def_property_readonly("n", &MdsCode::n)
      .def_property_readonly("k", &MdsCode::k)
      .def("generator_matrix", [](const MdsCode& c) { return c.generator_matrix().to_rows(); })
      .def("parity_check_matrix", [](const MdsCode& c) { return c.parity_check_matrix().to_rows(); })
      .def("encode", [](const MdsCode& c, const std::vector<Symbol>& msg) { return c.encode(msg); })
      .def("contains", [](const MdsCode& c, const std::vector<Symbol>& w) { return c.contains(w); })
      .def("decode_erasures",
           [](const MdsCode& c, const std::map<std::size_t, Symbol>& known) {
             std::vector<KnownSymbol> ks;
             for (const auto& [pos, v] : known) ks.push_back({pos, v});
             return c.decode_erasures(ks);
           })
      .def("verify_mds", &MdsCode::verify_mds);

  py::class_<ConvertiblePair>(m, "ConvertiblePair")
      .def_property_readonly("k_i", [](const ConvertiblePair& p) { return p.params.k_i; })
      .def_property_readonly("r_i", [](const ConvertiblePair& p) { return p.params.r_i; })
      .def_property_readonly("r_f", [](const ConvertiblePair& p) { return p.params.r_f; })
      .def_property_readonly("lam", [](const ConvertiblePair& p) { return p.params.lambda; })
      .def_property_readonly("family", [](const ConvertiblePair& p) { return family_tag(p.family); })
      .def_property_readonly("field", &ConvertiblePair::field)
      .def_readonly("initial_code", &ConvertiblePair::initial_code)
      .def_readonly("final_code", &ConvertiblePair::final_code)
      .def("sets",
           [](const ConvertiblePair& p) {
             py::dict d;
             for (const auto& s : p.sets) d[py::str(s.name)] = s.set.elements();
             return d;
           })
      .def("to_json", [](const ConvertiblePair& p) { return to_json(p).dump(); })
      .def_static("from_json", [](const std::string& s) { return pair_from_json(Json::parse(s)); });

  m.def("build", &build_pair, py::arg("family"), py::arg("k"), py::arg("r_i"), py::arg("r_f"), py::arg("lam"),
        py::arg("field"), py::arg("variant") = "base");

  m.def(
      "convert",
      [](const ConvertiblePair& pair, const std::vector<Codeword>& words, bool use_default) {
        const auto res = use_default ? convert_default(pair, words) : convert(pair, words);
        return py::make_tuple(res.final_codeword, res.trace.disks_read(), res.trace.disks_written);
      },
      py::arg("pair"), py::arg("codewords"), py::arg("default_plan") = false,
      "Returns (final codeword, disks read, disks written).");
  m.def("access_cost_bound", [](std::size_t k, std::size_t r_i, std::size_t r_f, std::size_t lambda) {
    return access_cost_bound({k, r_i, r_f, lambda});
  });
  m.def(
      "verify_access_optimal",
      [](const ConvertiblePair& p, std::size_t trials, std::uint64_t seed) {
        return report_dict(verify_access_optimal(p, trials, seed));
      },
      py::arg("pair"), py::arg("trials") = 20, py::arg("seed") = 1);

  py::class_<VectorCodePair>(m, "VectorCodePair")
      .def_property_readonly("alpha", [](const VectorCodePair& p) { return p.params.alpha(); })
      .def_property_readonly("field", &VectorCodePair::field)
      .def("piggyback_column", &VectorCodePair::piggyback_column)
      .def("piggyback_source", &VectorCodePair::piggyback_source)
      .def("to_json", [](const VectorCodePair& p) { return to_json(p).dump(); });

  m.def("build_vector_pair", [](std::size_t k, std::size_t r_i, std::size_t r_f, std::size_t lambda,
                                const FieldSpec& f) { return build_vector_pair({k, r_i, r_f, lambda}, f); },
        py::arg("k"), py::arg("r_i"), py::arg("r_f"), py::arg("lam"), py::arg("field"));
  m.def("bandwidth_bound", [](std::size_t k, std::size_t r_i, std::size_t r_f, std::size_t lambda) {
    const auto c = bandwidth_bound(BwParams{k, r_i, r_f, lambda});
    return py::make_tuple(c.read, c.write);
  });
  m.def("min_subpacketization", &min_subpacketization, py::arg("r_f"), py::arg("r_i"));
  m.def("vector_encode_initial", [](const VectorCodePair& p, const VectorMessage& msg) {
    return vector_encode_initial(p, msg).symbols;
  });
  m.def("vector_encode_final", [](const VectorCodePair& p, const std::vector<VectorMessage>& msgs) {
    return vector_encode_final(p, msgs).symbols;
  });
  m.def(
      "vector_convert",
      [](const VectorCodePair& p, const std::vector<std::vector<std::vector<Symbol>>>& words, bool use_default) {
        std::vector<VectorCodeword> cws;
        for (const auto& w : words) cws.push_back({p.params.alpha(), w});
        const auto res = vector_convert(p, cws, use_default ? ReadPolicy::kDefault : ReadPolicy::kOptimal);
        return py::make_tuple(res.final_codeword.symbols, res.trace.read_total, res.trace.write_total);
      },
      py::arg("pair"), py::arg("codewords"), py::arg("default_plan") = false,
      "Returns (final codeword, sub-symbols read, sub-symbols written).");
  m.def(
      "verify_bandwidth_optimal",
      [](const VectorCodePair& p, std::size_t trials, std::uint64_t seed) {
        return report_dict(verify_bandwidth_optimal(p, trials, seed));
      },
      py::arg("pair"), py::arg("trials") = 20, py::arg("seed") = 1);
}
