// src/json_io.cpp

// Copyright 2026  The framemult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "framemult/json_io.hpp"

#include <string>

#include "framemult/error.hpp"

namespace framemult {
namespace json_io {

namespace {

[[noreturn]] void Fail(const std::string &what) { throw Error(ErrorCode::kParse, what); }

const Json &Field(const Json &j, const char *name) {
  if (!j.is_object()) Fail("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) Fail(std::string("missing field '") + name + "'");
  return *it;
}

double Number(const Json &j, const char *what) {
  if (!j.is_number()) Fail(std::string(what) + " must be a number");
  return j.get<double>();
}

long Count(const Json &j, const char *what) {
  if (!j.is_number_integer() || j.get<long>() < 1)
    Fail(std::string(what) + " must be a positive integer");
  return j.get<long>();
}

RealVector RealsFromJson(const Json &j, const char *what) {
  if (!j.is_array()) Fail(std::string(what) + " must be an array");
  RealVector v(static_cast<long>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = Number(j[i], what);
  return v;
}

Json RealsToJson(const RealVector &v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

// b x L template from a list of L vectors of length b.
ComplexMatrix TemplateFromJson(const Json &j, long block_dim, const char *what) {
  if (!j.is_array() || j.empty()) Fail(std::string(what) + " must be a non-empty array of vectors");
  ComplexMatrix t(block_dim, static_cast<long>(j.size()));
  for (std::size_t n = 0; n < j.size(); ++n) {
    ComplexVector v = VectorFromJson(j[n]);
    if (v.size() != block_dim) Fail(std::string(what) + ": vector length differs from block_dim");
    t.col(static_cast<long>(n)) = v;
  }
  return t;
}

Json TemplateToJson(const ComplexMatrix &t) {
  Json out = Json::array();
  for (long n = 0; n < t.cols(); ++n) out.push_back(VectorToJson(t.col(n)));
  return out;
}

Json GeometricToJson(const GeometricTerm &g) {
  return Json{{"first", ComplexToJson(g.first)}, {"ratio", ComplexToJson(g.ratio)}};
}

GeometricTerm GeometricFromJson(const Json &j) {
  return GeometricTerm{ComplexFromJson(Field(j, "first")), ComplexFromJson(Field(j, "ratio"))};
}

}  // namespace

Json Parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

Json ComplexToJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex ComplexFromJson(const Json &j) {
  if (!j.is_array() || j.size() != 2) Fail("complex numbers are [re, im] arrays");
  return Complex(Number(j[0], "real part"), Number(j[1], "imaginary part"));
}

Json VectorToJson(const ComplexVector &v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(ComplexToJson(v(i)));
  return out;
}

ComplexVector VectorFromJson(const Json &j) {
  if (!j.is_array()) Fail("vectors are arrays of [re, im]");
  ComplexVector v(static_cast<long>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = ComplexFromJson(j[i]);
  return v;
}

Json MatrixToJson(const ComplexMatrix &a) {
  Json out = Json::array();
  for (long i = 0; i < a.rows(); ++i) out.push_back(VectorToJson(a.row(i).transpose()));
  return out;
}

Json FrameToJson(const FiniteFrame &frame) {
  Json vectors = Json::array();
  for (long n = 0; n < frame.count(); ++n) vectors.push_back(VectorToJson(frame.vector(n)));
  return Json{{"dim", frame.dim()}, {"vectors", std::move(vectors)}};
}

FiniteFrame FrameFromJson(const Json &j) {
  const long dim = Count(Field(j, "dim"), "dim");
  const Json &vectors = Field(j, "vectors");
  if (!vectors.is_array() || vectors.empty()) Fail("'vectors' must be a non-empty array");
  ComplexMatrix syn(dim, static_cast<long>(vectors.size()));
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    ComplexVector v = VectorFromJson(vectors[n]);
    if (v.size() != dim)
      Fail("vector " + std::to_string(n) + " has length " + std::to_string(v.size()) +
           ", expected dim = " + std::to_string(dim));
    syn.col(static_cast<long>(n)) = v;
  }
  return FiniteFrame(std::move(syn));
}

Json SymbolToJson(const Symbol &m) { return Json{{"values", VectorToJson(m.values())}}; }

Symbol SymbolFromJson(const Json &j) {
  const Json &values = Field(j, "values");
  if (!values.is_array() || values.empty()) Fail("'values' must be a non-empty array");
  return Symbol(VectorFromJson(values));
}

Json SystemToJson(const ExampleSystem &sys) {
  if (const auto *inter = std::get_if<InterleavedSystem>(&sys)) {
    return Json{{"kind", "geometric-interleave"},
                {"recurrent_index", inter->recurrent_index},
                {"phi", GeometricToJson(inter->phi)},
                {"psi", GeometricToJson(inter->psi)},
                {"m", GeometricToJson(inter->m)},
                {"transient",
                 {{"phi", ComplexToJson(inter->transient_phi)},
                  {"psi", ComplexToJson(inter->transient_psi)},
                  {"m", ComplexToJson(inter->transient_m)}}},
                {"ratio_bound", inter->ratio_bound}};
  }
  const auto &block = std::get<BlockSystem>(sys);
  if (!block.has_metadata())
    throw Error(ErrorCode::kInvalidArgument, "custom block systems are not serializable");
  Json out{{"kind", GeneratorKindName(block.kind())},
           {"block_dim", block.block_dim()},
           {"phi", TemplateToJson(block.base().phi)},
           {"psi", TemplateToJson(block.base().psi)},
           {"m", VectorToJson(block.base().m)}};
  if (block.kind() == GeneratorKind::kHarmonicWeight) {
    out["phi_exponents"] = RealsToJson(block.phi_exponents());
    out["psi_exponents"] = RealsToJson(block.psi_exponents());
    out["m_exponents"] = RealsToJson(block.m_exponents());
  }
  return out;
}

ExampleSystem SystemFromJson(const Json &j) {
  const Json &kind = Field(j, "kind");
  if (!kind.is_string()) Fail("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "geometric-interleave") {
      InterleavedSystem s;
      s.recurrent_index = Count(Field(j, "recurrent_index"), "recurrent_index");
      s.phi = GeometricFromJson(Field(j, "phi"));
      s.psi = GeometricFromJson(Field(j, "psi"));
      s.m = GeometricFromJson(Field(j, "m"));
      const Json &t = Field(j, "transient");
      s.transient_phi = ComplexFromJson(Field(t, "phi"));
      s.transient_psi = ComplexFromJson(Field(t, "psi"));
      s.transient_m = ComplexFromJson(Field(t, "m"));
      s.ratio_bound = Number(Field(j, "ratio_bound"), "ratio_bound");
      return s;
    }
    if (k == "constant-template" || k == "harmonic-weight") {
      const long b = Count(Field(j, "block_dim"), "block_dim");
      BlockTemplate t{TemplateFromJson(Field(j, "phi"), b, "phi"),
                      TemplateFromJson(Field(j, "psi"), b, "psi"),
                      VectorFromJson(Field(j, "m"))};
      if (k == "constant-template") return BlockSystem::ConstantTemplate(std::move(t));
      return BlockSystem::HarmonicWeight(std::move(t),
                                         RealsFromJson(Field(j, "phi_exponents"), "phi_exponents"),
                                         RealsFromJson(Field(j, "psi_exponents"), "psi_exponents"),
                                         RealsFromJson(Field(j, "m_exponents"), "m_exponents"));
    }
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kParse) throw;
    Fail(std::string("invalid block system: ") + e.what());
  }
  Fail("unknown generator kind '" + k + "'");
}

}  // namespace json_io
}  // namespace framemult
