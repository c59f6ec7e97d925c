#pragma once

#include <nlohmann/json.hpp>

#include "breadthlab/camina.hpp"
#include "breadthlab/groupcorr.hpp"
#include "breadthlab/normal_form.hpp"

namespace breadthlab {

using nlohmann::json;

/// {"kind":"finite","p":3,"n":2,"modulus":[1,0,1]} or {"kind":"rational"}.
json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// Finite: canonical index. Q: integer, or "num/den".
json elem_to_json(const FieldElem& x);
FieldElem elem_from_json(const Field& f, const json& j);
json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const json& j, std::size_t expected);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

/// {"field":…, "dim":n, "brackets":[[i,j,[[k,c],…]],…]} with i < j, 0-based.
json algebra_to_json(const LieAlgebra& l);
/// Symmetrises and validates; throws Parse on malformed or non-Lie input.
LieAlgebra algebra_from_json(const json& j);

/// {"field":…, "m_plus_1":g, "basis":[[c_e12,…],…]}.
json ideal_to_json(const Subspace& s, std::size_t g);
/// `fallback` is used when the document has no "field" entry. Returns the generator count in `g`.
Subspace ideal_from_json(const json& j, const Field& fallback, std::size_t& g);

json certificate_to_json(const RankSubspaceCertificate& c);
RankSubspaceCertificate certificate_from_json(const json& j);

json breadth_type_to_json(const BreadthType& t);
json generator_map_to_json(const GeneratorMap& m);
json normal_form_to_json(const NormalFormResult& r);
json classification_to_json(const Classification& c);
json conjugate_type_to_json(const ConjugateType& t);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace breadthlab
