#pragma once

#include <json.hpp>

#include "casson/engine.hpp"

namespace casson::io {

// All wire formats. Documents are nlohmann ordered_json so key order is
// fixed and output is byte-identical for identical inputs. Integers are
// emitted as JSON numbers when they fit in 64 bits and as decimal strings
// otherwise; both are accepted on input.
//
//   homology vector   [c_1, ..., c_2g]            (a_1..a_g, b_1..b_g)
//   matrix            [[row], ...]                row-major
//   cube vector       [{"triple":[i,j,k],"coeff":n}, ...]   i<j<k, 0-based
//   word file         {"genus":g, "factors":[factor, ...]}
//   factor            {"type":"general","c":[...],"power":n}
//                     {"type":"sep","power":n,"F":f?}
//                     {"type":"bp","spine":[{"x":[...],"y":[...]}],
//                      "c":[...],"power":n}
//                     {"type":"conj","by":[[...]],"inner":factor}
//     plus optional "side":"TA"|"TB" and "F":n annotations per factor;
//     each factor becomes one block of the annotated word.
//   seifert file      {"seifert":[[...], ...]}

using json = nlohmann::ordered_json;

json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& what);

json vector_to_json(const HomologyVector& v);
HomologyVector vector_from_json(int genus, const json& j,
                                const std::string& what);

json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const json& j, const std::string& what);

json cube_to_json(const ExteriorCubeVector& v);
ExteriorCubeVector cube_from_json(int genus, const json& j,
                                  const std::string& what);

json annotated_word_to_json(const AnnotatedWord& w);
AnnotatedWord annotated_word_from_json(const json& j);

/// The same document read as a bare word, annotations ignored.
TwistWord word_from_json(const json& j);

SeifertMatrix seifert_from_json(const json& j);

json laurent_to_json(const LaurentPolynomial& p);
/// Human-readable form like "t^-1 - 1 + t".
std::string laurent_to_string(const LaurentPolynomial& p);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace casson::io
