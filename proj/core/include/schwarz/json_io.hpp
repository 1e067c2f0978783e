#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "schwarz/types.hpp"

// Wire format shared by every serialized object: complex scalars are
// [re, im] pairs (a bare number is accepted as a real scalar on input),
// vectors are arrays of scalars, matrices are arrays of rows.
namespace schwarz::json_io {

using nlohmann::json;

json to_json(Complex c);
json to_json(const ComplexVector& z);
json to_json(const RealVector& x);
json to_json(const ComplexMatrix& m);

/// `path` is the JSON pointer of `j`, used in SchemaError messages.
Complex complex_from(const json& j, const std::string& path);
ComplexVector vector_from(const json& j, const std::string& path);
ComplexMatrix matrix_from(const json& j, const std::string& path);
double number_from(const json& j, const std::string& path);
long long integer_from(const json& j, const std::string& path);
const json& member(const json& obj, const std::string& key, const std::string& path);

/// Throws Error(SchemaError) with the pointer prefixed.
[[noreturn]] void schema_error(const std::string& path, const std::string& message);

}  // namespace schwarz::json_io
