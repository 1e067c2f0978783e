#include "schwarz/json_io.hpp"

#include <cmath>

#include "schwarz/error.hpp"

namespace schwarz::json_io {

void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::SchemaError, (path.empty() ? std::string("/") : path) + ": " + message);
}

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const ComplexVector& z) {
  json out = json::array();
  for (Eigen::Index j = 0; j < z.size(); ++j) out.push_back(to_json(z[j]));
  return out;
}

json to_json(const RealVector& x) {
  json out = json::array();
  for (Eigen::Index j = 0; j < x.size(); ++j) out.push_back(x[j]);
  return out;
}

json to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

double number_from(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "number is not finite");
  return v;
}

long long integer_from(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<long long>();
}

Complex complex_from(const json& j, const std::string& path) {
  if (j.is_number()) return {number_from(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) schema_error(path, "expected [re, im] or a number");
  return {number_from(j[0], path + "/0"), number_from(j[1], path + "/1")};
}

ComplexVector vector_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of scalars");
  ComplexVector z(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    z[static_cast<Eigen::Index>(k)] = complex_from(j[k], path + "/" + std::to_string(k));
  }
  return z;
}

ComplexMatrix matrix_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  ComplexMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const ComplexVector row = vector_from(j[i], path + "/" + std::to_string(i));
    if (cols < 0) {
      cols = row.size();
      m.resize(rows, cols);
    } else if (row.size() != cols) {
      schema_error(path + "/" + std::to_string(i), "ragged matrix row");
    }
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "/" + key, "missing required field");
  return *it;
}

}  // namespace schwarz::json_io
