/**
 * @file serialize.hpp
 * @brief JSON (de)serialization for theta matrices, integer matrices, algebra
 *        elements, and the structured check reports emitted by the CLI.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "nct/algebra.hpp"

namespace nct {

using json = nlohmann::json;

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("mat_from_json: expected array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<size_t>(i)].size()) != cols)
      throw std::invalid_argument("mat_from_json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = j[static_cast<size_t>(i)][static_cast<size_t>(k)].get<double>();
  }
  return m;
}

/// Load a theta matrix from {"theta": [[...]]} or a bare row array.
inline SkewMatrix load_theta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_theta: cannot open " + path);
  json j;
  in >> j;
  return SkewMatrix(mat_from_json(j.contains("theta") ? j["theta"] : j), 1e-9);
}

inline json element_to_json(const AlgebraElement& a) {
  json coeffs = json::array();
  for (const auto& [l, v] : a.coeffs())
    coeffs.push_back({{"l", l}, {"re", v.real()}, {"im", v.imag()}});
  return {{"theta", mat_to_json(a.theta().mat())}, {"coeffs", coeffs}};
}

/// One verification check in a suite report.
struct CheckRecord {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline json record_to_json(const CheckRecord& r) {
  std::ostringstream res;
  res.precision(6);
  res << std::scientific << r.residual;
  return {{"id", r.id},
          {"residual", res.str()},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

}  // namespace nct
