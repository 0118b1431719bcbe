#pragma once

#include "oglat/catalog.hpp"
#include "oglat/int_types.hpp"
#include "oglat/lattice.hpp"
#include "oglat/matrix.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace oglat {

// Matrix JSON form: {"rows": r, "cols": c, "entries": ["d", ...]} with entries
// as decimal strings in row-major order.
inline nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(m(i, k).str());
  j["entries"] = std::move(entries);
  return j;
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON: need rows, cols, entries");
  std::size_t rows = j["rows"].get<std::size_t>();
  std::size_t cols = j["cols"].get<std::size_t>();
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    throw std::invalid_argument("matrix JSON: entries size mismatch");
  IntMatrix m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& e = entries[idx++];
      if (e.is_string())
        m(i, k) = Int(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, k) = Int(e.get<long long>());
      else
        throw std::invalid_argument("matrix JSON: entry must be a decimal string");
    }
  return m;
}

// Lattice JSON form: {"label": optional string, "gram": matrix}.
inline nlohmann::ordered_json lattice_to_json(const Lattice& a) {
  nlohmann::ordered_json j;
  if (a.label()) j["label"] = *a.label();
  j["gram"] = matrix_to_json(a.gram());
  return j;
}

inline Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.contains("gram")) throw std::invalid_argument("lattice JSON: missing gram");
  std::optional<std::string> label;
  if (j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
  return Lattice(matrix_from_json(j["gram"]), label);
}

inline Lattice lattice_by_name(const std::string& name) {
  if (name == "u") return make_U();
  if (name == "a2") return make_A2();
  if (name == "e8") return make_E8();
  if (name == "og10") return make_OG10_L();
  if (name == "leech") return make_leech();
  if (name == "lambda125") return make_lambda_1_25();
  throw std::invalid_argument("unknown lattice name: " + name);
}

inline Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  return lattice_from_json(j);
}

// Isometry JSON form: {"lattice": lattice JSON or name string, "matrix": matrix}.
struct IsometryInput {
  Lattice lattice;
  IntMatrix matrix;
};

inline IsometryInput isometry_from_json(const nlohmann::json& j) {
  if (!j.contains("lattice") || !j.contains("matrix"))
    throw std::invalid_argument("isometry JSON: need lattice and matrix");
  Lattice lat = j["lattice"].is_string() ? lattice_by_name(j["lattice"].get<std::string>())
                                         : lattice_from_json(j["lattice"]);
  return IsometryInput{std::move(lat), matrix_from_json(j["matrix"])};
}

inline IsometryInput load_isometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  return isometry_from_json(j);
}

}  // namespace oglat
