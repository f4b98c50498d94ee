#include "dualcanon/serialization.hpp"

#include "json.hpp"

namespace dualcanon {

namespace {

using nlohmann::json;

KMatrix part_from_json(const json& j, int n, const char* key) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(key) + " must be an array of " +
                     std::to_string(n) + " rows");
  KMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string(key) + " rows must have " +
                       std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_string())
        throw ParseError("matrix entries must be rational strings");
      try {
        m.at(i, k) = Rational::parse(row[k].get<std::string>());
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
  }
  return m;
}

json part_to_json(const KMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DualMatrix parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "n" && key != "part0" && key != "part1")
      throw ParseError("unknown key: " + key);
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (n < 1) throw ParseError("\"n\" must be positive");
  if (!doc.contains("part0") || !doc.contains("part1"))
    throw ParseError("\"part0\" and \"part1\" are required");
  return DualMatrix(part_from_json(doc["part0"], n, "part0"),
                    part_from_json(doc["part1"], n, "part1"));
}

std::string write_matrix_document(const DualMatrix& a, int indent) {
  json doc;
  doc["n"] = a.order();
  doc["part0"] = part_to_json(a.part0());
  doc["part1"] = part_to_json(a.part1());
  return doc.dump(indent);
}

std::string write_kmatrix_json(const KMatrix& a) {
  return part_to_json(a).dump();
}

}  // namespace dualcanon
