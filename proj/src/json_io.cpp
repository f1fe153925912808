#include "ginv/json_io.hpp"

#include "ginv/error.hpp"

namespace ginv {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(m.field()));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"field", std::string(field_name(m.field()))}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw Error(ErrorCode::ParseError, "matrix dimension must be >= 1");
    const Field field = parse_field(j.at("field").get<std::string>());
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n) throw Error(ErrorCode::ParseError, "entries must have n rows");
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = entries[i];
      if (!row.is_array() || row.size() != n) throw Error(ErrorCode::ParseError, "matrix must be square");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = Scalar::parse(row[k].get<std::string>(), field);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json inverse_result_to_json(const InverseResult& r) {
  nlohmann::json j = {{"kind", std::string(kind_tag(r.kind))},
                      {"k", r.k_used},
                      {"value", matrix_to_json(r.value)},
                      {"verified", r.verified}};
  if (r.witness_wd) j["witness_wd"] = matrix_to_json(*r.witness_wd);
  return j;
}

}  // namespace ginv
